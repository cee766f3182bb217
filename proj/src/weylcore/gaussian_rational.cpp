#include "superalg/weylcore/gaussian_rational.h"

#include <cctype>

namespace superalg {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) throw std::invalid_argument("malformed rational literal: " + text);

  Rational value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational literal: " + text);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in " + text);
    value = Rational(mpz_class(num, 10), d);
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal literal: " + text);
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    mpz_class num(whole + frac, 10);
    value = Rational(num, scale);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed rational literal: " + text);
    value = Rational(mpz_class(body, 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return superalg::to_string(re_);
  auto imag_part = [](const Rational& q) -> std::string {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return superalg::to_string(q) + "*i";
  };
  if (sgn(re_) == 0) return imag_part(im_);
  std::string out = "(" + superalg::to_string(re_);
  if (sgn(im_) < 0) {
    out += " - " + imag_part(Rational(-im_));
  } else {
    out += " + " + imag_part(im_);
  }
  return out + ")";
}

}  // namespace superalg
