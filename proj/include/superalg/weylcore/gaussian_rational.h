#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace superalg {

using Rational = mpq_class;

/// Parses "7", "-3/4" or "0.125" into an exact rational.
Rational parse_rational(const std::string& text);

/// "num" or "num/den", lowest terms.
std::string to_string(const Rational& q);

/// Element of Q(i): re + im * i, both parts exact.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussianRational(long v) : re_(v) {}
  GaussianRational(int v) : re_(v) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Parseable form: "3/2", "-i", "2*i", "(1/2 + 3*i)".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace superalg
