#include "superalg/qalg/numeric.h"

namespace superalg::qalg {

std::optional<Rational> Scalar<Rational>::sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  Rational c = x;
  c.canonicalize();
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), c.get_den_mpz_t());
  return Rational(num, den);
}

namespace {

void validate(bool c1_positive, bool c3_ok, bool c4_ok) {
  if (!c1_positive) throw std::invalid_argument("c1 must be positive");
  if (!c3_ok) throw std::invalid_argument("4*c3 + 1 must be non-negative");
  if (!c4_ok) throw std::invalid_argument("4*c4 + 1 must be non-negative");
}

}  // namespace

ModelParamsNumeric params_from_couplings(double c1, double c2, double c3, double c4) {
  validate(c1 > 0, 4 * c3 + 1 >= 0, 4 * c4 + 1 >= 0);
  return {std::sqrt(c1), c2, std::sqrt(4 * c3 + 1), std::sqrt(4 * c4 + 1)};
}

std::optional<ModelParamsExact> exact_params_from_couplings(const Rational& c1, const Rational& c2, const Rational& c3,
                                                            const Rational& c4) {
  const Rational s3 = 4 * c3 + 1, s4 = 4 * c4 + 1;
  validate(sgn(c1) > 0, sgn(s3) >= 0, sgn(s4) >= 0);
  auto m1 = Scalar<Rational>::sqrt(c1);
  auto m3 = Scalar<Rational>::sqrt(s3);
  auto m4 = Scalar<Rational>::sqrt(s4);
  if (!m1 || !m3 || !m4) return std::nullopt;
  return ModelParamsExact{*m1, c2, *m3, *m4};
}

ModelParamsNumeric to_numeric(const ModelParamsExact& p) {
  return {p.m1.get_d(), p.m2.get_d(), p.m3.get_d(), p.m4.get_d()};
}

template <class T>
T evaluate_coefficient(const Coefficient& c, const std::array<T, 4>& couplings) {
  T out(0);
  for (const auto& [mono, value] : c.terms()) {
    if (sgn(value.im()) != 0) throw std::domain_error("coefficient is not real: " + c.to_string());
    T term = Scalar<T>::from(value.re());
    for (int k = 0; k < 4; ++k)
      for (int e = 0; e < mono.exponents[k]; ++e) term *= couplings[k];
    out += term;
  }
  return out;
}

template Rational evaluate_coefficient<Rational>(const Coefficient&, const std::array<Rational, 4>&);
template double evaluate_coefficient<double>(const Coefficient&, const std::array<double, 4>&);

}  // namespace superalg::qalg
