#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "trispline/rational.hpp"

namespace trispline {

// Univariate polynomial with exact rational coefficients, stored by
// ascending degree with trailing zeros trimmed.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);
  UnivariatePolynomial(std::initializer_list<Rational> coeffs);

  static UnivariatePolynomial zero() { return {}; }
  static UnivariatePolynomial constant(Rational c);
  // t^k
  static UnivariatePolynomial monomial(int k, Rational c = Rational(1));

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  Rational coeff(int k) const;

  UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
  UnivariatePolynomial scale(const Rational& s) const;
  bool operator==(const UnivariatePolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const UnivariatePolynomial& o) const { return !(*this == o); }

  UnivariatePolynomial derivative() const;

  // p(alpha*t + beta); used mostly as p(1-t) via (-1, 1).
  UnivariatePolynomial compose_affine(const Rational& alpha,
                                      const Rational& beta) const;

  Rational eval_exact(const Rational& t) const;
  double eval_f64(double t) const;  // Horner on converted coefficients

  // Quotient and remainder of exact division by d.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& d) const;
  // Division that must be exact; throws DivisibilityViolation otherwise.
  UnivariatePolynomial exact_div(const UnivariatePolynomial& d) const;

  std::vector<double> to_doubles() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace trispline
