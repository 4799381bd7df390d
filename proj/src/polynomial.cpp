#include "trispline/polynomial.hpp"

#include <algorithm>

namespace trispline {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<Rational> coeffs)
    : c_(coeffs) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(Rational c) {
  return UnivariatePolynomial({std::move(c)});
}

UnivariatePolynomial UnivariatePolynomial::monomial(int k, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UnivariatePolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

UnivariatePolynomial UnivariatePolynomial::operator+(
    const UnivariatePolynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-(
    const UnivariatePolynomial& o) const {
  return *this + o.scale(Rational(-1));
}

UnivariatePolynomial UnivariatePolynomial::operator*(
    const UnivariatePolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::scale(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& v : r) v *= s;
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * Rational(static_cast<std::int64_t>(i));
  return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::compose_affine(
    const Rational& alpha, const Rational& beta) const {
  // Horner: p(q) with q = alpha*t + beta
  const UnivariatePolynomial q({beta, alpha});
  UnivariatePolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * q + constant(*it);
  return acc;
}

Rational UnivariatePolynomial::eval_exact(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UnivariatePolynomial::eval_f64(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + it->to_double();
  return acc;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial>
UnivariatePolynomial::divmod(const UnivariatePolynomial& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  const Rational lead = d.c_.back();
  if (static_cast<int>(rem.size()) - 1 < dd)
    return {UnivariatePolynomial{}, UnivariatePolynomial(std::move(rem))};
  std::vector<Rational> quo(rem.size() - static_cast<std::size_t>(dd),
                            Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / lead;
    if (f.is_zero()) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= f * d.coeff(j);
  }
  return {UnivariatePolynomial(std::move(quo)),
          UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::exact_div(
    const UnivariatePolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero())
    throw DivisibilityViolation("exact polynomial division left a remainder");
  return q;
}

std::vector<double> UnivariatePolynomial::to_doubles() const {
  std::vector<double> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].to_double();
  return r;
}

}  // namespace trispline
