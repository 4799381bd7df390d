#include "trispline/shape.hpp"

#include <nlohmann/json.hpp>

namespace trispline {

namespace {

const Rational kZero(0);
const Rational kOne(1);

// t^3 (1-t)^3
UnivariatePolynomial bump_cubed() {
  const UnivariatePolynomial t3 = UnivariatePolynomial::monomial(3);
  const UnivariatePolynomial omt({1, -1});  // 1 - t
  return t3 * omt * omt * omt;
}

}  // namespace

UnivariatePolynomial phi_star() {
  // t^3 (10 - 15t + 6t^2)
  return UnivariatePolynomial({0, 0, 0, 10, -15, 6});
}

UnivariatePolynomial psi_star() {
  // t^3 (t-1)(4-3t) = -4t^3 + 7t^4 - 3t^5
  return UnivariatePolynomial({0, 0, 0, -4, 7, -3});
}

UnivariatePolynomial theta_star() {
  // t^3 (4 - 3t)
  return UnivariatePolynomial({0, 0, 0, 4, -3});
}

ShapeFamily make_shape_family(const UnivariatePolynomial& phi1,
                              const UnivariatePolynomial& psi1) {
  if (phi1.degree() > kMaxPerturbationDegree ||
      psi1.degree() > kMaxPerturbationDegree)
    throw IntegerOverflow("perturbation degree exceeds supported maximum (16)");

  ShapeFamily f;
  f.phi1 = phi1;
  f.psi1 = psi1;
  const UnivariatePolynomial bump = bump_cubed();
  f.phi = phi_star() + bump * phi1;
  f.psi = psi_star() + bump * psi1;

  // theta = psi/(t-1); psi(1)=0 makes the division exact.
  f.theta = f.psi.exact_div(UnivariatePolynomial({-1, 1}));

  // a_poly = phi'(1-t) / [t^2 (1-t)^2], b_poly = theta'(1-t) / [t (1-t)^2];
  // divisibility is what characterizes admissible shape functions.
  const UnivariatePolynomial t1 = UnivariatePolynomial::monomial(1);
  const UnivariatePolynomial omt({1, -1});
  const UnivariatePolynomial phi_d_rev =
      f.phi.derivative().compose_affine(Rational(-1), Rational(1));
  f.a_poly = phi_d_rev.exact_div(t1 * t1 * omt * omt);
  const UnivariatePolynomial theta_d_rev =
      f.theta.derivative().compose_affine(Rational(-1), Rational(1));
  f.b_poly = theta_d_rev.exact_div(t1 * omt * omt);
  return f;
}

ShapeFamily minimal_shape_family() {
  return make_shape_family(UnivariatePolynomial::zero(),
                           UnivariatePolynomial::zero());
}

ShapeConstraintReport verify_shape_constraints(const ShapeFamily& f) {
  ShapeConstraintReport rep;
  const UnivariatePolynomial dphi = f.phi.derivative();
  const UnivariatePolynomial dpsi = f.psi.derivative();
  const auto add = [&rep](std::string name, bool pass) {
    rep.items.push_back({std::move(name), pass});
    rep.all_pass = rep.all_pass && pass;
  };
  add("Phi(0)=0", f.phi.eval_exact(kZero) == kZero);
  add("Psi(0)=0", f.psi.eval_exact(kZero) == kZero);
  add("Phi'(0)=0", dphi.eval_exact(kZero) == kZero);
  add("Psi'(0)=0", dpsi.eval_exact(kZero) == kZero);
  add("Psi(1)=0", f.psi.eval_exact(kOne) == kZero);
  add("Phi(1)=1", f.phi.eval_exact(kOne) == kOne);
  add("Psi'(1)=1", dpsi.eval_exact(kOne) == kOne);
  return rep;
}

std::string polynomial_to_json(const UnivariatePolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs())
    arr.push_back({c.num_i64(), c.den_i64()});
  return arr.dump();
}

UnivariatePolynomial polynomial_from_json(const std::string& json_text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError("polynomial: expected an array");
  std::vector<Rational> coeffs;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw ParseError("polynomial: expected [numerator, denominator] pairs");
    coeffs.emplace_back(pair[0].get<std::int64_t>(),
                        pair[1].get<std::int64_t>());
  }
  return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace trispline
