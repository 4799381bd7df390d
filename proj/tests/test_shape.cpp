#include <doctest.h>

#include "trispline/shape.hpp"
#include "trispline/verify.hpp"

using namespace trispline;

namespace {

UnivariatePolynomial random_perturbation(Rng& rng, int max_deg) {
  std::vector<Rational> c;
  for (int i = 0; i <= rng.uniform_int(0, max_deg); ++i)
    c.emplace_back(rng.uniform_int(-5, 5));
  return UnivariatePolynomial(std::move(c));
}

}  // namespace

TEST_CASE("minimal shape functions") {
  CHECK(phi_star() == UnivariatePolynomial({0, 0, 0, 10, -15, 6}));
  CHECK(psi_star() == UnivariatePolynomial({0, 0, 0, -4, 7, -3}));
  CHECK(phi_star().eval_exact(Rational(0)) == Rational(0));
  CHECK(phi_star().eval_exact(Rational(1)) == Rational(1));
  CHECK(phi_star().eval_exact(Rational(1, 2)) == Rational(1, 2));
  CHECK(phi_star().eval_exact(Rational(1, 4)) == Rational(53, 512));
  CHECK(psi_star().eval_exact(Rational(0)) == Rational(0));
  CHECK(psi_star().eval_exact(Rational(1)) == Rational(0));
  CHECK(psi_star().derivative().eval_exact(Rational(1)) == Rational(1));
  CHECK(psi_star().eval_exact(Rational(1, 2)) == Rational(-5, 32));
  // theta* = psi*/(t-1) = t^3(4-3t)
  CHECK(theta_star() == psi_star().exact_div(UnivariatePolynomial({-1, 1})));
  CHECK(theta_star().eval_exact(Rational(1)) == Rational(1));
}

TEST_CASE("minimal family: constants 30 and 12") {
  const ShapeFamily f = minimal_shape_family();
  CHECK(f.phi == phi_star());
  CHECK(f.psi == psi_star());
  CHECK(f.theta == theta_star());
  CHECK(f.a_poly == UnivariatePolynomial({30}));
  CHECK(f.b_poly == UnivariatePolynomial({12}));
}

TEST_CASE("minimal identities, coefficient level") {
  const UnivariatePolynomial one({1});
  const UnivariatePolynomial t = UnivariatePolynomial::monomial(1);
  const auto rev = [](const UnivariatePolynomial& p) {
    return p.compose_affine(Rational(-1), Rational(1));
  };
  CHECK(phi_star() + rev(phi_star()) == one);
  CHECK(phi_star() + psi_star() - rev(psi_star()) == t);
}

TEST_CASE("family with unit perturbations") {
  SUBCASE("phi1 = 1 adds the cubic bump") {
    const ShapeFamily f = make_shape_family(UnivariatePolynomial({1}),
                                            UnivariatePolynomial::zero());
    const UnivariatePolynomial t3 = UnivariatePolynomial::monomial(3);
    const UnivariatePolynomial omt({1, -1});
    CHECK(f.phi == phi_star() + t3 * omt * omt * omt);
    CHECK(verify_shape_constraints(f).all_pass);
  }
  SUBCASE("psi1 = 1 gives theta = t^3[(4-3t) - (1-t)^2]") {
    const ShapeFamily f = make_shape_family(UnivariatePolynomial::zero(),
                                            UnivariatePolynomial({1}));
    const UnivariatePolynomial t3 = UnivariatePolynomial::monomial(3);
    const UnivariatePolynomial want =
        t3 * (UnivariatePolynomial({4, -3}) - UnivariatePolynomial({1, -2, 1}));
    CHECK(f.theta == want);
  }
  SUBCASE("phi1 = t^7, psi1 = -3t^2 still satisfies the endpoint conditions") {
    const ShapeFamily f = make_shape_family(
        UnivariatePolynomial::monomial(7),
        UnivariatePolynomial::monomial(2, Rational(-3)));
    CHECK(verify_shape_constraints(f).all_pass);
  }
}

TEST_CASE("constraint report flags a constructed violation") {
  ShapeFamily f = minimal_shape_family();
  f.phi = f.phi.scale(Rational(2));  // now phi(1) = 2
  const auto rep = verify_shape_constraints(f);
  CHECK_FALSE(rep.all_pass);
  bool saw = false;
  for (const auto& item : rep.items)
    if (item.name == "Phi(1)=1") {
      saw = true;
      CHECK_FALSE(item.pass);
    }
  CHECK(saw);
}

TEST_CASE("random families: divisibility facts and printed expansions") {
  Rng rng(kDefaultSeed + 7);
  const UnivariatePolynomial t1 = UnivariatePolynomial::monomial(1);
  const UnivariatePolynomial omt({1, -1});
  const auto rev = [](const UnivariatePolynomial& p) {
    return p.compose_affine(Rational(-1), Rational(1));
  };
  for (int trial = 0; trial < 20; ++trial) {
    const UnivariatePolynomial phi1 = random_perturbation(rng, 4);
    const UnivariatePolynomial psi1 = random_perturbation(rng, 4);
    const ShapeFamily f = make_shape_family(phi1, psi1);

    CHECK(verify_shape_constraints(f).all_pass);
    CHECK(f.theta * UnivariatePolynomial({-1, 1}) == f.psi);
    CHECK(f.a_poly * (t1 * t1 * omt * omt) == rev(f.phi.derivative()));
    CHECK(f.b_poly * (t1 * omt * omt) == rev(f.theta.derivative()));

    // A(t) = 30 - 3(1-2t) phi1(1-t) + t(1-t) phi1'(1-t); the exact-division
    // construction is authoritative, the expansion a cross-check.
    const UnivariatePolynomial a_printed =
        UnivariatePolynomial({30}) -
        UnivariatePolynomial({1, -2}).scale(Rational(3)) * rev(phi1) +
        t1 * omt * rev(phi1.derivative());
    CHECK(f.a_poly == a_printed);
    // B(t) = 12 + (2-5t) psi1(1-t) - t(1-t) psi1'(1-t)
    const UnivariatePolynomial b_printed =
        UnivariatePolynomial({12}) +
        UnivariatePolynomial({2, -5}) * rev(psi1) -
        t1 * omt * rev(psi1.derivative());
    CHECK(f.b_poly == b_printed);
  }
}

TEST_CASE("perturbation degree cap") {
  CHECK_THROWS_AS(make_shape_family(UnivariatePolynomial::monomial(17),
                                    UnivariatePolynomial::zero()),
                  IntegerOverflow);
  CHECK_NOTHROW(make_shape_family(UnivariatePolynomial::monomial(16),
                                  UnivariatePolynomial::zero()));
}
