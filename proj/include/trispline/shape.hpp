#pragma once

#include <string>
#include <vector>

#include "trispline/polynomial.hpp"

namespace trispline {

// The classified shape-function family.  Every admissible pair is
//   phi(t) = t^3(10-15t+6t^2) + t^3(1-t)^3 phi1(t)
//   psi(t) = t^3(t-1)(4-3t)   + t^3(1-t)^3 psi1(t)
// with arbitrary polynomial perturbations phi1, psi1.  Derived members:
//   theta(t)  = psi(t)/(t-1)                (a polynomial)
//   a_poly(t) = phi'(1-t)   / [t^2(1-t)^2]  (a polynomial; 30 when phi1=0)
//   b_poly(t) = theta'(1-t) / [t(1-t)^2]    (a polynomial; 12 when psi1=0)
// a_poly/b_poly are the rational-free correction profiles used when
// assembling the per-triangle basis polynomials.
struct ShapeFamily {
  UnivariatePolynomial phi1, psi1;
  UnivariatePolynomial phi, psi, theta;
  UnivariatePolynomial a_poly, b_poly;
};

// Minimal-scheme shape functions (the unique degree-5 pair).
UnivariatePolynomial phi_star();    // t^3(10-15t+6t^2)
UnivariatePolynomial psi_star();    // -4t^3+7t^4-3t^5
UnivariatePolynomial theta_star();  // psi*/(t-1) = t^3(4-3t)

// Perturbations are accepted up to degree 16; larger ones risk 128-bit
// overflow and are rejected with IntegerOverflow.  The exact divisions
// constructing theta/a_poly/b_poly are guaranteed to succeed for family
// members; a remainder raises DivisibilityViolation (internal bug).
inline constexpr int kMaxPerturbationDegree = 16;

ShapeFamily make_shape_family(const UnivariatePolynomial& phi1,
                              const UnivariatePolynomial& psi1);
ShapeFamily minimal_shape_family();

struct ShapeConstraintReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass = true;
};

// Checks the endpoint conditions
//   phi(0)=psi(0)=phi'(0)=psi'(0)=psi(1)=0,  phi(1)=psi'(1)=1
// exactly in rational arithmetic.
ShapeConstraintReport verify_shape_constraints(const ShapeFamily& f);

// JSON wire format for polynomials: array of [numerator, denominator]
// pairs by ascending degree, e.g. t/2 <-> [[0,1],[1,2]].
std::string polynomial_to_json(const UnivariatePolynomial& p);
UnivariatePolynomial polynomial_from_json(const std::string& json_text);

}  // namespace trispline
