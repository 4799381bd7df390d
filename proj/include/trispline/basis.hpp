#pragma once

#include <array>
#include <functional>

#include "trispline/bivariate.hpp"
#include "trispline/geometry.hpp"
#include "trispline/shape.hpp"

namespace trispline {

// Basic-function selector for a triangle with distinguished vertex p:
// i=0 is the value function (cardinal 1 at p), i=1,2 are the gradient
// functions (cardinal gradient e1/e2 at p).
enum class BasisKind : int { value = 0, grad_x = 1, grad_y = 2 };

inline int index(BasisKind k) { return static_cast<int>(k); }
constexpr std::array<BasisKind, 3> kAllKinds = {
    BasisKind::value, BasisKind::grad_x, BasisKind::grad_y};

// Free option (ii): polynomial k^{i,p}_c per (i, distinguished p, paired
// vertex c).  Must be deterministic: identical inputs yield identical
// polynomials.
using KProvider =
    std::function<UnivariatePolynomial(int i, Point p, Point c)>;

KProvider zero_k();
// One polynomial per i, used for every point pair.
KProvider uniform_k(std::array<UnivariatePolynomial, 3> per_kind);

// Free option (iii): bivariate polynomial R^{i,p}_{q,r} per point triple,
// subject to R^{i,p}_{q,r}(s,t) == R^{i,p}_{r,q}(t,s).  The symmetry is
// enforced at construction by averaging the raw map with its mirror.
class RProvider {
 public:
  using Fn = std::function<BivariatePoly(int i, Point p, Point q, Point r)>;

  RProvider() = default;  // identically zero
  explicit RProvider(Fn raw) : raw_(std::move(raw)) {}

  static RProvider uniform(std::array<BivariatePoly, 3> per_kind);

  BivariatePoly operator()(int i, Point p, Point q, Point r) const;

 private:
  Fn raw_;
};

// Test-only switch reproducing the pairing of the xi coefficients as it
// appears in the minimal-scheme display.  'standard' (the expansion of the
// general correction formulas) is C1-conforming; 'swapped_xi' exchanges
// which frame coordinate multiplies which edge term and produces gradient
// jumps across edges.  Never exposed on the CLI.
enum class CorrectionPairing { standard, swapped_xi };

// The full free-option tuple of the classified family.
struct ProcedureConfig {
  ShapeFamily shapes;
  KProvider k = zero_k();
  RProvider r;
  CorrectionPairing pairing = CorrectionPairing::standard;

  static ProcedureConfig minimal();
  static ProcedureConfig family(const UnivariatePolynomial& phi1,
                                const UnivariatePolynomial& psi1);
};

struct EvalResult {
  double value = 0.0;
  Vector grad;
};

// Correction polynomials of the basic functions (the bracket multiplying
// lam_p^2 lam_a lam_b), with arguments (s,t) = (lam_b, lam_a):
//   P(s,t)   = s{xi_a A(s) + xibar_a k^0_b(s)} + t{xi_b A(t) + xibar_b k^0_a(t)} + st R^0
//   Q_j(s,t) = s{xi_a x_j(b-p) B(s) + xibar_a k^j_b(s)}
//            + t{xi_b x_j(a-p) B(t) + xibar_b k^j_a(t)} + st R^j
// where xi_a = xi^a_{p,b}, xi_b = xi^b_{p,a} and A, B are the rational-free
// shape profiles.  Minimal config: P = 30[s xi_a + t xi_b].
BivariatePoly correction_P(const ProcedureConfig& cfg, const Triangle& tri);
BivariatePoly correction_Q(const ProcedureConfig& cfg, const Triangle& tri,
                           int j);

// Per-triangle evaluator with the corrections and barycentric gradients
// precomputed.  Immutable after construction; safe to share across threads.
class TriangleBasis {
 public:
  TriangleBasis(const ProcedureConfig& cfg, const Triangle& tri);

  double value(BasisKind kind, Point x) const;
  Vector gradient(BasisKind kind, Point x) const;
  EvalResult eval(BasisKind kind, Point x) const;

  const Triangle& triangle() const { return tri_; }

 private:
  Triangle tri_;
  BarycentricGradients g_;
  std::vector<double> phi_, dphi_, theta_, dtheta_;
  std::array<BivariatePoly, 3> corr_;
  std::array<BivariatePoly, 3> corr_ds_, corr_dt_;
};

// One-shot conveniences (build a TriangleBasis internally).
double basis_value(const ProcedureConfig& cfg, const Triangle& tri,
                   BasisKind kind, Point x);
Vector basis_gradient(const ProcedureConfig& cfg, const Triangle& tri,
                      BasisKind kind, Point x);

// Closed-form gradient along the edge a->p at y_t = (1-t)a + tp,
//   x_i((1-t)(a-p)) [Phi_i]'(t) grad_lam_p + Phi_i(t) e_i
//     + t^2(1-t) P_i(0, 1-t) grad_lam_b,
// used as an independent oracle against basis_gradient.
Vector edge_gradient_reference(const ProcedureConfig& cfg, const Triangle& tri,
                               BasisKind kind, double t);

}  // namespace trispline
