#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trispline/spline.hpp"

namespace trispline {

// Fixed seed used by every randomized check unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20201127ULL;

// Frozen tolerances; test meshes are scaled to diameter ~1 so absolute and
// relative readings coincide.
inline constexpr double kC1Tol = 1e-9;
inline constexpr double kVertexTol = 1e-10;
inline constexpr double kShapeTol = 1e-11;
inline constexpr double kInvarianceTol = 1e-9;
inline constexpr double kShearMinDeviation = 1e-3;
inline constexpr double kDegreeTol = 1e-7;

// Deterministic uniform generator on top of mt19937_64 (the standard
// distributions are not bit-stable across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() {  // [0,1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// ---- C1 conformity across interior edges ----

struct EdgeJump {
  int tri_i = -1, tri_j = -1;
  Edge edge;
  double max_value_jump = 0.0;
  double max_gradient_jump = 0.0;  // Euclidean norm of the difference
  int samples = 0;
};

struct C1Report {
  std::vector<EdgeJump> per_edge;
  double max_value_jump = 0.0;
  double max_gradient_jump = 0.0;
  int samples_per_edge = 0;
  bool pass(double tol = kC1Tol) const {
    return max_gradient_jump <= tol && max_value_jump <= tol;
  }
};

// Evaluates value and gradient from both incident triangles at
// samples_per_edge interior points of every interior edge.
C1Report check_c1(const SplineField& field, int samples_per_edge);

// ---- interpolation conditions at the vertices ----

struct VertexConditionReport {
  double max_value_dev = 0.0;
  double max_gradient_dev = 0.0;
};

// Deviation of the spline (from every incident triangle) against the
// prescribed data at each vertex.
VertexConditionReport check_vertex_conditions(const SplineField& field);

// ---- edge-shape uniformity of the basic functions ----

struct EdgeShapeReport {
  double max_shape_dev = 0.0;         // phi/psi profile deviation on a->p, b->p
  double max_annihilation_dev = 0.0;  // value+gradient residue on Co{a,b}
  double max_dev() const {
    return std::max(max_shape_dev, max_annihilation_dev);
  }
};

// Along the p-adjacent edges checks phi(y_t) = Phi(t) and
// psi_j(y_t) = x_j(p-a) Psi(t); on the opposite edge checks that values and
// gradients of all three basic functions vanish.
EdgeShapeReport check_edge_shape(const ProcedureConfig& cfg,
                                 const Triangle& tri, int samples = 20);

// ---- invariance under affine maps ----

// Row-vector convention: G(x) = x A + w.
struct AffineMap {
  double a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  Vector w{0, 0};

  double det() const { return a11 * a22 - a12 * a21; }
  Point apply(Point x) const {
    return {x.x * a11 + x.y * a21 + w.x, x.x * a12 + x.y * a22 + w.y};
  }
  Vector apply_linear(Vector v) const {
    return {v.x * a11 + v.y * a21, v.x * a12 + v.y * a22};
  }
  // Gradient pushforward g -> g (A^T)^{-1} (the chain rule for row
  // gradients; equals g A^{-1} only for symmetric A).
  Vector push_gradient(Vector g) const;
  AffineMap inverse() const;  // throws SingularMap
  // this followed by o
  AffineMap then(const AffineMap& o) const;

  static AffineMap identity() { return {}; }
  static AffineMap translation(Vector w);
  static AffineMap rotation(double theta);
  static AffineMap scaling(double factor);
  static AffineMap reflection_x();  // through the x-axis
  static AffineMap shear_xy();      // A = [[1,0],[1,1]]
};

// Transformed problem: mesh mapped through G, gradients pushed forward.
SplineField transform_field(const SplineField& field, const AffineMap& map);

struct InvarianceReport {
  double max_dev = 0.0;
  int samples = 0;
};

// Compares f(x) against the transformed field at G(x) for seeded interior
// sample points.
InvarianceReport check_invariance(const SplineField& field,
                                  const AffineMap& map, int samples,
                                  std::uint64_t seed = kDefaultSeed);

// ---- polynomial degree probe ----

// Maximum magnitude of the (order+1)-th forward difference of the basic
// function over order+2 equally spaced points on seeded chords (endpoints
// on two distinct edges, length >= 0.45 * longest edge).  Zero up to
// rounding iff the polynomial degree is <= order.
double check_degree(const ProcedureConfig& cfg, const Triangle& tri,
                    BasisKind kind, int order, int chords = 20,
                    std::uint64_t seed = kDefaultSeed);

// Highest polynomial degree the configuration can produce (k/R excluded).
int basis_degree(const ProcedureConfig& cfg);

// ---- finite-difference oracle ----

Vector fd_gradient(const std::function<double(Point)>& f, Point x, double h);

// ---- JSON report rendering ----

std::string report_to_json(const std::string& check, const C1Report& rep,
                           double tolerance);
std::string report_to_json(const std::string& check, double max_dev, bool pass,
                           double tolerance);

}  // namespace trispline
