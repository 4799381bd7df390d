#pragma once

#include <cmath>

#include "trispline/error.hpp"

namespace trispline {

// Planar primitives. Points and vectors are row vectors; the quarter-turn
// matrix R = [[0,1],[-1,0]] acts by right multiplication, v -> vR.

struct Vector {
  double x = 0.0;
  double y = 0.0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Vector operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Vector v) { return {a.x + v.x, a.y + v.y}; }
inline Vector operator+(Vector a, Vector b) { return {a.x + b.x, a.y + b.y}; }
inline Vector operator-(Vector a, Vector b) { return {a.x - b.x, a.y - b.y}; }
inline Vector operator*(double s, Vector v) { return {s * v.x, s * v.y}; }
inline Vector operator-(Vector v) { return {-v.x, -v.y}; }

inline double dot(Vector a, Vector b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vector v) { return std::hypot(v.x, v.y); }
inline double norm_sq(Vector v) { return dot(v, v); }
inline double det(Vector a, Vector b) { return a.x * b.y - b.x * a.y; }

// v -> vR with R = [[0,1],[-1,0]]: (x,y) -> (-y,x).  Orthogonal to v,
// same length.
inline Vector rot90(Vector v) { return {-v.y, v.x}; }

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(Point p) { return is_finite(p.x) && is_finite(p.y); }
inline bool is_finite(Vector v) { return is_finite(v.x) && is_finite(v.y); }

// Triangle with distinguished vertex p (the vertex the cardinal basis
// functions single out).
struct Triangle {
  Point a, b, p;
};

struct BarycentricTriple {
  double lam_a = 0.0;
  double lam_b = 0.0;
  double lam_p = 0.0;
};

// Degeneracy and coincidence thresholds are relative to triangle scale.
inline constexpr double kAreaEpsRel = 1e-12;  // vs (longest edge)^2
inline constexpr double kLenEpsRel = 1e-12;
inline constexpr double kLocEps = 1e-9;  // membership slack for locate

double signed_area(const Triangle& t);
double longest_edge_sq(const Triangle& t);
bool is_degenerate(const Triangle& t);

// Barycentric coordinates via the inner-product form
//   lam^p(x) = <(b-a)R | x-a> / <(b-a)R | p-a>
// (better conditioned than the determinant ratio for thin triangles).
// Throws DegenerateTriangle.
BarycentricTriple barycentric(const Triangle& t, Point x);

// Same coordinates via the determinant-ratio form; kept as a cross-check.
BarycentricTriple barycentric_determinant(const Triangle& t, Point x);

struct BarycentricGradients {
  Vector grad_a, grad_b, grad_p;  // constant over the triangle
};

// grad lam^w_{u,v} = (u-v)R / <(u-v)R | w-u>.  The three gradients sum to
// zero and each is orthogonal to the opposite edge.
BarycentricGradients barycentric_gradients(const Triangle& t);

struct FrameCoords {
  double xi = 0.0;
  double xibar = 0.0;
};

// Affine coordinates of v in the orthogonal frame spanned by (p-a) and
// (p-a)R with origin a:  v = a + xi*(p-a) + xibar*(p-a)R.
// Throws CoincidentPoints when p == a.
FrameCoords frame_coords(Point p, Point a, Point v);

}  // namespace trispline
