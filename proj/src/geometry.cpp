#include "trispline/geometry.hpp"

#include <algorithm>

namespace trispline {

double signed_area(const Triangle& t) {
  return 0.5 * det(t.b - t.a, t.p - t.a);
}

double longest_edge_sq(const Triangle& t) {
  return std::max({norm_sq(t.b - t.a), norm_sq(t.p - t.a), norm_sq(t.p - t.b)});
}

bool is_degenerate(const Triangle& t) {
  return std::abs(signed_area(t)) <= kAreaEpsRel * longest_edge_sq(t);
}

static void require_non_degenerate(const Triangle& t) {
  if (is_degenerate(t)) throw DegenerateTriangle("degenerate triangle");
}

BarycentricTriple barycentric(const Triangle& t, Point x) {
  require_non_degenerate(t);
  const auto coord = [&x](Point u, Point v, Point w) {
    // lam^w relative to edge (u,v)
    const Vector n = rot90(v - u);
    return dot(n, x - u) / dot(n, w - u);
  };
  BarycentricTriple lam;
  lam.lam_p = coord(t.a, t.b, t.p);
  lam.lam_a = coord(t.b, t.p, t.a);
  lam.lam_b = coord(t.p, t.a, t.b);
  return lam;
}

BarycentricTriple barycentric_determinant(const Triangle& t, Point x) {
  require_non_degenerate(t);
  const auto coord = [&x](Point u, Point v, Point w) {
    return det(x - u, x - v) / det(w - u, w - v);
  };
  BarycentricTriple lam;
  lam.lam_p = coord(t.a, t.b, t.p);
  lam.lam_a = coord(t.b, t.p, t.a);
  lam.lam_b = coord(t.p, t.a, t.b);
  return lam;
}

BarycentricGradients barycentric_gradients(const Triangle& t) {
  require_non_degenerate(t);
  const auto grad = [](Point u, Point v, Point w) {
    const Vector n = rot90(u - v);
    return (1.0 / dot(n, w - u)) * n;
  };
  BarycentricGradients g;
  g.grad_p = grad(t.a, t.b, t.p);
  g.grad_a = grad(t.b, t.p, t.a);
  g.grad_b = grad(t.a, t.p, t.b);
  return g;
}

FrameCoords frame_coords(Point p, Point a, Point v) {
  const Vector d = p - a;
  const double len2 = norm_sq(d);
  const double scale2 = std::max({len2, norm_sq(v - a), 1e-300});
  if (len2 <= kLenEpsRel * kLenEpsRel * scale2)
    throw CoincidentPoints("frame_coords: p and a coincide");
  return {dot(v - a, d) / len2, dot(v - a, rot90(d)) / len2};
}

}  // namespace trispline
