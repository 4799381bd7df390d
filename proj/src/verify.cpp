#include "trispline/verify.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace trispline {

C1Report check_c1(const SplineField& field, int samples_per_edge) {
  C1Report rep;
  rep.samples_per_edge = samples_per_edge;
  for (const AdjacentPair& pair : adjacent_pairs(field.mesh())) {
    EdgeJump jump;
    jump.tri_i = pair.tri_i;
    jump.tri_j = pair.tri_j;
    jump.edge = pair.edge;
    jump.samples = samples_per_edge;
    const Point u = field.mesh().vertices[static_cast<std::size_t>(pair.edge.first)];
    const Point v = field.mesh().vertices[static_cast<std::size_t>(pair.edge.second)];
    for (int k = 1; k <= samples_per_edge; ++k) {
      const double t = static_cast<double>(k) / (samples_per_edge + 1);
      const Point x = u + t * (v - u);
      const EvalResult lhs = field.eval_on_triangle(pair.tri_i, x);
      const EvalResult rhs = field.eval_on_triangle(pair.tri_j, x);
      jump.max_value_jump =
          std::max(jump.max_value_jump, std::abs(lhs.value - rhs.value));
      jump.max_gradient_jump =
          std::max(jump.max_gradient_jump, norm(lhs.grad - rhs.grad));
    }
    rep.max_value_jump = std::max(rep.max_value_jump, jump.max_value_jump);
    rep.max_gradient_jump =
        std::max(rep.max_gradient_jump, jump.max_gradient_jump);
    rep.per_edge.push_back(jump);
  }
  return rep;
}

VertexConditionReport check_vertex_conditions(const SplineField& field) {
  VertexConditionReport rep;
  const Mesh& mesh = field.mesh();
  for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti) {
    for (int corner = 0; corner < 3; ++corner) {
      const int vi = mesh.triangles[static_cast<std::size_t>(ti)][static_cast<std::size_t>(corner)];
      const Point x = mesh.vertices[static_cast<std::size_t>(vi)];
      const VertexData& d = field.data()[static_cast<std::size_t>(vi)];
      const EvalResult got = field.eval_on_triangle(ti, x);
      rep.max_value_dev = std::max(rep.max_value_dev, std::abs(got.value - d.f));
      rep.max_gradient_dev = std::max(
          rep.max_gradient_dev, norm(got.grad - Vector{d.fx, d.fy}));
    }
  }
  return rep;
}

EdgeShapeReport check_edge_shape(const ProcedureConfig& cfg,
                                 const Triangle& tri, int samples) {
  EdgeShapeReport rep;
  const TriangleBasis basis(cfg, tri);
  const auto shape_profile = [&](Point from, double t_par, BasisKind kind) {
    const Point y = from + t_par * (tri.p - from);
    const double got = basis.value(kind, y);
    double want;
    if (kind == BasisKind::value) {
      want = cfg.shapes.phi.eval_f64(t_par);
    } else {
      const Vector pf = tri.p - from;
      const double cj = (kind == BasisKind::grad_x) ? pf.x : pf.y;
      want = cj * cfg.shapes.psi.eval_f64(t_par);
    }
    return std::abs(got - want);
  };
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    for (const BasisKind kind : kAllKinds) {
      rep.max_shape_dev =
          std::max({rep.max_shape_dev, shape_profile(tri.a, t, kind),
                    shape_profile(tri.b, t, kind)});
      const Point x = tri.a + t * (tri.b - tri.a);
      const EvalResult r = basis.eval(kind, x);
      rep.max_annihilation_dev = std::max(
          {rep.max_annihilation_dev, std::abs(r.value), norm(r.grad)});
    }
  }
  return rep;
}

Vector AffineMap::push_gradient(Vector g) const {
  const double d = det();
  if (std::abs(d) < 1e-300) throw SingularMap("affine map is singular");
  // (A^T)^{-1} = (1/det) [[a22, -a21], [-a12, a11]]
  return {(g.x * a22 - g.y * a12) / d, (-g.x * a21 + g.y * a11) / d};
}

AffineMap AffineMap::inverse() const {
  const double d = det();
  if (std::abs(d) < 1e-300) throw SingularMap("affine map is singular");
  AffineMap inv;
  inv.a11 = a22 / d;
  inv.a12 = -a12 / d;
  inv.a21 = -a21 / d;
  inv.a22 = a11 / d;
  inv.w = -inv.apply_linear(w);
  return inv;
}

AffineMap AffineMap::then(const AffineMap& o) const {
  AffineMap r;
  r.a11 = a11 * o.a11 + a12 * o.a21;
  r.a12 = a11 * o.a12 + a12 * o.a22;
  r.a21 = a21 * o.a11 + a22 * o.a21;
  r.a22 = a21 * o.a12 + a22 * o.a22;
  r.w = o.apply_linear(w) + o.w;
  return r;
}

AffineMap AffineMap::translation(Vector w) {
  AffineMap m;
  m.w = w;
  return m;
}

AffineMap AffineMap::rotation(double theta) {
  AffineMap m;
  m.a11 = std::cos(theta);
  m.a12 = std::sin(theta);
  m.a21 = -std::sin(theta);
  m.a22 = std::cos(theta);
  return m;
}

AffineMap AffineMap::scaling(double factor) {
  AffineMap m;
  m.a11 = m.a22 = factor;
  return m;
}

AffineMap AffineMap::reflection_x() {
  AffineMap m;
  m.a22 = -1.0;
  return m;
}

AffineMap AffineMap::shear_xy() {
  AffineMap m;
  m.a21 = 1.0;
  return m;
}

SplineField transform_field(const SplineField& field, const AffineMap& map) {
  if (std::abs(map.det()) < 1e-300) throw SingularMap("affine map is singular");
  Mesh mesh = field.mesh();
  for (auto& v : mesh.vertices) v = map.apply(v);
  std::vector<VertexData> data = field.data();
  for (auto& d : data) {
    const Vector g = map.push_gradient({d.fx, d.fy});
    d.fx = g.x;
    d.fy = g.y;
  }
  mesh.data = data;
  mesh.normalize_orientation();
  return SplineField(std::move(mesh), std::move(data), field.config());
}

InvarianceReport check_invariance(const SplineField& field,
                                  const AffineMap& map, int samples,
                                  std::uint64_t seed) {
  const SplineField mapped = transform_field(field, map);
  InvarianceReport rep;
  rep.samples = samples;
  Rng rng(seed);
  const Mesh& mesh = field.mesh();
  const int ntri = static_cast<int>(mesh.triangles.size());
  for (int k = 0; k < samples; ++k) {
    const int ti = rng.uniform_int(0, ntri - 1);
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) {  // fold into the unit simplex
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const Triangle tri = mesh.triangle_at(ti, 2);
    const Point x = tri.a + u * (tri.b - tri.a) + v * (tri.p - tri.a);
    const double here = field.value_on_triangle(ti, x);
    const double there = mapped.value_on_triangle(ti, map.apply(x));
    rep.max_dev = std::max(rep.max_dev, std::abs(here - there));
  }
  return rep;
}

double check_degree(const ProcedureConfig& cfg, const Triangle& tri,
                    BasisKind kind, int order, int chords, std::uint64_t seed) {
  if (order < 1) throw Error("check_degree: order must be >= 1");
  const TriangleBasis basis(cfg, tri);
  Rng rng(seed);
  const double min_len = 0.45 * std::sqrt(longest_edge_sq(tri));
  const Point corners[3] = {tri.a, tri.b, tri.p};
  const int m = order + 1;
  std::vector<double> binom(static_cast<std::size_t>(m) + 1, 0.0);
  binom[0] = 1.0;
  for (int i = 1; i <= m; ++i)
    for (int jj = i; jj >= 1; --jj) binom[static_cast<std::size_t>(jj)] += binom[static_cast<std::size_t>(jj - 1)];

  double residual = 0.0;
  for (int c = 0; c < chords; ++c) {
    Point p1{}, p2{};
    for (int attempt = 0; attempt < 256; ++attempt) {
      const int e1 = rng.uniform_int(0, 2);
      int e2 = rng.uniform_int(0, 1);
      if (e2 >= e1) ++e2;  // distinct edge
      const double t1 = rng.uniform(), t2 = rng.uniform();
      p1 = corners[e1] + t1 * (corners[(e1 + 1) % 3] - corners[e1]);
      p2 = corners[e2] + t2 * (corners[(e2 + 1) % 3] - corners[e2]);
      if (norm(p2 - p1) >= min_len) break;
    }
    double dd = 0.0;
    for (int k = 0; k <= m; ++k) {
      const Point q = p1 + (static_cast<double>(k) / m) * (p2 - p1);
      const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
      dd += sign * binom[static_cast<std::size_t>(k)] * basis.value(kind, q);
    }
    residual = std::max(residual, std::abs(dd));
  }
  return residual;
}

int basis_degree(const ProcedureConfig& cfg) {
  const int dphi = std::max(cfg.shapes.phi.degree(), 0);
  const int dtheta_term = std::max(cfg.shapes.theta.degree(), 0) + 1;
  return std::max(dphi, dtheta_term);
}

Vector fd_gradient(const std::function<double(Point)>& f, Point x, double h) {
  const double fx =
      (f({x.x + h, x.y}) - f({x.x - h, x.y})) / (2.0 * h);
  const double fy =
      (f({x.x, x.y + h}) - f({x.x, x.y - h})) / (2.0 * h);
  return {fx, fy};
}

std::string report_to_json(const std::string& check, const C1Report& rep,
                           double tolerance) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["max_jump"] = rep.max_gradient_jump;
  j["max_value_jump"] = rep.max_value_jump;
  j["samples_per_edge"] = rep.samples_per_edge;
  j["per_edge"] = nlohmann::json::array();
  for (const auto& e : rep.per_edge) {
    nlohmann::ordered_json je;
    je["edge"] = {e.edge.first, e.edge.second};
    je["triangles"] = {e.tri_i, e.tri_j};
    je["max_value_jump"] = e.max_value_jump;
    je["max_gradient_jump"] = e.max_gradient_jump;
    j["per_edge"].push_back(je);
  }
  j["pass"] = rep.pass(tolerance);
  j["tolerance"] = tolerance;
  return j.dump(2);
}

std::string report_to_json(const std::string& check, double max_dev, bool pass,
                           double tolerance) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["max_jump"] = max_dev;
  j["per_edge"] = nlohmann::json::array();
  j["pass"] = pass;
  j["tolerance"] = tolerance;
  return j.dump(2);
}

}  // namespace trispline
