#include "trispline/basis.hpp"

namespace trispline {

namespace {

std::vector<double> scaled(std::vector<double> v, double f) {
  for (auto& x : v) x *= f;
  return v;
}

std::vector<double> added(std::vector<double> a, const std::vector<double>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

double eval_poly(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

struct XiPair {
  double xi_a, xibar_a;  // xi^a_{p,b}
  double xi_b, xibar_b;  // xi^b_{p,a}
};

XiPair frame_pair(const ProcedureConfig& cfg, const Triangle& tri) {
  const FrameCoords fa = frame_coords(tri.p, tri.b, tri.a);
  const FrameCoords fb = frame_coords(tri.p, tri.a, tri.b);
  XiPair x{fa.xi, fa.xibar, fb.xi, fb.xibar};
  if (cfg.pairing == CorrectionPairing::swapped_xi) std::swap(x.xi_a, x.xi_b);
  return x;
}

}  // namespace

KProvider zero_k() {
  return [](int, Point, Point) { return UnivariatePolynomial::zero(); };
}

KProvider uniform_k(std::array<UnivariatePolynomial, 3> per_kind) {
  return [per_kind = std::move(per_kind)](int i, Point, Point) {
    return per_kind[static_cast<std::size_t>(i)];
  };
}

RProvider RProvider::uniform(std::array<BivariatePoly, 3> per_kind) {
  return RProvider([per_kind = std::move(per_kind)](int i, Point, Point, Point) {
    return per_kind[static_cast<std::size_t>(i)];
  });
}

BivariatePoly RProvider::operator()(int i, Point p, Point q, Point r) const {
  if (!raw_) return BivariatePoly();
  const BivariatePoly direct = raw_(i, p, q, r);
  const BivariatePoly mirrored = raw_(i, p, r, q).swapped();
  return (direct + mirrored).scaled(0.5);
}

ProcedureConfig ProcedureConfig::minimal() {
  return ProcedureConfig{minimal_shape_family(), zero_k(), RProvider{},
                         CorrectionPairing::standard};
}

ProcedureConfig ProcedureConfig::family(const UnivariatePolynomial& phi1,
                                        const UnivariatePolynomial& psi1) {
  return ProcedureConfig{make_shape_family(phi1, psi1), zero_k(), RProvider{},
                         CorrectionPairing::standard};
}

BivariatePoly correction_P(const ProcedureConfig& cfg, const Triangle& tri) {
  if (is_degenerate(tri)) throw DegenerateTriangle("correction_P");
  const XiPair x = frame_pair(cfg, tri);
  const std::vector<double> a_poly = cfg.shapes.a_poly.to_doubles();
  const std::vector<double> k0b = cfg.k(0, tri.p, tri.b).to_doubles();
  const std::vector<double> k0a = cfg.k(0, tri.p, tri.a).to_doubles();
  return BivariatePoly::times_s(added(scaled(a_poly, x.xi_a), scaled(k0b, x.xibar_a))) +
         BivariatePoly::times_t(added(scaled(a_poly, x.xi_b), scaled(k0a, x.xibar_b))) +
         BivariatePoly::times_st(cfg.r(0, tri.p, tri.a, tri.b));
}

BivariatePoly correction_Q(const ProcedureConfig& cfg, const Triangle& tri,
                           int j) {
  if (is_degenerate(tri)) throw DegenerateTriangle("correction_Q");
  const XiPair x = frame_pair(cfg, tri);
  const Vector bp = tri.b - tri.p;
  const Vector ap = tri.a - tri.p;
  const double xj_b = (j == 1) ? bp.x : bp.y;
  const double xj_a = (j == 1) ? ap.x : ap.y;
  const std::vector<double> b_poly = cfg.shapes.b_poly.to_doubles();
  const std::vector<double> kjb = cfg.k(j, tri.p, tri.b).to_doubles();
  const std::vector<double> kja = cfg.k(j, tri.p, tri.a).to_doubles();
  return BivariatePoly::times_s(
             added(scaled(b_poly, x.xi_a * xj_b), scaled(kjb, x.xibar_a))) +
         BivariatePoly::times_t(
             added(scaled(b_poly, x.xi_b * xj_a), scaled(kja, x.xibar_b))) +
         BivariatePoly::times_st(cfg.r(j, tri.p, tri.a, tri.b));
}

TriangleBasis::TriangleBasis(const ProcedureConfig& cfg, const Triangle& tri)
    : tri_(tri), g_(barycentric_gradients(tri)) {
  phi_ = cfg.shapes.phi.to_doubles();
  dphi_ = cfg.shapes.phi.derivative().to_doubles();
  theta_ = cfg.shapes.theta.to_doubles();
  dtheta_ = cfg.shapes.theta.derivative().to_doubles();
  corr_[0] = correction_P(cfg, tri);
  corr_[1] = correction_Q(cfg, tri, 1);
  corr_[2] = correction_Q(cfg, tri, 2);
  for (int i = 0; i < 3; ++i) {
    corr_ds_[static_cast<std::size_t>(i)] = corr_[static_cast<std::size_t>(i)].partial_s();
    corr_dt_[static_cast<std::size_t>(i)] = corr_[static_cast<std::size_t>(i)].partial_t();
  }
}

double TriangleBasis::value(BasisKind kind, Point x) const {
  const BarycentricTriple lam = barycentric(tri_, x);
  const int i = index(kind);
  const double corr = corr_[static_cast<std::size_t>(i)].eval(lam.lam_b, lam.lam_a);
  const double bubble = lam.lam_p * lam.lam_p * lam.lam_a * lam.lam_b;
  if (kind == BasisKind::value)
    return eval_poly(phi_, lam.lam_p) + bubble * corr;
  const double xjp = (kind == BasisKind::grad_x) ? x.x - tri_.p.x : x.y - tri_.p.y;
  return eval_poly(theta_, lam.lam_p) * xjp + bubble * corr;
}

Vector TriangleBasis::gradient(BasisKind kind, Point x) const {
  const BarycentricTriple lam = barycentric(tri_, x);
  const int i = index(kind);
  const double s = lam.lam_b, t = lam.lam_a, lp = lam.lam_p;
  const double corr = corr_[static_cast<std::size_t>(i)].eval(s, t);
  const double cs = corr_ds_[static_cast<std::size_t>(i)].eval(s, t);
  const double ct = corr_dt_[static_cast<std::size_t>(i)].eval(s, t);

  Vector grad = (2.0 * lp * t * s * corr) * g_.grad_p +
                (lp * lp * s * corr) * g_.grad_a +
                (lp * lp * t * corr) * g_.grad_b +
                (lp * lp * t * s) * (cs * g_.grad_b + ct * g_.grad_a);
  if (kind == BasisKind::value) {
    grad = grad + eval_poly(dphi_, lp) * g_.grad_p;
  } else {
    const double xjp = (kind == BasisKind::grad_x) ? x.x - tri_.p.x : x.y - tri_.p.y;
    grad = grad + (eval_poly(dtheta_, lp) * xjp) * g_.grad_p;
    const Vector e = (kind == BasisKind::grad_x) ? Vector{1, 0} : Vector{0, 1};
    grad = grad + eval_poly(theta_, lp) * e;
  }
  return grad;
}

EvalResult TriangleBasis::eval(BasisKind kind, Point x) const {
  return {value(kind, x), gradient(kind, x)};
}

double basis_value(const ProcedureConfig& cfg, const Triangle& tri,
                   BasisKind kind, Point x) {
  return TriangleBasis(cfg, tri).value(kind, x);
}

Vector basis_gradient(const ProcedureConfig& cfg, const Triangle& tri,
                      BasisKind kind, Point x) {
  return TriangleBasis(cfg, tri).gradient(kind, x);
}

Vector edge_gradient_reference(const ProcedureConfig& cfg, const Triangle& tri,
                               BasisKind kind, double t) {
  if (is_degenerate(tri)) throw DegenerateTriangle("edge_gradient_reference");
  const BarycentricGradients g = barycentric_gradients(tri);
  const BivariatePoly corr = (kind == BasisKind::value)
                                 ? correction_P(cfg, tri)
                                 : correction_Q(cfg, tri, index(kind));
  const double corr0 = corr.eval(0.0, 1.0 - t);

  double shape_v, shape_d, xi_factor;
  Vector e{0, 0};
  if (kind == BasisKind::value) {
    shape_v = cfg.shapes.phi.eval_f64(t);
    shape_d = cfg.shapes.phi.derivative().eval_f64(t);
    xi_factor = 1.0;
  } else {
    shape_v = cfg.shapes.theta.eval_f64(t);
    shape_d = cfg.shapes.theta.derivative().eval_f64(t);
    const Vector ap = tri.a - tri.p;
    xi_factor = (1.0 - t) * ((kind == BasisKind::grad_x) ? ap.x : ap.y);
    e = (kind == BasisKind::grad_x) ? Vector{1, 0} : Vector{0, 1};
  }
  return (xi_factor * shape_d) * g.grad_p + shape_v * e +
         (t * t * (1.0 - t) * corr0) * g.grad_b;
}

}  // namespace trispline
