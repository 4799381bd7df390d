#include "trispline/spline.hpp"

#include <cstdio>

namespace trispline {

namespace {

std::vector<VertexData> take_mesh_data(const Mesh& mesh) {
  if (!mesh.data) throw MissingData("mesh carries no vertex data");
  return *mesh.data;
}

void require_valid(const Mesh& mesh, std::size_t data_size) {
  const ValidationReport rep = validate_mesh(mesh);
  if (!rep.all_pass) {
    for (const auto& c : rep.checks)
      if (!c.pass) throw Error("mesh validation failed: " + c.name + " (" + c.detail + ")");
  }
  if (data_size != mesh.vertices.size())
    throw MissingData("vertex data does not cover all mesh vertices");
}

}  // namespace

SplineField::SplineField(Mesh mesh, ProcedureConfig cfg)
    : SplineField(std::move(mesh), {}, std::move(cfg)) {}

SplineField::SplineField(Mesh mesh, std::vector<VertexData> data,
                         ProcedureConfig cfg)
    : mesh_(std::move(mesh)),
      data_(data.empty() ? take_mesh_data(mesh_) : std::move(data)),
      cfg_(std::move(cfg)) {
  require_valid(mesh_, data_.size());
  for (const auto& d : data_)
    if (!is_finite(d.f) || !is_finite(d.fx) || !is_finite(d.fy))
      throw MissingData("non-finite vertex data");
  cache_.resize(mesh_.triangles.size());
}

const TriangleBasis& SplineField::corner_basis(
    int tri_idx, int corner, std::unique_ptr<TriangleBasis>& local) const {
  if (!cache_enabled_) {
    local = std::make_unique<TriangleBasis>(cfg_, mesh_.triangle_at(tri_idx, corner));
    return *local;
  }
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto& slot = cache_[static_cast<std::size_t>(tri_idx)][static_cast<std::size_t>(corner)];
  if (!slot)
    slot = std::make_unique<TriangleBasis>(cfg_, mesh_.triangle_at(tri_idx, corner));
  return *slot;
}

EvalResult SplineField::eval_on_triangle(int tri_idx, Point x) const {
  const auto& tr = mesh_.triangles.at(static_cast<std::size_t>(tri_idx));
  EvalResult out;
  for (int corner = 0; corner < 3; ++corner) {
    std::unique_ptr<TriangleBasis> local;
    const TriangleBasis& basis = corner_basis(tri_idx, corner, local);
    const VertexData& d = data_[static_cast<std::size_t>(tr[static_cast<std::size_t>(corner)])];
    const double w[3] = {d.f, d.fx, d.fy};
    for (const BasisKind kind : kAllKinds) {
      const double c = w[index(kind)];
      if (c == 0.0) continue;
      const EvalResult b = basis.eval(kind, x);
      out.value += c * b.value;
      out.grad = out.grad + c * b.grad;
    }
  }
  return out;
}

double SplineField::value_on_triangle(int tri_idx, Point x) const {
  const auto& tr = mesh_.triangles.at(static_cast<std::size_t>(tri_idx));
  double out = 0.0;
  for (int corner = 0; corner < 3; ++corner) {
    std::unique_ptr<TriangleBasis> local;
    const TriangleBasis& basis = corner_basis(tri_idx, corner, local);
    const VertexData& d = data_[static_cast<std::size_t>(tr[static_cast<std::size_t>(corner)])];
    const double w[3] = {d.f, d.fx, d.fy};
    for (const BasisKind kind : kAllKinds) {
      const double c = w[index(kind)];
      if (c == 0.0) continue;
      out += c * basis.value(kind, x);
    }
  }
  return out;
}

EvalResult SplineField::eval(Point x) const {
  const auto loc = locate(mesh_, x);
  if (!loc) throw OutsideDomain("point outside the mesh domain");
  return eval_on_triangle(loc->triangle, x);
}

double SplineField::value(Point x) const {
  const auto loc = locate(mesh_, x);
  if (!loc) throw OutsideDomain("point outside the mesh domain");
  return value_on_triangle(loc->triangle, x);
}

Vector SplineField::gradient(Point x) const { return eval(x).grad; }

std::vector<GridSample> sample_grid(const SplineField& field,
                                    const BoundingBox& bbox, int nx, int ny) {
  if (nx < 2 || ny < 2) throw BadGrid("grid needs nx, ny >= 2");
  if (!(bbox.x1 > bbox.x0) || !(bbox.y1 > bbox.y0))
    throw BadGrid("bounding box is empty");
  std::vector<GridSample> rows;
  rows.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int jy = 0; jy < ny; ++jy) {
    const double y = bbox.y0 + (bbox.y1 - bbox.y0) * jy / (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
      const double x = bbox.x0 + (bbox.x1 - bbox.x0) * ix / (nx - 1);
      GridSample s;
      s.x = x;
      s.y = y;
      if (const auto loc = locate(field.mesh(), {x, y})) {
        s.triangle = loc->triangle;
        s.result = field.eval_on_triangle(loc->triangle, {x, y});
      }
      rows.push_back(std::move(s));
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<GridSample>& rows) {
  os << "x,y,f,fx,fy,tri\n";
  char buf[512];
  for (const auto& r : rows) {
    if (r.result) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.x,
                    r.y, r.result->value, r.result->grad.x, r.result->grad.y,
                    r.triangle);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,,,,-1\n", r.x, r.y);
    }
    os << buf;
  }
}

}  // namespace trispline
