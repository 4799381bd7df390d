#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <vector>

#include "trispline/basis.hpp"
#include "trispline/mesh.hpp"

namespace trispline {

// The assembled interpolant: on each triangle, the sum of the nine basic
// functions weighted by the vertex data.  Immutable after construction;
// evaluations are const and thread-safe (the per-triangle correction cache
// is guarded internally and has no semantic effect).
class SplineField {
 public:
  // Data comes from the mesh; throws MissingData when absent.
  SplineField(Mesh mesh, ProcedureConfig cfg);
  SplineField(Mesh mesh, std::vector<VertexData> data, ProcedureConfig cfg);

  const Mesh& mesh() const { return mesh_; }
  const std::vector<VertexData>& data() const { return data_; }
  const ProcedureConfig& config() const { return cfg_; }

  // Locate + evaluate; throws OutsideDomain beyond kLocEps.
  double value(Point x) const;
  Vector gradient(Point x) const;
  EvalResult eval(Point x) const;

  // Evaluate the polynomial restriction of a specific triangle (no point
  // location); x may be anywhere.
  EvalResult eval_on_triangle(int tri_idx, Point x) const;
  double value_on_triangle(int tri_idx, Point x) const;

  // Disables the correction cache (recompute per call); results must be
  // bitwise identical either way.
  void set_cache_enabled(bool enabled) { cache_enabled_ = enabled; }

 private:
  const TriangleBasis& corner_basis(int tri_idx, int corner,
                                    std::unique_ptr<TriangleBasis>& local) const;

  Mesh mesh_;
  std::vector<VertexData> data_;
  ProcedureConfig cfg_;
  bool cache_enabled_ = true;
  mutable std::mutex cache_mu_;
  mutable std::vector<std::array<std::unique_ptr<TriangleBasis>, 3>> cache_;
};

struct BoundingBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

struct GridSample {
  double x = 0, y = 0;
  std::optional<EvalResult> result;  // nullopt outside the mesh
  int triangle = -1;
};

// Row-major regular grid including the bbox corners; nx, ny >= 2
// (throws BadGrid otherwise).  Outside samples carry no values.
std::vector<GridSample> sample_grid(const SplineField& field,
                                    const BoundingBox& bbox, int nx, int ny);

// CSV with header x,y,f,fx,fy,tri; floats at 17 significant digits; outside
// rows leave f,fx,fy empty and set tri=-1.
void write_csv(std::ostream& os, const std::vector<GridSample>& rows);

}  // namespace trispline
