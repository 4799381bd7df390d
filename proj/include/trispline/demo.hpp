#pragma once

#include <functional>
#include <string>

#include "trispline/mesh.hpp"

namespace trispline {

// Analytic fields with exact gradients, used to generate demo data.
struct DemoField {
  std::string name;
  std::function<double(Point)> value;
  std::function<Vector(Point)> grad;
};

// constant | linear | quadratic | trig; throws Error on unknown names.
DemoField demo_field(const std::string& name);

// square      : unit square split along the main diagonal (2 triangles)
// fan <n>     : n triangles fanning a half-disk sector around the origin
// grid <n>    : n x n unit-square cells on [0,1]^2, each split in two
Mesh demo_mesh(const std::string& kind, int n = 4);

// Binds (f, fx, fy) sampled from the field at every vertex.
Mesh with_field_data(Mesh mesh, const DemoField& field);

}  // namespace trispline
