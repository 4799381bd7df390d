#include "trispline/demo.hpp"

#include <cmath>

namespace trispline {

DemoField demo_field(const std::string& name) {
  if (name == "constant")
    return {name, [](Point) { return 1.0; }, [](Point) { return Vector{0, 0}; }};
  if (name == "linear")
    return {name, [](Point p) { return 2.0 * p.x - p.y + 0.5; },
            [](Point) { return Vector{2.0, -1.0}; }};
  if (name == "quadratic")
    return {name, [](Point p) { return p.x * p.x + p.x * p.y; },
            [](Point p) { return Vector{2.0 * p.x + p.y, p.x}; }};
  if (name == "trig")
    return {name, [](Point p) { return std::sin(p.x) * std::cos(p.y); },
            [](Point p) {
              return Vector{std::cos(p.x) * std::cos(p.y),
                            -std::sin(p.x) * std::sin(p.y)};
            }};
  throw Error("unknown demo field '" + name + "'");
}

Mesh demo_mesh(const std::string& kind, int n) {
  Mesh mesh;
  if (kind == "square") {
    mesh.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  } else if (kind == "fan") {
    if (n < 2) throw Error("fan mesh needs n >= 2");
    mesh.vertices.push_back({0, 0});
    for (int i = 0; i <= n; ++i) {
      const double ang = M_PI * i / n;
      mesh.vertices.push_back({std::cos(ang), std::sin(ang)});
    }
    for (int i = 0; i < n; ++i) mesh.triangles.push_back({0, i + 1, i + 2});
  } else if (kind == "grid") {
    if (n < 1) throw Error("grid mesh needs n >= 1");
    const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i)
        mesh.vertices.push_back(
            {static_cast<double>(i) / n, static_cast<double>(j) / n});
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
        mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
      }
  } else {
    throw Error("unknown demo mesh '" + kind + "'");
  }
  mesh.normalize_orientation();
  return mesh;
}

Mesh with_field_data(Mesh mesh, const DemoField& field) {
  std::vector<VertexData> data;
  data.reserve(mesh.vertices.size());
  for (const Point& v : mesh.vertices) {
    const Vector g = field.grad(v);
    data.push_back({field.value(v), g.x, g.y});
  }
  mesh.data = std::move(data);
  return mesh;
}

}  // namespace trispline
