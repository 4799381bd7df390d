#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trispline/geometry.hpp"
#include "trispline/polynomial.hpp"

namespace trispline {

// Per-vertex gradient data record (f, df/dx, df/dy).
struct VertexData {
  double f = 0.0;
  double fx = 0.0;
  double fy = 0.0;
};

// One record per mesh vertex, indexed like Mesh::vertices.
using VertexGradientData = std::vector<VertexData>;

using Edge = std::pair<int, int>;  // vertex indices, lower first

// Conforming triangulation.  Vertices are shared by index and never merged
// by coordinate proximity; triangle vertex triples are stored
// counterclockwise.  The edge map is rebuilt whenever connectivity changes.
struct Mesh {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::optional<std::vector<VertexData>> data;
  std::optional<UnivariatePolynomial> config_phi1;
  std::optional<UnivariatePolynomial> config_psi1;
  std::map<Edge, std::vector<int>> edge_map;

  void rebuild_edge_map();
  // Flips clockwise triples in place; idempotent, domain unchanged.
  void normalize_orientation();

  // Triangle with distinguished vertex = local corner k; the barycentric
  // triple (lam_a, lam_b, lam_p) then refers to corners (k+1, k+2, k) mod 3.
  Triangle triangle_at(int tri_idx, int distinguished_corner) const;
  double diameter() const;
};

// Parses the JSON mesh format:
//   {"vertices": [{"x":num, "y":num, "f":num?, "fx":num?, "fy":num?}, ...],
//    "triangles": [[i,j,k], ...],
//    "config": {"phi1": [[num,num],...]?, "psi1": [[num,num],...]?}?}
// Indices are 0-based; f/fx/fy must be present on all vertices or none.
// Throws ParseError, IndexError or DegenerateTriangle (repeated index).
Mesh parse_mesh(const std::string& text);
std::string serialize_mesh(const Mesh& mesh);

struct ValidationReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;  // empty when passing
  };
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  bool all_pass = true;
};

// Reports non-degeneracy, edge multiplicity <= 2, conformity (no vertex in
// the open interior of another triangle's edge -- catches T-junctions),
// and orientation; duplicate-coordinate vertices are a warning only.
ValidationReport validate_mesh(const Mesh& mesh);

struct AdjacentPair {
  int tri_i, tri_j;  // tri_i < tri_j
  Edge edge;
};

// One entry per interior edge; boundary edges yield none.
std::vector<AdjacentPair> adjacent_pairs(const Mesh& mesh);

struct LocateResult {
  int triangle = -1;
  BarycentricTriple coords;  // relative to corners (0,1,2) of the triangle
};

// Linear scan in index order; accepts the first triangle whose barycentric
// components are all >= -kLocEps (ties on shared edges therefore resolve to
// the lowest index).  Coordinates are returned unclamped.
std::optional<LocateResult> locate(const Mesh& mesh, Point x);

}  // namespace trispline
