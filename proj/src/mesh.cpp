#include "trispline/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "trispline/shape.hpp"

namespace trispline {

namespace {

Edge make_edge(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

UnivariatePolynomial poly_from_json_array(const nlohmann::json& arr,
                                          const char* what) {
  if (!arr.is_array())
    throw ParseError(std::string(what) + ": expected an array of pairs");
  std::vector<Rational> coeffs;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw ParseError(std::string(what) +
                       ": expected [numerator, denominator] pairs");
    coeffs.emplace_back(pair[0].get<std::int64_t>(),
                        pair[1].get<std::int64_t>());
  }
  return UnivariatePolynomial(std::move(coeffs));
}

nlohmann::json poly_to_json_array(const UnivariatePolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back({c.num_i64(), c.den_i64()});
  return arr;
}

}  // namespace

void Mesh::rebuild_edge_map() {
  edge_map.clear();
  for (int ti = 0; ti < static_cast<int>(triangles.size()); ++ti) {
    const auto& tr = triangles[static_cast<std::size_t>(ti)];
    for (int e = 0; e < 3; ++e)
      edge_map[make_edge(tr[static_cast<std::size_t>(e)],
                         tr[static_cast<std::size_t>((e + 1) % 3)])]
          .push_back(ti);
  }
}

void Mesh::normalize_orientation() {
  for (auto& tr : triangles) {
    const Triangle t{vertices[static_cast<std::size_t>(tr[0])],
                     vertices[static_cast<std::size_t>(tr[1])],
                     vertices[static_cast<std::size_t>(tr[2])]};
    if (signed_area(t) < 0.0) std::swap(tr[1], tr[2]);
  }
  rebuild_edge_map();
}

Triangle Mesh::triangle_at(int tri_idx, int distinguished_corner) const {
  const auto& tr = triangles.at(static_cast<std::size_t>(tri_idx));
  const int k = distinguished_corner;
  return Triangle{vertices[static_cast<std::size_t>(tr[static_cast<std::size_t>((k + 1) % 3)])],
                  vertices[static_cast<std::size_t>(tr[static_cast<std::size_t>((k + 2) % 3)])],
                  vertices[static_cast<std::size_t>(tr[static_cast<std::size_t>(k)])]};
}

double Mesh::diameter() const {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const auto& v : vertices) {
    if (first) {
      lo_x = hi_x = v.x;
      lo_y = hi_y = v.y;
      first = false;
    } else {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

Mesh parse_mesh(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("mesh: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("triangles"))
    throw ParseError("mesh: expected object with 'vertices' and 'triangles'");

  Mesh mesh;
  int with_data = 0;
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_object() || !jv.contains("x") || !jv.contains("y") ||
        !jv["x"].is_number() || !jv["y"].is_number())
      throw ParseError("mesh: vertex needs numeric 'x' and 'y'");
    const Point p{jv["x"].get<double>(), jv["y"].get<double>()};
    if (!is_finite(p)) throw ParseError("mesh: non-finite vertex coordinate");
    mesh.vertices.push_back(p);
    const bool has = jv.contains("f") || jv.contains("fx") || jv.contains("fy");
    if (has) {
      if (!jv.contains("f") || !jv.contains("fx") || !jv.contains("fy"))
        throw ParseError("mesh: vertex data must carry f, fx and fy together");
      VertexData d{jv["f"].get<double>(), jv["fx"].get<double>(),
                   jv["fy"].get<double>()};
      if (!is_finite(d.f) || !is_finite(d.fx) || !is_finite(d.fy))
        throw ParseError("mesh: non-finite vertex data");
      if (!mesh.data) mesh.data.emplace();
      mesh.data->push_back(d);
      ++with_data;
    }
  }
  if (with_data != 0 && with_data != static_cast<int>(mesh.vertices.size()))
    throw ParseError("mesh: f/fx/fy must be present on all vertices or none");

  const int nv = static_cast<int>(mesh.vertices.size());
  for (const auto& jt : j["triangles"]) {
    if (!jt.is_array() || jt.size() != 3)
      throw ParseError("mesh: triangle must be [i,j,k]");
    std::array<int, 3> tr{};
    for (int k = 0; k < 3; ++k) {
      if (!jt[static_cast<std::size_t>(k)].is_number_integer())
        throw ParseError("mesh: triangle indices must be integers");
      const auto idx = jt[static_cast<std::size_t>(k)].get<std::int64_t>();
      if (idx < 0 || idx >= nv)
        throw IndexError("mesh: triangle references missing vertex");
      tr[static_cast<std::size_t>(k)] = static_cast<int>(idx);
    }
    if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2])
      throw DegenerateTriangle("mesh: triangle repeats a vertex index");
    mesh.triangles.push_back(tr);
  }

  if (j.contains("config")) {
    const auto& jc = j["config"];
    if (!jc.is_object()) throw ParseError("mesh: 'config' must be an object");
    if (jc.contains("phi1"))
      mesh.config_phi1 = poly_from_json_array(jc["phi1"], "config.phi1");
    if (jc.contains("psi1"))
      mesh.config_psi1 = poly_from_json_array(jc["psi1"], "config.psi1");
  }

  mesh.normalize_orientation();
  return mesh;
}

std::string serialize_mesh(const Mesh& mesh) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    nlohmann::ordered_json jv;
    jv["x"] = mesh.vertices[i].x;
    jv["y"] = mesh.vertices[i].y;
    if (mesh.data) {
      jv["f"] = (*mesh.data)[i].f;
      jv["fx"] = (*mesh.data)[i].fx;
      jv["fy"] = (*mesh.data)[i].fy;
    }
    j["vertices"].push_back(jv);
  }
  j["triangles"] = nlohmann::json::array();
  for (const auto& tr : mesh.triangles)
    j["triangles"].push_back({tr[0], tr[1], tr[2]});
  if (mesh.config_phi1 || mesh.config_psi1) {
    nlohmann::ordered_json jc;
    if (mesh.config_phi1) jc["phi1"] = poly_to_json_array(*mesh.config_phi1);
    if (mesh.config_psi1) jc["psi1"] = poly_to_json_array(*mesh.config_psi1);
    j["config"] = jc;
  }
  return j.dump(2);
}

ValidationReport validate_mesh(const Mesh& mesh) {
  ValidationReport rep;
  const auto add = [&rep](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
    rep.all_pass = rep.all_pass && pass;
  };
  const double diam = std::max(mesh.diameter(), 1e-300);

  bool nondeg = true;
  std::string nondeg_detail;
  for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti) {
    if (is_degenerate(mesh.triangle_at(ti, 2))) {
      nondeg = false;
      nondeg_detail = "triangle " + std::to_string(ti) + " is degenerate";
      break;
    }
  }
  add("non-degeneracy", nondeg, nondeg_detail);

  bool mult_ok = true;
  std::string mult_detail;
  for (const auto& [edge, tris] : mesh.edge_map) {
    if (tris.size() > 2) {
      mult_ok = false;
      mult_detail = "edge (" + std::to_string(edge.first) + "," +
                    std::to_string(edge.second) + ") touches " +
                    std::to_string(tris.size()) + " triangles";
      break;
    }
  }
  add("edge multiplicity", mult_ok, mult_detail);

  // T-junction scan: a vertex sitting in the open interior of an edge means
  // the neighbor was not split to match.
  bool conform = true;
  std::string conform_detail;
  const double on_edge = 1e-9 * diam;
  for (const auto& [edge, tris] : mesh.edge_map) {
    const Point u = mesh.vertices[static_cast<std::size_t>(edge.first)];
    const Point v = mesh.vertices[static_cast<std::size_t>(edge.second)];
    const Vector d = v - u;
    const double len2 = norm_sq(d);
    if (len2 == 0.0) continue;
    for (int vi = 0; vi < static_cast<int>(mesh.vertices.size()); ++vi) {
      if (vi == edge.first || vi == edge.second) continue;
      const Vector w = mesh.vertices[static_cast<std::size_t>(vi)] - u;
      const double t = dot(w, d) / len2;
      if (t <= 1e-9 || t >= 1.0 - 1e-9) continue;
      const Vector off = w - t * d;
      if (norm(off) <= on_edge) {
        conform = false;
        conform_detail = "vertex " + std::to_string(vi) +
                         " splits edge (" + std::to_string(edge.first) + "," +
                         std::to_string(edge.second) + ")";
        break;
      }
    }
    if (!conform) break;
  }
  add("conformity", conform, conform_detail);

  bool ccw = true;
  std::string ccw_detail;
  for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti) {
    if (signed_area(mesh.triangle_at(ti, 2)) < 0.0) {
      ccw = false;
      ccw_detail = "triangle " + std::to_string(ti) + " is clockwise";
      break;
    }
  }
  add("orientation", ccw, ccw_detail);

  std::set<std::pair<double, double>> seen;
  for (const auto& v : mesh.vertices) {
    if (!seen.insert({v.x, v.y}).second) {
      rep.warnings.push_back("duplicate vertex coordinates present");
      break;
    }
  }
  return rep;
}

std::vector<AdjacentPair> adjacent_pairs(const Mesh& mesh) {
  std::vector<AdjacentPair> pairs;
  for (const auto& [edge, tris] : mesh.edge_map)
    if (tris.size() == 2)
      pairs.push_back({std::min(tris[0], tris[1]), std::max(tris[0], tris[1]),
                       edge});
  return pairs;
}

std::optional<LocateResult> locate(const Mesh& mesh, Point x) {
  for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti) {
    const Triangle tri = mesh.triangle_at(ti, 2);
    if (is_degenerate(tri)) continue;
    const BarycentricTriple lam_apb = barycentric(tri, x);
    // triangle_at(ti,2) has corners (0,1,2) mapped to (a,b,p)
    if (lam_apb.lam_a >= -kLocEps && lam_apb.lam_b >= -kLocEps &&
        lam_apb.lam_p >= -kLocEps)
      return LocateResult{ti, lam_apb};
  }
  return std::nullopt;
}

}  // namespace trispline
