// Command-line surface for the C1 triangle-spline library.
//
// Subcommands: validate, eval, sample, check, demo.  Reports go to stdout
// as JSON, diagnostics to stderr.  Exit codes: 0 pass, 1 domain/check
// failure, 2 usage/parse failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trispline/demo.hpp"
#include "trispline/shape.hpp"
#include "trispline/spline.hpp"
#include "trispline/verify.hpp"

namespace {

using namespace trispline;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("TRISPLINE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

// Family from --config file if given, else the mesh's embedded config
// block, else the minimal scheme.
ProcedureConfig load_config(const Mesh& mesh, const std::string& config_path) {
  UnivariatePolynomial phi1, psi1;
  if (!config_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    if (j.contains("phi1")) phi1 = polynomial_from_json(j["phi1"].dump());
    if (j.contains("psi1")) psi1 = polynomial_from_json(j["psi1"].dump());
  } else {
    if (mesh.config_phi1) phi1 = *mesh.config_phi1;
    if (mesh.config_psi1) psi1 = *mesh.config_psi1;
  }
  return ProcedureConfig::family(phi1, psi1);
}

bool parse_pair(const std::string& text, double& a, double& b) {
  char extra = 0;
  return std::sscanf(text.c_str(), "%lf,%lf %c", &a, &b, &extra) == 2;
}

int run_validate(const std::string& mesh_path) {
  const Mesh mesh = parse_mesh(read_file(mesh_path));
  const ValidationReport rep = validate_mesh(mesh);
  nlohmann::ordered_json j;
  j["check"] = "validate";
  j["pass"] = rep.all_pass;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["warnings"] = rep.warnings;
  j["vertices"] = mesh.vertices.size();
  j["triangles"] = mesh.triangles.size();
  j["edges"] = mesh.edge_map.size();
  std::cout << j.dump(2) << "\n";
  return rep.all_pass ? kExitPass : kExitFail;
}

int run_eval(const std::string& mesh_path, const std::string& at,
             const std::string& config_path) {
  double x = 0, y = 0;
  if (!parse_pair(at, x, y)) throw Error("--at expects 'x,y'");
  const Mesh mesh = parse_mesh(read_file(mesh_path));
  const ProcedureConfig cfg = load_config(mesh, config_path);
  const SplineField field(mesh, cfg);
  const auto loc = locate(mesh, {x, y});
  if (!loc) {
    std::cerr << "point (" << x << "," << y << ") is outside the mesh\n";
    return kExitFail;
  }
  const EvalResult r = field.eval_on_triangle(loc->triangle, {x, y});
  std::printf("f=%.17g fx=%.17g fy=%.17g tri=%d\n", r.value, r.grad.x,
              r.grad.y, loc->triangle);
  return kExitPass;
}

int run_sample(const std::string& mesh_path, const std::string& bbox_text,
               const std::string& grid_text, const std::string& out_path,
               const std::string& config_path) {
  BoundingBox bbox;
  char extra = 0;
  if (std::sscanf(bbox_text.c_str(), "%lf,%lf,%lf,%lf %c", &bbox.x0, &bbox.y0,
                  &bbox.x1, &bbox.y1, &extra) != 4)
    throw Error("--bbox expects 'x0,y0,x1,y1'");
  int nx = 0, ny = 0;
  if (std::sscanf(grid_text.c_str(), "%d,%d %c", &nx, &ny, &extra) != 2)
    throw Error("--grid expects 'NX,NY'");
  const Mesh mesh = parse_mesh(read_file(mesh_path));
  const SplineField field(mesh, load_config(mesh, config_path));
  const auto rows = sample_grid(field, bbox, nx, ny);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  write_csv(out, rows);
  std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitPass;
}

int run_check(const std::string& mesh_path, const std::string& suite,
              std::uint64_t seed, int samples, bool shear,
              const std::string& config_path) {
  const Mesh mesh = parse_mesh(read_file(mesh_path));
  const ProcedureConfig cfg = load_config(mesh, config_path);
  seed = effective_seed(seed);

  if (suite == "c1") {
    const SplineField field(mesh, cfg);
    const C1Report rep = check_c1(field, samples);
    std::cout << report_to_json("c1", rep, kC1Tol) << "\n";
    return rep.pass(kC1Tol) ? kExitPass : kExitFail;
  }
  if (suite == "vertex") {
    const SplineField field(mesh, cfg);
    const VertexConditionReport rep = check_vertex_conditions(field);
    double scale = 1.0;
    for (const auto& d : field.data())
      scale = std::max({scale, std::abs(d.f), std::abs(d.fx), std::abs(d.fy)});
    const double tol = kVertexTol * (1.0 + scale);
    const double dev = std::max(rep.max_value_dev, rep.max_gradient_dev);
    std::cout << report_to_json("vertex", dev, dev <= tol, tol) << "\n";
    return dev <= tol ? kExitPass : kExitFail;
  }
  if (suite == "shape") {
    double dev = 0.0;
    for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti)
      for (int corner = 0; corner < 3; ++corner)
        dev = std::max(dev,
                       check_edge_shape(cfg, mesh.triangle_at(ti, corner)).max_dev());
    const double tol = kShapeTol * std::max(1.0, mesh.diameter());
    std::cout << report_to_json("shape", dev, dev <= tol, tol) << "\n";
    return dev <= tol ? kExitPass : kExitFail;
  }
  if (suite == "invariance") {
    const SplineField field(mesh, cfg);
    if (shear) {
      // no local linear procedure is invariant under shears; pass means the
      // deviation witness is large
      const InvarianceReport rep =
          check_invariance(field, AffineMap::shear_xy(), samples, seed);
      const bool confirmed = rep.max_dev > kShearMinDeviation;
      std::cout << report_to_json("invariance-shear(non-invariance confirmed)",
                                  rep.max_dev, confirmed, kShearMinDeviation)
                << "\n";
      return confirmed ? kExitPass : kExitFail;
    }
    Rng rng(seed);
    double dev = 0.0;
    for (int k = 0; k < 20; ++k) {
      AffineMap map = AffineMap::rotation(rng.uniform(0.0, 6.28318));
      if (k % 3 == 1) map = map.then(AffineMap::reflection_x());
      if (k % 2 == 1) map = map.then(AffineMap::scaling(rng.uniform(0.5, 2.0)));
      map = map.then(AffineMap::translation(
          {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)}));
      dev = std::max(dev, check_invariance(field, map, samples, rng.raw()).max_dev);
    }
    std::cout << report_to_json("invariance-isometry", dev,
                                dev <= kInvarianceTol, kInvarianceTol)
              << "\n";
    return dev <= kInvarianceTol ? kExitPass : kExitFail;
  }
  if (suite == "degree") {
    const int order = basis_degree(cfg);
    double dev = 0.0;
    for (int ti = 0; ti < static_cast<int>(mesh.triangles.size()); ++ti)
      dev = std::max(dev, check_degree(cfg, mesh.triangle_at(ti, 2),
                                       BasisKind::value, order, 20, seed));
    const double tol = kDegreeTol * std::max(1.0, mesh.diameter());
    nlohmann::ordered_json j;
    j["check"] = "degree";
    j["order"] = order;
    j["max_jump"] = dev;
    j["per_edge"] = nlohmann::json::array();
    j["pass"] = dev <= tol;
    j["tolerance"] = tol;
    std::cout << j.dump(2) << "\n";
    return dev <= tol ? kExitPass : kExitFail;
  }
  throw Error("unknown suite '" + suite + "'");
}

int run_demo(const std::string& field_name, std::vector<std::string> mesh_spec,
             const std::string& out_path) {
  if (mesh_spec.empty()) mesh_spec = {"square"};
  int n = 4;
  if (mesh_spec.size() > 1) n = std::atoi(mesh_spec[1].c_str());
  const Mesh mesh =
      with_field_data(demo_mesh(mesh_spec[0], n), demo_field(field_name));
  const std::string text = serialize_mesh(mesh);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text << "\n";
    std::cerr << "wrote mesh with " << mesh.vertices.size() << " vertices, "
              << mesh.triangles.size() << " triangles to " << out_path << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally generated C1 triangle splines from gradient data"};
  app.require_subcommand(1);

  std::string mesh_path, config_path, at_text, bbox_text, grid_text, out_path;
  std::string suite, field_name = "constant";
  std::vector<std::string> mesh_spec;
  std::uint64_t seed = trispline::kDefaultSeed;
  int samples = 50;
  bool shear = false;

  auto* validate = app.add_subcommand("validate", "validate a mesh file");
  validate->add_option("mesh", mesh_path)->required();

  auto* eval = app.add_subcommand("eval", "evaluate value and gradient");
  eval->add_option("mesh", mesh_path)->required();
  eval->add_option("--at", at_text, "point 'x,y'")->required();
  eval->add_option("--config", config_path, "family config JSON");

  auto* sample = app.add_subcommand("sample", "sample on a regular grid");
  sample->add_option("mesh", mesh_path)->required();
  sample->add_option("--bbox", bbox_text, "'x0,y0,x1,y1'")->required();
  sample->add_option("--grid", grid_text, "'NX,NY'")->required();
  sample->add_option("--out", out_path, "output CSV path")->required();
  sample->add_option("--config", config_path, "family config JSON");

  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("mesh", mesh_path)->required();
  check->add_option("--suite", suite, "c1|vertex|shape|invariance|degree")
      ->required();
  check->add_option("--seed", seed, "RNG seed (env TRISPLINE_SEED overrides)");
  check->add_option("--samples", samples, "samples per edge / per map");
  check->add_flag("--shear", shear, "use the shear non-invariance witness");
  check->add_option("--config", config_path, "family config JSON");

  auto* demo = app.add_subcommand("demo", "emit a mesh with analytic data");
  demo->add_option("--field", field_name, "constant|linear|quadratic|trig");
  demo->add_option("--mesh", mesh_spec, "square|fan|grid [n]")
      ->expected(1, 2);
  demo->add_option("--out", out_path, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(mesh_path);
    if (eval->parsed()) return run_eval(mesh_path, at_text, config_path);
    if (sample->parsed())
      return run_sample(mesh_path, bbox_text, grid_text, out_path, config_path);
    if (check->parsed())
      return run_check(mesh_path, suite, seed, samples, shear, config_path);
    if (demo->parsed()) return run_demo(field_name, mesh_spec, out_path);
  } catch (const trispline::OutsideDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const trispline::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trispline::IndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trispline::MissingData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const trispline::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
