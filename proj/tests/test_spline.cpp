#include <doctest.h>

#include <sstream>
#include <thread>

#include "oracle.hpp"
#include "trispline/demo.hpp"
#include "trispline/spline.hpp"
#include "trispline/verify.hpp"

using namespace trispline;

namespace {

Mesh unit_right_mesh() {
  Mesh mesh;
  mesh.vertices = {{0, 0}, {1, 0}, {0, 1}};
  mesh.triangles = {{0, 1, 2}};
  mesh.normalize_orientation();
  return mesh;
}

std::vector<VertexData> make_data(Rng& rng, std::size_t n) {
  std::vector<VertexData> data(n);
  for (auto& d : data)
    d = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return data;
}

}  // namespace

TEST_CASE("all-zero data gives the zero spline") {
  const SplineField field(unit_right_mesh(),
                          std::vector<VertexData>(3, VertexData{}),
                          ProcedureConfig::minimal());
  const EvalResult r = field.eval({0.2, 0.3});
  CHECK(r.value == 0.0);
  CHECK(r.grad.x == 0.0);
  CHECK(r.grad.y == 0.0);
}

TEST_CASE("unit value at the top vertex reproduces phi_p") {
  std::vector<VertexData> data(3, VertexData{});
  data[2].f = 1.0;  // vertex (0,1)
  const SplineField field(unit_right_mesh(), data, ProcedureConfig::minimal());
  CHECK(field.value({1.0 / 3, 1.0 / 3}) ==
        doctest::Approx(22.0 / 81).epsilon(1e-13));
}

TEST_CASE("constant data reproduces the constant (partition of unity)") {
  Rng rng(kDefaultSeed + 50);
  const Mesh mesh = demo_mesh("grid", 3);
  std::vector<VertexData> data(mesh.vertices.size(), VertexData{0.75, 0, 0});
  const SplineField field(mesh, data, ProcedureConfig::minimal());
  for (int k = 0; k < 100; ++k) {
    const Point x{rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)};
    CHECK(field.value(x) == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("interior non-reproduction of the linear field h = x") {
  // gradient data of h(x,y) = x on the unit right triangle
  std::vector<VertexData> data = {{0, 1, 0}, {1, 1, 0}, {0, 1, 0}};
  const SplineField field(unit_right_mesh(), data, ProcedureConfig::minimal());
  CHECK(field.value({1.0 / 3, 1.0 / 3}) ==
        doctest::Approx(26.0 / 81).epsilon(1e-13));
  CHECK(std::abs(field.value({1.0 / 3, 1.0 / 3}) - 1.0 / 3) > 1e-3);
}

TEST_CASE("vertex queries return the prescribed data") {
  Rng rng(kDefaultSeed + 51);
  const Mesh mesh = demo_mesh("fan", 4);
  const auto data = make_data(rng, mesh.vertices.size());
  const SplineField field(mesh, data, ProcedureConfig::minimal());
  const auto rep = check_vertex_conditions(field);
  CHECK(rep.max_value_dev <= 1e-10);
  CHECK(rep.max_gradient_dev <= 1e-10);
}

TEST_CASE("linearity in the data") {
  Rng rng(kDefaultSeed + 52);
  const Mesh mesh = demo_mesh("square");
  const auto f1 = make_data(rng, 4);
  const auto f2 = make_data(rng, 4);
  const double alpha = 0.7, beta = -1.3;
  std::vector<VertexData> mix(4);
  for (int i = 0; i < 4; ++i)
    mix[static_cast<std::size_t>(i)] = {
        alpha * f1[static_cast<std::size_t>(i)].f + beta * f2[static_cast<std::size_t>(i)].f,
        alpha * f1[static_cast<std::size_t>(i)].fx + beta * f2[static_cast<std::size_t>(i)].fx,
        alpha * f1[static_cast<std::size_t>(i)].fy + beta * f2[static_cast<std::size_t>(i)].fy};
  const ProcedureConfig cfg = ProcedureConfig::minimal();
  const SplineField s1(mesh, f1, cfg), s2(mesh, f2, cfg), sm(mesh, mix, cfg);
  for (int k = 0; k < 50; ++k) {
    const Point x{rng.uniform(0, 1), rng.uniform(0, 1)};
    CHECK(sm.value(x) ==
          doctest::Approx(alpha * s1.value(x) + beta * s2.value(x))
              .epsilon(1e-12));
  }
}

TEST_CASE("locality: data outside the triangle does not affect it") {
  Rng rng(kDefaultSeed + 53);
  const Mesh mesh = demo_mesh("grid", 2);
  auto data = make_data(rng, mesh.vertices.size());
  const ProcedureConfig cfg = ProcedureConfig::minimal();
  const SplineField before(mesh, data, cfg);
  // vertex 8 = corner (1,1) does not belong to triangle 0 (cell at origin)
  const Point probe{0.1, 0.05};
  const double v0 = before.value_on_triangle(0, probe);
  data[8].f += 100.0;
  data[8].fx -= 3.0;
  const SplineField after(mesh, data, cfg);
  const double v1 = after.value_on_triangle(0, probe);
  CHECK(v0 == v1);  // bitwise
}

TEST_CASE("continuity and C1 across the shared diagonal, demo field") {
  const Mesh mesh = with_field_data(demo_mesh("square"), demo_field("trig"));
  const SplineField field(mesh, ProcedureConfig::minimal());
  const auto pairs = adjacent_pairs(mesh);
  REQUIRE(pairs.size() == 1);
  const EvalResult l = field.eval_on_triangle(pairs[0].tri_i, {0.5, 0.5});
  const EvalResult r = field.eval_on_triangle(pairs[0].tri_j, {0.5, 0.5});
  CHECK(std::abs(l.value - r.value) <= 1e-11);
  CHECK(norm(l.grad - r.grad) <= 1e-9);
}

TEST_CASE("missing data and outside domain") {
  CHECK_THROWS_AS(SplineField(demo_mesh("square"), ProcedureConfig::minimal()),
                  MissingData);
  const SplineField field(
      with_field_data(demo_mesh("square"), demo_field("linear")),
      ProcedureConfig::minimal());
  CHECK_THROWS_AS(field.value({5, 5}), OutsideDomain);
  // linear demo field data at a vertex comes back exactly
  CHECK(field.value({0, 0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cache-off mode is bitwise identical") {
  Rng rng(kDefaultSeed + 54);
  const Mesh mesh = with_field_data(demo_mesh("grid", 2), demo_field("quadratic"));
  SplineField cached(mesh, ProcedureConfig::minimal());
  SplineField uncached(mesh, ProcedureConfig::minimal());
  uncached.set_cache_enabled(false);
  for (int k = 0; k < 50; ++k) {
    const Point x{rng.uniform(0, 1), rng.uniform(0, 1)};
    const EvalResult a = cached.eval(x);
    const EvalResult b = uncached.eval(x);
    CHECK(a.value == b.value);
    CHECK(a.grad.x == b.grad.x);
    CHECK(a.grad.y == b.grad.y);
  }
}

TEST_CASE("concurrent evaluation is safe and consistent") {
  Rng rng(kDefaultSeed + 55);
  const Mesh mesh = with_field_data(demo_mesh("grid", 3), demo_field("trig"));
  const SplineField field(mesh, ProcedureConfig::minimal());
  std::vector<Point> pts;
  for (int k = 0; k < 64; ++k)
    pts.push_back({rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)});
  std::vector<double> serial(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) serial[i] = field.value(pts[i]);

  std::vector<double> parallel(pts.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < pts.size(); i += 4)
        parallel[i] = field.value(pts[i]);
    });
  for (auto& th : workers) th.join();
  CHECK(parallel == serial);
}

TEST_CASE("grid sampling") {
  const Mesh mesh = with_field_data(demo_mesh("square"), demo_field("constant"));
  const SplineField field(mesh, ProcedureConfig::minimal());
  SUBCASE("2x2 on the unit square: all inside") {
    const auto rows = sample_grid(field, {0, 0, 1, 1}, 2, 2);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
      CHECK(r.triangle >= 0);
      REQUIRE(r.result.has_value());
      CHECK(r.result->value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("17x9 grid row count") {
    const auto rows = sample_grid(field, {0, 0, 1, 1}, 17, 9);
    CHECK(rows.size() == 153);
  }
  SUBCASE("bbox beyond the hull yields OUTSIDE rows") {
    const auto rows = sample_grid(field, {-1, -1, 2, 2}, 4, 4);
    int outside = 0;
    for (const auto& r : rows)
      if (!r.result) {
        ++outside;
        CHECK(r.triangle == -1);
      }
    CHECK(outside > 0);
  }
  SUBCASE("bad grids throw") {
    CHECK_THROWS_AS(sample_grid(field, {0, 0, 1, 1}, 1, 5), BadGrid);
    CHECK_THROWS_AS(sample_grid(field, {1, 0, 0, 1}, 3, 3), BadGrid);
  }
}

TEST_CASE("CSV format") {
  const Mesh mesh = with_field_data(demo_mesh("square"), demo_field("linear"));
  const SplineField field(mesh, ProcedureConfig::minimal());
  const auto rows = sample_grid(field, {-0.5, 0, 1, 1}, 3, 2);
  std::ostringstream os;
  write_csv(os, rows);
  const std::string text = os.str();
  CHECK(text.rfind("x,y,f,fx,fy,tri\n", 0) == 0);
  CHECK(text.find(",,,,-1") != std::string::npos);  // outside row
  // 17-significant-digit floats round-trip
  const std::size_t line2 = text.find('\n') + 1;
  double x = 0, y = 0;
  std::sscanf(text.c_str() + line2, "%lf,%lf", &x, &y);
  CHECK(x == -0.5);
}
