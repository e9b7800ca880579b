#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dislo/scenario.hpp"

using namespace dislo;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dislo_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = path / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string sub(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimalForward = R"({
  "task": "forward",
  "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": -2},
  "slip": {"g": [1, 0, 0], "mode": "tangential"}
})";

}  // namespace

TEST_CASE("minimal forward scenario loads with defaults filled") {
  TempDir td;
  const Scenario sc = load_scenario(td.file("cfg.json", kMinimalForward));
  CHECK(sc.task == Task::forward);
  CHECK(sc.quad_order == 6);
  CHECK(sc.kernel == Kernel::mindlin);
  CHECK(sc.mode == SlipMode::tangential);
  REQUIRE(sc.rect.has_value());
  CHECK(sc.rect->alpha == -2.0);
  CHECK(sc.grid_n1 == 21);
  CHECK(sc.grid_n2 == 21);
}

TEST_CASE("scenario validation errors name the offending field") {
  TempDir td;
  SUBCASE("negative mu violates convexity") {
    const std::string p = td.file("bad_mu.json", R"({
      "task": "forward",
      "medium": {"lambda": 1, "mu": -1},
      "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": -2},
      "slip": {"g": [1, 0, 0], "mode": "tangential"}
    })");
    CHECK_THROWS_WITH_AS(load_scenario(p), doctest::Contains("mu"), ScenarioError);
  }
  SUBCASE("missing station file echoes the path") {
    const std::string p = td.file("bad_csv.json", R"({
      "task": "forward",
      "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": -2},
      "slip": {"g": [1, 0, 0], "mode": "tangential"},
      "stations": {"csv": "/nonexistent/stations.csv"}
    })");
    CHECK_THROWS_WITH_AS(load_scenario(p), doctest::Contains("/nonexistent/stations.csv"),
                         ScenarioError);
  }
  SUBCASE("degenerate rectangle is rejected") {
    const std::string p = td.file("bad_rect.json", R"({
      "task": "forward",
      "fault": {"a": 1, "b": -1, "c": -1, "d": 1, "alpha": -2},
      "slip": {"g": [1, 0, 0], "mode": "tangential"}
    })");
    CHECK_THROWS_AS(load_scenario(p), ScenarioError);
  }
  SUBCASE("fault above the surface is rejected") {
    const std::string p = td.file("bad_depth.json", R"({
      "task": "forward",
      "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": 0.5},
      "slip": {"g": [1, 0, 0], "mode": "tangential"}
    })");
    CHECK_THROWS_WITH_AS(load_scenario(p), doctest::Contains("alpha"), ScenarioError);
  }
  SUBCASE("malformed JSON reports a parse error with the path") {
    const std::string p = td.file("broken.json", "{ not json");
    CHECK_THROWS_WITH_AS(load_scenario(p), doctest::Contains("parse error"), ScenarioError);
  }
  SUBCASE("missing task field") {
    const std::string p = td.file("no_task.json", R"({"fault": {}})");
    CHECK_THROWS_WITH_AS(load_scenario(p), doctest::Contains("task"), ScenarioError);
  }
}

TEST_CASE("forward task emits the station grid CSV and echoes the config") {
  TempDir td;
  Scenario sc = load_scenario(td.file("cfg.json", kMinimalForward));
  sc.mesh_nx = sc.mesh_ny = 4;
  const std::string out = td.sub("out");
  REQUIRE(run(sc, out) == 0);

  const std::string csv = slurp(out + "/forward.csv");
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "x1,x2,u1,u2,u3");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 21 * 21);

  const json cfg = json::parse(slurp(out + "/config.json"));
  CHECK(cfg.at("task") == "forward");
  CHECK(cfg.at("quad_order") == 6);
  CHECK(cfg.at("kernel") == "mindlin");
  CHECK(cfg.at("medium").at("mu") == 1.0);

  SUBCASE("reruns with the same seed are byte-identical") {
    const std::string out2 = td.sub("out2");
    REQUIRE(run(sc, out2) == 0);
    CHECK(slurp(out + "/forward.csv") == slurp(out2 + "/forward.csv"));
  }
}

TEST_CASE("station CSV ingestion") {
  TempDir td;
  const std::string csv = td.file("st.csv", "id,x1,x2\n0,0.5,0.25\n1,-1.0,2.0\n");
  Scenario sc = load_scenario(td.file("cfg.json", kMinimalForward));
  sc.station_csv = csv;
  const StationSet st = scenario_stations(sc);
  REQUIRE(st.points.size() == 2);
  CHECK(st.points[0] == Vec3(0.5, 0.25, 0.0));
  CHECK(st.points[1] == Vec3(-1.0, 2.0, 0.0));

  SUBCASE("bad header rejected") {
    sc.station_csv = td.file("bad.csv", "x,y\n1,2\n");
    CHECK_THROWS_WITH_AS(scenario_stations(sc), doctest::Contains("id,x1,x2"), ScenarioError);
  }
  SUBCASE("malformed row rejected with line number") {
    sc.station_csv = td.file("row.csv", "id,x1,x2\n0,0.5\n");
    CHECK_THROWS_WITH_AS(scenario_stations(sc), doctest::Contains("line 2"), ScenarioError);
  }
}

TEST_CASE("emit_grid lattice order, refusal, and lossless round trip") {
  TempDir td;
  StationSet st;
  st.surface = true;
  st.points = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)};  // x1 fastest
  DisplacementField f;
  f.u = {Vec3(0.1, 0.2, 0.3), Vec3(1.0 / 3.0, -2.0 / 7.0, 5e-17), Vec3(4, 5, 6),
         Vec3(-1e-300, 1e300, 0.0)};

  const std::string p = td.sub("grid.csv");
  emit_grid(f, st, 2, 2, p);
  const std::string body = slurp(p);
  std::istringstream lines(body);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x1,x2,u1,u2,u3");
  std::vector<std::array<double, 5>> rows;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::array<double, 5> r{};
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r[0], &r[1], &r[2], &r[3], &r[4]) ==
            5);
    rows.push_back(r);
  }
  REQUIRE(rows.size() == 4);
  // Row-major with x1 fastest, and exact 17-digit round trip.
  for (int i = 0; i < 4; ++i) {
    CHECK(rows[i][0] == st.points[i][0]);
    CHECK(rows[i][1] == st.points[i][1]);
    CHECK(rows[i][2] == f.u[i][0]);
    CHECK(rows[i][3] == f.u[i][1]);
    CHECK(rows[i][4] == f.u[i][2]);
  }

  SUBCASE("non-finite values are refused with the row index") {
    f.u[2][1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(emit_grid(f, st, 2, 2, td.sub("nan.csv")),
                         doctest::Contains("row 2"), ScenarioError);
  }
  SUBCASE("non-lattice station sets are refused") {
    st.points[1] = Vec3(0.37, 0.0, 0.0);
    CHECK_THROWS_AS(emit_grid(f, st, 2, 2, td.sub("bad.csv")), ScenarioError);
  }
}

TEST_CASE("invert-slip task round trip writes the inversion report") {
  TempDir td;
  const std::string p = td.file("inv.json", R"({
    "task": "invert-slip",
    "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": -2, "mesh_nx": 2, "mesh_ny": 2},
    "slip": {"g": [1, 0, 0], "mode": "tangential"},
    "stations": {"x1_min": -2.5, "x1_max": 2.5, "x2_min": -2.5, "x2_max": 2.5, "n1": 6, "n2": 6},
    "reg_weight": 1e-8
  })");
  const Scenario sc = load_scenario(p);
  const std::string out = td.sub("out");
  REQUIRE(run(sc, out) == 0);
  const json rep = json::parse(slurp(out + "/inversion.json"));
  CHECK(rep.at("rel_l2_recovery_error").get<double>() <= 0.05);
  CHECK_FALSE(rep.at("rank_deficient").get<bool>());
  CHECK(rep.at("slip").size() == 8);  // 2x2 patching, two triangles per cell
  CHECK(rep.contains("seed"));
  CHECK(rep.at("config").at("task") == "invert-slip");
}

TEST_CASE("verify task reports each check with pass/fail and values") {
  TempDir td;
  const std::string p = td.file("verify.json", R"({
    "task": "verify",
    "fault": {"a": -0.5, "b": 0.5, "c": -0.5, "d": 0.5, "alpha": -1, "mesh_nx": 6, "mesh_ny": 6},
    "slip": {"g": [1, 0, 0], "mode": "tangential"},
    "fd_cells": 32, "fd_L": 6.0, "fd_D": 6.0
  })");
  const Scenario sc = load_scenario(p);
  const std::string out = td.sub("out");
  const int code = run(sc, out);
  const json rep = json::parse(slurp(out + "/verify.json"));
  for (const char* name : {"traction_free_surface", "displacement_jump", "oracle_equivalence"}) {
    REQUIRE(rep.at("checks").contains(name));
    CHECK(rep.at("checks").at(name).contains("pass"));
  }
  CHECK(rep.at("checks").at("traction_free_surface").at("pass").get<bool>());
  CHECK(rep.at("checks").at("displacement_jump").at("pass").get<bool>());
  CHECK(rep.at("checks").at("oracle_equivalence").at("pass").get<bool>());
  CHECK(rep.at("pass").get<bool>());
  CHECK(code == 0);
}

TEST_CASE("run returns the config exit code on unusable scenarios") {
  TempDir td;
  Scenario sc;  // no fault configured at all
  sc.task = Task::forward;
  CHECK(run(sc, td.sub("out")) == 2);
}
