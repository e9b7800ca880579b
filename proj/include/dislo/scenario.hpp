#pragma once

// Scenario configuration and task dispatch: the operational shell shared by
// the CLI and the tests. Config format is a single JSON file per scenario.

#include <optional>
#include <string>

#include "dislo/core.hpp"
#include "dislo/forward.hpp"
#include "dislo/inverse.hpp"

namespace dislo {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Task { forward, invert_slip, invert_geometry, verify, uniqueness, fd_compare };

struct Scenario {
  Task task = Task::forward;
  LameParameters medium{1.0, 1.0};
  std::optional<std::string> hetero_preset;  // named heterogeneous field

  // Fault: either an inline rectangle or a mesh file.
  std::optional<RectDislocation> rect;
  std::optional<std::string> mesh_path;
  std::optional<std::string> slip_path;
  Vec3 slip = Vec3::Zero();
  SlipMode mode = SlipMode::oblique;
  int mesh_nx = 8, mesh_ny = 8;

  // Stations: a grid spec or a CSV path (header "id,x1,x2", surface implied).
  std::optional<std::string> station_csv;
  double grid_x1_min = -2, grid_x1_max = 2, grid_x2_min = -2, grid_x2_max = 2;
  int grid_n1 = 21, grid_n2 = 21;

  int quad_order = 6;
  Kernel kernel = Kernel::mindlin;
  unsigned seed = 0;
  bool deterministic = false;

  // Task-specific knobs.
  double reg_weight = 1e-6;
  int fd_cells = 32;
  double fd_L = 4.0, fd_D = 4.0;  // truncation box extents
  int uniq_pairs = 20;
  int search_restarts = 1;
  int search_max_evals = 200;

  std::string source_path;  // where the scenario was loaded from
};

Scenario load_scenario(const std::string& path);

StationSet scenario_stations(const Scenario& sc);
TriMesh scenario_mesh(const Scenario& sc);
SlipField scenario_slip(const Scenario& sc, const TriMesh& mesh);

// Dispatches the task, writes artifacts into out_dir (atomically: temp file
// then rename), echoes the resolved config. Returns the process exit code:
// 0 success, 1 numerical failure, 2 configuration failure.
int run(const Scenario& sc, const std::string& out_dir);

// Row-major lattice CSV with header x1,x2,u1,u2,u3 (x1 fastest), 17
// significant digits. Refuses non-finite values.
void emit_grid(const DisplacementField& field, const StationSet& stations, int n1, int n2,
               const std::string& path);

}  // namespace dislo
