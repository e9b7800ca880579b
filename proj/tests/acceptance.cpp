// Acceptance harness: runs the end-to-end checks that gate a release and
// prints one pass/fail line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [path-to-cli-binary]
// The CLI path is needed only for the determinism criterion (11).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dislo/fdsolve.hpp"
#include "dislo/forward.hpp"
#include "dislo/inverse.hpp"
#include "dislo/rect.hpp"
#include "dislo/scenario.hpp"

using namespace dislo;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

double rect_point_distance(const Vec3& x, const RectDislocation& r) {
  const double dx = std::max({r.a - x[0], 0.0, x[0] - r.b});
  const double dy = std::max({r.c - x[1], 0.0, x[1] - r.d});
  const double dz = x[2] - r.depth();
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

SlipField constant_slip(const TriMesh& mesh, const Vec3& g, SlipMode mode) {
  SlipField s;
  s.mode = mode;
  s.g.assign(mesh.num_facets(), g);
  return s;
}

const LameParameters kMedium(1.0, 1.0);

// 1. Closed-form rectangle displacement vs self-convergent quadrature over
//    100 random scenes, relative error <= 1e-6 each.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  int done = 0;
  for (int t = 0; t < 100; ++t) {
    const double a = -1.5 * u(rng) - 0.1, b = 1.5 * u(rng) + 0.1;
    const double c = -1.5 * u(rng) - 0.1, d = 1.5 * u(rng) + 0.1;
    const RectDislocation rect(a, b, c, d, -(0.5 + 2.0 * u(rng)),
                               Vec3(2 * u(rng) - 1, 2 * u(rng) - 1, 2 * u(rng) - 1));
    const LameParameters p(0.5 + 2.0 * u(rng), 0.5 + 2.0 * u(rng));
    Vec3 x(4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0, -3.0 * u(rng));
    if (rect_point_distance(x, rect) < 0.1 * rect.diagonal()) {
      x[2] = rect.depth() + 0.3 * rect.diagonal();
    }
    const Vec3 closed = u_gamma_closed_form(x, rect, p);
    // Self-convergent oracle: raise the order until the Richardson estimate
    // is far below the acceptance threshold.
    QuadratureResult quad;
    for (int order : {32, 64, 128, 256}) {
      quad = u_gamma_quadrature(x, rect, p, order);
      if (quad.error_estimate <= 1e-9 * (quad.value.norm() + 1e-14)) break;
    }
    const double rel = (closed - quad.value).norm() / (quad.value.norm() + 1e-300);
    worst = std::max(worst, rel);
    ++done;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, done == 100 && worst <= 1e-6 && secs <= 30.0,
         fmt("closed form vs quadrature, %d scenes, worst rel %.2e, %.1f s", done, worst, secs));
}

// 2. Logarithmic singularity of |u3| at a rectangle vertex for tangential slip.
void criterion_2() {
  const RectDislocation rect(-1, 1, -1, 1, -2, Vec3(1, 0, 0));
  std::vector<double> distances;
  for (int i = 0; i < 10; ++i)
    distances.push_back(0.1 * rect.diagonal() * std::pow(10.0, -3.0 * i / 9.0));
  const Vec3 vertex(rect.b, rect.d, rect.depth());
  const Vec3 outward = Vec3(1, 1, 0).normalized();
  const LogFit fit = vertex_singularity_probe(rect, vertex, outward, distances, 2, kMedium);
  const bool pass = fit.r_squared >= 0.99 && std::abs(fit.slope) > 10.0 * fit.slope_stderr;
  report(2, pass,
         fmt("log fit at vertex: R^2 %.4f, slope %.3e (stderr %.1e)", fit.r_squared, fit.slope,
             fit.slope_stderr));
}

// 3. Traction-free surface: mindlin kernel passes at 1e-6; kelvin is the
//    negative control and must exceed the threshold by >= 10x.
void criterion_3() {
  const RectDislocation rect(-0.5, 0.5, -0.5, 0.5, -1.0, Vec3(1, 0, 0));
  const TriMesh mesh = rect_to_mesh(rect, 6, 6);
  const SlipField s = constant_slip(mesh, rect.slip, SlipMode::tangential);
  const StationSet probes = StationSet::surface_grid(-2, 2, -2, 2, 15, 15);
  const double mind =
      free_surface_traction_check(probes.points, mesh, s, kMedium, Kernel::mindlin, 6);
  const double kelv =
      free_surface_traction_check(probes.points, mesh, s, kMedium, Kernel::kelvin, 6);
  report(3, mind <= 1e-6 && kelv >= 10.0 * 1e-6,
         fmt("max normalized traction: mindlin %.2e, kelvin control %.2e", mind, kelv));
}

// 4. Transmission conditions: the displacement jump recovers the slip and the
//    traction jump extrapolates to zero.
void criterion_4() {
  const RectDislocation rect(-1, 1, -1, 1, -2, Vec3(1, 0, 0));
  const TriMesh mesh = rect_to_mesh(rect, 8, 8);
  const SlipField s = constant_slip(mesh, rect.slip, SlipMode::tangential);
  int facet = -1;
  for (int f = 0; f < mesh.num_facets(); ++f)
    if ((mesh.facet_centroid(f) - Vec3(0, 0, -2)).norm() < 0.2) facet = f;
  const Vec3 q = mesh.facet_centroid(facet);
  std::vector<double> ladder;
  for (int i = 0; i < 6; ++i) ladder.push_back(8e-3 * rect.diagonal() / std::pow(3.0, i));
  const JumpReport jr = jump_check(q, facet, mesh, s, kMedium, Kernel::mindlin, ladder, 12);
  const TractionJumpReport tr =
      traction_continuity_check(q, facet, mesh, s, kMedium, Kernel::mindlin, ladder, 12);
  report(4, jr.rel_error <= 1e-3 && tr.relative <= 1e-2,
         fmt("jump rel error %.2e, traction jump %.2e", jr.rel_error, tr.relative));
}

// Shared helper for criteria 5: FEM solve + surface comparison on a fixed
// probe window against the double-layer forward map.
struct SurfaceCompare {
  double rel_l2 = 0.0;
  bool converged = false;
  int probes = 0;
};

SurfaceCompare fd_surface_compare(const TriMesh& mesh, const SlipField& s, const LameField& field,
                                  double L, int n, double window, double exclusion) {
  GridSpec grid;
  grid.L = grid.D = L;
  grid.nx = grid.ny = grid.nz = n;
  const FdOperator op(field, grid);
  const Eigen::VectorXd rhs = discretize_fault_source(mesh, s, field, grid);
  const DiscreteSolution sol = solve(op, rhs, 1e-8, 40000);
  SurfaceCompare out;
  out.converged = sol.converged;
  double num = 0.0, den = 0.0;
  const int m = 16;
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= m; ++i) {
      const Vec3 x(-window + 2.0 * window * i / m, -window + 2.0 * window * j / m, 0.0);
      if (distance_to_mesh(mesh, x) < exclusion) continue;
      const Vec3 ufd = sol.sample(x);
      const Vec3 ur = displacement_at(x, mesh, s, kMedium, Kernel::mindlin, 6);
      num += (ufd - ur).squaredNorm();
      den += ur.squaredNorm();
      ++out.probes;
    }
  out.rel_l2 = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return out;
}

// 5. FEM/FD cross-validation: 64^3 -> 128^3, surface displacements within 5%
//    on the finest grid, observed convergence order >= 1.
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const RectDislocation rect(-0.5, 0.5, -0.5, 0.5, -1.0, Vec3(1, 0, 0));
  const TriMesh mesh = rect_to_mesh(rect, 8, 8);
  const SlipField s = constant_slip(mesh, rect.slip, SlipMode::tangential);
  const LameField field = LameField::constant(kMedium);
  // Exclusion 1.0 equals 4h on the 64^3 grid and is kept fixed on the finer
  // grid so both errors are measured on the same probe set.
  const SurfaceCompare coarse = fd_surface_compare(mesh, s, field, 10.0, 64, 2.0, 1.0);
  const SurfaceCompare fine = fd_surface_compare(mesh, s, field, 10.0, 128, 2.0, 1.0);
  const double order = std::log2(coarse.rel_l2 / fine.rel_l2);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(5,
         coarse.converged && fine.converged && fine.rel_l2 <= 0.05 && order >= 1.0 &&
             secs <= 600.0,
         fmt("surface rel L2: 64^3 %.4f, 128^3 %.4f, order %.2f, %.0f s", coarse.rel_l2,
             fine.rel_l2, order, secs));
}

// 6. Heterogeneous transmission: tanh shear-modulus profile, FEM-recovered
//    jump within 10% of the configured slip.
void criterion_6() {
  const LameField field([](const Vec3&) { return 1.0; },
                        [](const Vec3& x) { return 1.0 + 0.2 * std::tanh(x[2] + 0.5); }, 0.2, 0.7,
                        3.0);
  const RectDislocation rect(-1, 1, -1, 1, -2, Vec3(1, 0, 0));
  const TriMesh mesh = rect_to_mesh(rect, 8, 8);
  const SlipField s = constant_slip(mesh, rect.slip, SlipMode::tangential);
  GridSpec grid;
  grid.L = grid.D = 4.0;
  grid.nx = grid.ny = grid.nz = 64;
  const FdOperator op(field, grid);
  const Eigen::VectorXd rhs = discretize_fault_source(mesh, s, field, grid);
  const DiscreteSolution sol = solve(op, rhs, 1e-8, 40000);
  const double h = grid.hz();
  double worst = 0.0;
  for (double px : {0.0, 0.3, -0.4}) {
    const Vec3 c(px, 0.1, rect.depth());
    auto jump_at = [&](double eps) {
      return Vec3(sol.sample(c + Vec3(0, 0, eps)) - sol.sample(c - Vec3(0, 0, eps)));
    };
    // Richardson over eps = {2h, 4h} removes the smooth O(eps) trend.
    const Vec3 jump = 2.0 * jump_at(2.0 * h) - jump_at(4.0 * h);
    worst = std::max(worst, (jump - rect.slip).norm() / rect.slip.norm());
  }
  report(6, sol.converged && worst <= 0.10,
         fmt("tanh medium, worst jump recovery error %.3f", worst));
}

// 7. Slip-inversion round trip with inverse-crime control (2x finer synthetic
//    mesh), noiseless recovery within 5%.
void criterion_7() {
  const RectDislocation rect(-1, 1, -1, 1, -2, Vec3(1, 0, 0));
  const StationSet st = StationSet::surface_grid(-2.5, 2.5, -2.5, 2.5, 6, 6);
  const TriMesh fine = rect_to_mesh(rect, 4, 4);
  const SlipField truth = constant_slip(fine, rect.slip, SlipMode::tangential);
  const Eigen::VectorXd d =
      stack_displacements(surface_displacement(st, fine, truth, kMedium, 6));
  const TriMesh mesh = rect_to_mesh(rect, 2, 2);
  const GreensMatrix gm = assemble_greens(st, mesh, SlipMode::tangential, kMedium, 6);
  const InversionResult inv = invert_slip(gm, d, 1e-8 * gm.G.norm());
  const SlipField rec = gm.expand(inv.m);
  double num = 0.0, den = 0.0;
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const double a = mesh.facet_area(f);
    num += a * (rec.g[f] - rect.slip).squaredNorm();
    den += a * rect.slip.squaredNorm();
  }
  const double rel = std::sqrt(num / den);
  report(7, !inv.rank_deficient && rel <= 0.05, fmt("slip recovery rel L2 error %.4f", rel));
}

// 8. Geometry search: depth-only recovery within 1% in at most 200 misfit
//    evaluations on noiseless data.
void criterion_8() {
  const RectDislocation rect(-1, 1, -1, 1, -2, Vec3(1, 0, 0));
  const StationSet st = StationSet::surface_grid(-2.5, 2.5, -2.5, 2.5, 5, 5);
  const TriMesh fine = rect_to_mesh(rect, 4, 4);
  const SlipField truth = constant_slip(fine, rect.slip, SlipMode::tangential);
  const Eigen::VectorXd d =
      stack_displacements(surface_displacement(st, fine, truth, kMedium, 6));
  SlipSolverConfig cfg;
  cfg.mesh_nx = cfg.mesh_ny = 2;
  cfg.quad_order = 3;
  Eigen::VectorXd lo(5), hi(5);
  lo << -1, 1, -1, 1, -3.5;
  hi << -1, 1, -1, 1, -1.0;
  NelderMeadOptions opts;
  opts.max_evals = 200;
  const GeometrySearchResult res =
      search_geometry(d, st, SlipMode::tangential, kMedium, lo, hi, cfg, opts, 1, 42);
  const double rel = std::abs(res.best_params[4] - rect.alpha) / std::abs(rect.alpha);
  report(8, rel <= 0.01 && res.evaluations <= 200,
         fmt("recovered depth %.4f (truth %.1f), rel error %.4f, %d evaluations",
             res.best_params[4], rect.alpha, rel, res.evaluations));
}

// 9. Uniqueness sweep: 20 random pairs of distinct graph-condition faults with
//    full-support tangential slips all separate above the quadrature floor;
//    an identical pair sits at the floor.
void criterion_9() {
  const StationSet sigma = StationSet::surface_grid(-2, 2, -2, 2, 6, 6);
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto random_rect = [&] {
    const double a = -0.8 + 0.4 * unif(rng), b = 0.4 + 0.4 * unif(rng);
    const double c = -0.8 + 0.4 * unif(rng), d = 0.4 + 0.4 * unif(rng);
    return RectDislocation(a, b, c, d, -(0.8 + 1.2 * unif(rng)));
  };
  double min_norm = 1.0;
  bool all = true;
  for (int pair = 0; pair < 20; ++pair) {
    const RectDislocation r1 = random_rect();
    RectDislocation r2 = random_rect();
    if (std::abs(r2.alpha - r1.alpha) < 0.2) r2.alpha = r1.alpha - 0.5;
    const TriMesh m1 = rect_to_mesh(r1, 3, 3), m2 = rect_to_mesh(r2, 3, 3);
    const SlipField s1 = constant_slip(m1, Vec3(1.0, 0.3 * unif(rng), 0.0), SlipMode::tangential);
    const SlipField s2 = constant_slip(m2, Vec3(0.3 * unif(rng), 1.0, 0.0), SlipMode::tangential);
    const SeparationReport sep =
        uniqueness_experiment(m1, s1, m2, s2, sigma, kMedium, Vec3(0, 0, 1), 6);
    min_norm = std::min(min_norm, sep.normalized);
    all = all && sep.normalized > 1e-3 && sep.rms_diff > sep.noise_floor;
  }
  const RectDislocation r(-0.5, 0.5, -0.5, 0.5, -1.0);
  const TriMesh m = rect_to_mesh(r, 3, 3);
  const SlipField s = constant_slip(m, Vec3(1, 0, 0), SlipMode::tangential);
  const SeparationReport same = uniqueness_experiment(m, s, m, s, sigma, kMedium, Vec3(0, 0, 1), 6);
  report(9, all && same.rms_diff <= same.noise_floor + 1e-14,
         fmt("20 pairs, min normalized separation %.3e; identical-pair rms %.1e (floor %.1e)",
             min_norm, same.rms_diff, same.noise_floor));
}

// 10. Rigid-motion nullspace dimensions for the three canonical vertex/normal
//     configurations.
void criterion_10() {
  const std::vector<Vec3> triple = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  const NullspaceResult one = rigid_motion_nullspace({Vec3(0, 0, -2)}, {triple});
  const NullspaceResult three = rigid_motion_nullspace(
      {Vec3(0, 0, -2), Vec3(1, 0, -2), Vec3(0, 1, -2)}, {triple, triple, triple});
  const std::vector<Vec3> e3s = {Vec3(0, 0, 1), Vec3(0, 0, 1), Vec3(0, 0, 1)};
  const NullspaceResult flat = rigid_motion_nullspace(
      {Vec3(0, 0, -2), Vec3(1, 0, -2), Vec3(0, 1, -2)}, {e3s, e3s, e3s});
  report(10, one.dimension == 3 && three.dimension == 0 && flat.dimension >= 3,
         fmt("dimensions: single vertex %d, three vertices %d, parallel normals %d",
             one.dimension, three.dimension, flat.dimension));
}

// 11. Determinism: the CLI run twice with --deterministic and equal seeds
//     produces byte-identical outputs.
void criterion_11(const char* cli) {
  if (!cli) {
    report(11, false, "no CLI binary path given (pass it as argv[1])");
    return;
  }
  const fs::path tmp = fs::temp_directory_path() / "dislo_acceptance_determinism";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  const fs::path cfg = tmp / "scenario.json";
  std::ofstream(cfg) << R"({
    "task": "forward",
    "fault": {"a": -1, "b": 1, "c": -1, "d": 1, "alpha": -2, "mesh_nx": 4, "mesh_ny": 4},
    "slip": {"g": [1, 0, 0], "mode": "tangential"},
    "stations": {"x1_min": -2, "x1_max": 2, "x2_min": -2, "x2_max": 2, "n1": 11, "n2": 11}
  })";
  auto run_once = [&](const std::string& out) {
    const std::string cmd = std::string(cli) + " forward --config " + cfg.string() + " --out " +
                            (tmp / out).string() + " --seed 7 --deterministic > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int c1 = run_once("a");
  const int c2 = run_once("b");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool identical = c1 == 0 && c2 == 0;
  for (const char* name : {"forward.csv", "config.json"}) {
    const std::string sa = slurp(tmp / "a" / name), sb = slurp(tmp / "b" / name);
    identical = identical && !sa.empty() && sa == sb;
  }
  fs::remove_all(tmp);
  report(11, identical, fmt("two deterministic CLI runs, exit codes %d/%d, outputs %s", c1, c2,
                            identical ? "byte-identical" : "differ"));
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11(cli);
  std::printf("%s (%d of 11 criteria failed)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
