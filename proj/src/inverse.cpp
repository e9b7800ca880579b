#include "dislo/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "dislo/rect.hpp"

namespace dislo {

SlipField GreensMatrix::expand(const Eigen::VectorXd& m) const {
  const int nd = dirs_per_patch();
  const int nf = static_cast<int>(frames.size());
  if (m.size() != long(nf) * nd)
    throw std::invalid_argument("GreensMatrix::expand: coefficient size mismatch");
  SlipField s;
  s.mode = mode;
  s.g.resize(nf);
  for (int f = 0; f < nf; ++f) {
    if (mode == SlipMode::tangential)
      s.g[f] = m[f * 2] * frames[f].t1 + m[f * 2 + 1] * frames[f].t2;
    else
      s.g[f] = m[f] * frames[f].n;
  }
  return s;
}

Eigen::VectorXd GreensMatrix::stack(const SlipField& slip) const {
  const int nd = dirs_per_patch();
  const int nf = static_cast<int>(frames.size());
  if (static_cast<int>(slip.g.size()) != nf)
    throw std::invalid_argument("GreensMatrix::stack: slip size mismatch");
  Eigen::VectorXd m(long(nf) * nd);
  for (int f = 0; f < nf; ++f) {
    if (mode == SlipMode::tangential) {
      m[f * 2] = slip.g[f].dot(frames[f].t1);
      m[f * 2 + 1] = slip.g[f].dot(frames[f].t2);
    } else {
      m[f] = slip.g[f].dot(frames[f].n);
    }
  }
  return m;
}

GreensMatrix assemble_greens(const StationSet& stations, const TriMesh& mesh, SlipMode mode,
                             const LameParameters& p, int order) {
  if (mode == SlipMode::oblique)
    throw std::invalid_argument("assemble_greens: oblique mode has no per-patch basis");
  GreensMatrix gm;
  gm.stations = stations;
  gm.mode = mode;
  gm.frames = facet_frames(mesh);
  const int nf = mesh.num_facets();
  const int nd = gm.dirs_per_patch();
  const long rows = 3 * long(stations.points.size());
  gm.G.resize(rows, long(nf) * nd);
  SlipField basis;
  basis.mode = mode;
  basis.g.assign(nf, Vec3::Zero());
  for (int f = 0; f < nf; ++f) {
    for (int d = 0; d < nd; ++d) {
      basis.g[f] = mode == SlipMode::tangential ? (d == 0 ? gm.frames[f].t1 : gm.frames[f].t2)
                                                : gm.frames[f].n;
      const DisplacementField col = surface_displacement(stations, mesh, basis, p, order);
      for (size_t s = 0; s < col.u.size(); ++s)
        gm.G.block<3, 1>(3 * long(s), long(f) * nd + d) = col.u[s];
      basis.g[f].setZero();
    }
  }
  return gm;
}

Eigen::VectorXd stack_displacements(const DisplacementField& field) {
  Eigen::VectorXd d(3 * long(field.u.size()));
  for (size_t s = 0; s < field.u.size(); ++s) d.segment<3>(3 * long(s)) = field.u[s];
  return d;
}

namespace {

// Patch-adjacency Laplacian in the coefficient basis (shared-edge adjacency;
// each direction slot gets its own copy).
Eigen::MatrixXd patch_laplacian(const TriMesh& mesh, int nd) {
  const int nf = mesh.num_facets();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(long(nf) * nd, long(nf) * nd);
  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  for (int f = 0; f < nf; ++f) {
    const auto& t = mesh.triangles[f];
    for (int e = 0; e < 3; ++e) {
      const int a = std::min(t[e], t[(e + 1) % 3]);
      const int b = std::max(t[e], t[(e + 1) % 3]);
      edge_facets[{a, b}].push_back(f);
    }
  }
  for (const auto& [edge, fs] : edge_facets) {
    if (fs.size() != 2) continue;
    for (int d = 0; d < nd; ++d) {
      const long r0 = long(fs[0]) * nd + d, r1 = long(fs[1]) * nd + d;
      lap(r0, r0) += 1.0;
      lap(r1, r1) += 1.0;
      lap(r0, r1) -= 1.0;
      lap(r1, r0) -= 1.0;
    }
  }
  return lap;
}

}  // namespace

InversionResult invert_slip(const GreensMatrix& gm, const Eigen::VectorXd& data,
                            double reg_weight, Smoothing smoothing, const TriMesh* mesh) {
  if (data.size() != gm.G.rows())
    throw std::invalid_argument("invert_slip: data size does not match Greens matrix rows");
  const long n = gm.G.cols();
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(n, n);
  if (smoothing == Smoothing::patch_laplacian) {
    if (!mesh) throw std::invalid_argument("invert_slip: patch_laplacian smoothing needs a mesh");
    R = patch_laplacian(*mesh, gm.dirs_per_patch());
  }
  const Eigen::MatrixXd A =
      gm.G.transpose() * gm.G + reg_weight * reg_weight * R.transpose() * R;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
  InversionResult res;
  res.mode = gm.mode;
  res.reg_weight = reg_weight;
  res.rank_deficient = ldlt.info() != Eigen::Success || !ldlt.isPositive();
  res.m = ldlt.solve(gm.G.transpose() * data);
  res.residual_norm = (gm.G * res.m - data).norm();
  return res;
}

double geometry_misfit(const Eigen::VectorXd& params, const Eigen::VectorXd& data,
                       const StationSet& stations, SlipMode mode, const LameParameters& p,
                       const SlipSolverConfig& cfg) {
  if (params.size() != 5)
    throw std::invalid_argument("geometry_misfit: expected parameters (a, b, c, d, alpha)");
  if (params[1] <= params[0] || params[3] <= params[2] || params[4] >= 0.0)
    return 10.0 * data.norm() + 1.0;  // infeasible box corner after clamping
  const RectDislocation rect(params[0], params[1], params[2], params[3], params[4]);
  const TriMesh mesh = rect_to_mesh(rect, cfg.mesh_nx, cfg.mesh_ny);
  const GreensMatrix gm = assemble_greens(stations, mesh, mode, p, cfg.quad_order);
  const InversionResult inv = invert_slip(gm, data, cfg.reg_weight, cfg.smoothing, &mesh);
  return inv.residual_norm;
}

GeometrySearchResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                 const NelderMeadOptions& opts) {
  const int n = static_cast<int>(x0.size());
  auto clamp = [&](Eigen::VectorXd x) {
    for (int i = 0; i < n; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
  };
  GeometrySearchResult res;
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  };

  std::vector<Eigen::VectorXd> xs(n + 1);
  std::vector<double> fs(n + 1);
  xs[0] = clamp(x0);
  fs[0] = eval(xs[0]);
  for (int i = 0; i < n; ++i) {
    xs[i + 1] = xs[0];
    xs[i + 1][i] += step[i];
    xs[i + 1] = clamp(xs[i + 1]);
    fs[i + 1] = eval(xs[i + 1]);
  }

  auto order = [&] {
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Eigen::VectorXd> xs2(n + 1);
    std::vector<double> fs2(n + 1);
    for (int i = 0; i <= n; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs.swap(xs2);
    fs.swap(fs2);
  };
  order();

  // An iteration spends up to two evaluations (reflection plus expansion or
  // contraction); the shrink path checks the budget itself.
  while (evals + 2 <= opts.max_evals) {
    res.trace.push_back(fs[0]);
    if (fs[n] - fs[0] <= opts.ftol * (std::abs(fs[0]) + opts.ftol)) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd xr = clamp(centroid + opts.alpha * (centroid - xs[n]));
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const Eigen::VectorXd xe = clamp(centroid + opts.gamma * (centroid - xs[n]));
      const double fe = eval(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      const Eigen::VectorXd xc = clamp(centroid + opts.rho * (xs[n] - centroid));
      const double fc = eval(xc);
      if (fc < fs[n]) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          xs[i] = clamp(xs[0] + opts.sigma * (xs[i] - xs[0]));
          fs[i] = eval(xs[i]);
          if (evals >= opts.max_evals) break;
        }
      }
    }
    order();
  }
  res.best_params = xs[0];
  res.misfit = fs[0];
  res.evaluations = evals;
  const double spread = *std::max_element(fs.begin(), fs.end()) - fs[0];
  res.flat_landscape = res.converged && spread <= opts.ftol && fs[0] > 0.0 &&
                       (xs[n] - xs[0]).norm() > 1e-6 * (hi - lo).norm();
  return res;
}

GeometrySearchResult search_geometry(const Eigen::VectorXd& data, const StationSet& stations,
                                     SlipMode mode, const LameParameters& p,
                                     const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                     const SlipSolverConfig& cfg, const NelderMeadOptions& opts,
                                     int restarts, unsigned seed) {
  auto f = [&](const Eigen::VectorXd& x) {
    return geometry_misfit(x, data, stations, mode, p, cfg);
  };
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.15, 0.85);
  GeometrySearchResult best;
  best.misfit = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Eigen::VectorXd x0(lo.size());
    for (long i = 0; i < lo.size(); ++i) x0[i] = lo[i] + unif(rng) * (hi[i] - lo[i]);
    const Eigen::VectorXd step = 0.1 * (hi - lo);
    GeometrySearchResult run = nelder_mead(f, x0, step, lo, hi, opts);
    run.evaluations += best.evaluations;
    if (run.misfit < best.misfit) {
      const int total = run.evaluations;
      best = std::move(run);
      best.evaluations = total;
    } else {
      best.evaluations = run.evaluations;
    }
  }
  return best;
}

SeparationReport uniqueness_experiment(const TriMesh& mesh1, const SlipField& slip1,
                                       const TriMesh& mesh2, const SlipField& slip2,
                                       const StationSet& sigma, const LameParameters& p,
                                       const Vec3& graph_direction, int order) {
  if (!slip1.full_support() || !slip2.full_support())
    throw std::invalid_argument("uniqueness_experiment: slip must be nonzero on every facet");
  if (slip1.mode == SlipMode::oblique || slip2.mode == SlipMode::oblique ||
      slip1.mode != slip2.mode)
    throw std::invalid_argument(
        "uniqueness_experiment: both slips must share a tangential or normal mode");
  const GraphCheckResult g1 = validate_graph_condition(mesh1, graph_direction);
  const GraphCheckResult g2 = validate_graph_condition(mesh2, graph_direction);
  if (!g1.is_graph || !g2.is_graph)
    throw std::invalid_argument(
        "uniqueness_experiment: a fault violates the graph condition for the given direction");

  const DisplacementField u1 = surface_displacement(sigma, mesh1, slip1, p, order);
  const DisplacementField u2 = surface_displacement(sigma, mesh2, slip2, p, order);
  const int ns = static_cast<int>(sigma.points.size());
  double d2 = 0.0, n1 = 0.0, n2 = 0.0;
  for (int s = 0; s < ns; ++s) {
    d2 += (u1.u[s] - u2.u[s]).squaredNorm();
    n1 += u1.u[s].squaredNorm();
    n2 += u2.u[s].squaredNorm();
  }
  SeparationReport rep;
  rep.rms_diff = std::sqrt(d2 / ns);
  const double denom = std::sqrt(std::max(n1, n2) / ns);
  rep.normalized = denom > 0.0 ? rep.rms_diff / denom : 0.0;

  // Noise floor: re-evaluate scene 1 at a bumped quadrature order and take the
  // RMS change as the discretization uncertainty of the comparison.
  const DisplacementField u1b = surface_displacement(sigma, mesh1, slip1, p, order + 6);
  double f2 = 0.0;
  for (int s = 0; s < ns; ++s) f2 += (u1.u[s] - u1b.u[s]).squaredNorm();
  rep.noise_floor = std::sqrt(f2 / ns);
  return rep;
}

NullspaceResult rigid_motion_nullspace(const std::vector<Vec3>& vertices,
                                       const std::vector<std::vector<Vec3>>& normals_per_vertex) {
  if (vertices.size() != normals_per_vertex.size())
    throw std::invalid_argument("rigid_motion_nullspace: vertices/normals size mismatch");
  long rows = 0;
  for (const auto& ns : normals_per_vertex) rows += long(ns.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(std::max(rows, 6L), 6);
  long r = 0;
  for (size_t v = 0; v < vertices.size(); ++v) {
    const Vec3& x = vertices[v];
    for (const Vec3& n : normals_per_vertex[v]) {
      // (a x x + c) . n = a . (x x n) + c . n
      const Vec3 xn = x.cross(n);
      M.row(r) << xn[0], xn[1], xn[2], n[0], n[1], n[2];
      ++r;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double tol = 1e-10 * (sv.size() > 0 ? sv[0] : 0.0);
  NullspaceResult res;
  for (long i = 0; i < sv.size(); ++i)
    if (sv[i] <= tol) ++res.dimension;
  if (sv.size() < 6) res.dimension += 6 - int(sv.size());
  res.basis = svd.matrixV().rightCols(res.dimension);
  return res;
}

}  // namespace dislo
