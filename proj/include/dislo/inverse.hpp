#pragma once

// Inverse dislocation problem: slip-to-surface linear map assembly,
// regularized slip inversion on a fixed patched fault, geometry search by
// derivative-free misfit minimization, and the uniqueness/distinguishability
// experiments (graph-condition scenes, rigid-motion nullspace).

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dislo/forward.hpp"

namespace dislo {

struct GreensMatrix {
  Eigen::MatrixXd G;  // 3*n_stations rows, n_patches * n_dirs columns
  StationSet stations;
  SlipMode mode = SlipMode::tangential;
  std::vector<FacetFrame> frames;  // basis per patch (t1,t2 tangential; n normal)

  int dirs_per_patch() const { return mode == SlipMode::tangential ? 2 : 1; }
  // Expands coefficient vector m into a per-facet slip field.
  SlipField expand(const Eigen::VectorXd& m) const;
  // Stacks a slip field into coefficients (projection onto the basis).
  Eigen::VectorXd stack(const SlipField& slip) const;
};

GreensMatrix assemble_greens(const StationSet& stations, const TriMesh& mesh, SlipMode mode,
                             const LameParameters& p, int order);

Eigen::VectorXd stack_displacements(const DisplacementField& field);

struct InversionResult {
  Eigen::VectorXd m;
  double residual_norm = 0.0;  // ||G m - d||
  double reg_weight = 0.0;
  SlipMode mode = SlipMode::tangential;
  bool rank_deficient = false;
};

enum class Smoothing { none, patch_laplacian };

// Minimizes ||G m - d||^2 + w^2 ||R m||^2 by normal equations (LDLT).
// R is the identity or the patch-adjacency Laplacian of the mesh.
InversionResult invert_slip(const GreensMatrix& gm, const Eigen::VectorXd& data,
                            double reg_weight, Smoothing smoothing = Smoothing::none,
                            const TriMesh* mesh = nullptr);

struct SlipSolverConfig {
  double reg_weight = 1e-8;
  Smoothing smoothing = Smoothing::none;
  int quad_order = 3;
  int mesh_nx = 4, mesh_ny = 4;  // patch resolution for candidate rectangles
};

// Rectangle geometry parameters (a, b, c, d, alpha); builds the mesh, solves
// the inner slip inversion, returns the data residual norm.
double geometry_misfit(const Eigen::VectorXd& params, const Eigen::VectorXd& data,
                       const StationSet& stations, SlipMode mode, const LameParameters& p,
                       const SlipSolverConfig& cfg);

struct NelderMeadOptions {
  double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  int max_evals = 200;
  double ftol = 1e-10;
};

struct GeometrySearchResult {
  Eigen::VectorXd best_params;
  double misfit = 0.0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> trace;  // best misfit after each iteration
  bool flat_landscape = false;
};

// Generic Nelder-Mead simplex minimizer (bound-constrained by clamping).
GeometrySearchResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x0, const Eigen::VectorXd& step,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                 const NelderMeadOptions& opts);

// Multi-restart geometry search over a bounds box.
GeometrySearchResult search_geometry(const Eigen::VectorXd& data, const StationSet& stations,
                                     SlipMode mode, const LameParameters& p,
                                     const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                     const SlipSolverConfig& cfg, const NelderMeadOptions& opts,
                                     int restarts, unsigned seed);

struct SeparationReport {
  double rms_diff = 0.0;
  double normalized = 0.0;   // rms_diff / max(rms_1, rms_2)
  double noise_floor = 0.0;  // quadrature-order re-evaluation RMS difference
};

// ||u1 - u2|| over the station set; rejects hypothesis violations (support,
// mode, graph condition) with a named error.
SeparationReport uniqueness_experiment(const TriMesh& mesh1, const SlipField& slip1,
                                       const TriMesh& mesh2, const SlipField& slip2,
                                       const StationSet& sigma, const LameParameters& p,
                                       const Vec3& graph_direction, int order);

struct NullspaceResult {
  int dimension = 0;
  Eigen::MatrixXd basis;  // 6 x dim, unknowns (a1, a2, a3, c1, c2, c3)
};

// Nullspace of the rigid-motion constraint system (A x_v + c) . n_{v,i} = 0
// with A the skew matrix of (a1, a2, a3). Singular values below
// 1e-10 * sigma_max count as zero.
NullspaceResult rigid_motion_nullspace(const std::vector<Vec3>& vertices,
                                       const std::vector<std::vector<Vec3>>& normals_per_vertex);

}  // namespace dislo
