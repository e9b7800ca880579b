#pragma once

// Independent finite-element/finite-difference oracle: solves the
// source-form problem div(C grad_hat u) = div(C (g x n) delta_S) on a
// truncated half-space box with trilinear elements on a uniform grid.
// Traction-free at x3 = 0 is the natural boundary condition; lateral and
// bottom truncation faces carry homogeneous Dirichlet conditions.

#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dislo/core.hpp"
#include "dislo/mesh.hpp"

namespace dislo {

struct GridSpec {
  double L = 1.0;  // x1, x2 in (-L, L)
  double D = 1.0;  // x3 in (-D, 0)
  int nx = 16, ny = 16, nz = 16;  // cells per axis

  double hx() const { return 2.0 * L / nx; }
  double hy() const { return 2.0 * L / ny; }
  double hz() const { return D / nz; }
  int nodes_x() const { return nx + 1; }
  int nodes_y() const { return ny + 1; }
  int nodes_z() const { return nz + 1; }
  long num_nodes() const { return long(nodes_x()) * nodes_y() * nodes_z(); }
  long num_dofs() const { return 3 * num_nodes(); }

  long node_index(int i, int j, int k) const {
    return (long(k) * nodes_y() + j) * nodes_x() + i;
  }
  Vec3 node_coord(int i, int j, int k) const {
    return {-L + i * hx(), -L + j * hy(), -D + k * hz()};
  }
  bool dirichlet_node(int i, int j, int k) const {
    return i == 0 || i == nx || j == 0 || j == ny || k == 0;
  }
  // Clearance checks for an embedded fault mesh.
  bool fault_clear(const TriMesh& mesh) const;
};

// Matrix-free discrete operator u -> -div(C grad_hat u) (SPD on the
// constrained space). Homogeneous fields use a precomputed 27-point block
// stencil; heterogeneous fields apply per-element matrices.
class FdOperator {
 public:
  FdOperator(const LameField& field, const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  void apply(const Eigen::VectorXd& u, Eigen::VectorXd& out) const;
  Eigen::VectorXd diagonal() const;  // for Jacobi preconditioning
  void project(Eigen::VectorXd& v) const;  // zero Dirichlet dofs

  // Explicit sparse assembly; intended for small grids (symmetry checks).
  Eigen::SparseMatrix<double> assemble() const;

 private:
  GridSpec grid_;
  bool homogeneous_;
  std::vector<double> lam_e_, mu_e_;      // per-element coefficients
  Eigen::Matrix<double, 24, 24> k_lam_, k_mu_;  // reference element matrices
  // Homogeneous path: 27-neighbor 3x3 blocks.
  std::vector<Mat3> stencil_;
};

// Weak-form load vector of the distributional source div(C (g x n) delta_S):
// rhs(a, i) = sum over surface quadrature of w * [C (g x n)]_ij dphi_a/dx_j.
// Facets are subdivided until their size is below ~0.7 grid cells.
Eigen::VectorXd discretize_fault_source(const TriMesh& mesh, const SlipField& slip,
                                        const LameField& field, const GridSpec& grid);

struct DiscreteSolution {
  GridSpec grid;
  Eigen::VectorXd u;  // nodal displacements, dof = 3*node + component
  double rel_residual = 0.0;
  int iterations = 0;
  bool converged = false;

  Vec3 sample(const Vec3& x) const;  // trilinear interpolation
};

DiscreteSolution solve(const FdOperator& op, const Eigen::VectorXd& force, double tol = 1e-8,
                       int max_iter = 20000);

struct FdErrorReport {
  double rel_l2 = 0.0;
  double max_rel = 0.0;
  int num_probes = 0;
};

// Compares the discrete solution with a reference displacement closure on a
// probe set kept >= 4h from the fault and >= 8h from the truncation faces.
FdErrorReport compare_with_analytic(const DiscreteSolution& sol, const TriMesh& mesh,
                                    const std::function<Vec3(const Vec3&)>& reference);

}  // namespace dislo
