#include "dislo/fdsolve.hpp"

#include <algorithm>
#include <cmath>

namespace dislo {

namespace {

// Trilinear shape gradients on the box [0,hx]x[0,hy]x[0,hz]; local node
// a = (ai, aj, ak), dof = node*3 + component.
void shape_grads(double hx, double hy, double hz, double x, double y, double z,
                 double grads[8][3]) {
  const double sx = x / hx, sy = y / hy, sz = z / hz;
  for (int ak = 0; ak < 2; ++ak)
    for (int aj = 0; aj < 2; ++aj)
      for (int ai = 0; ai < 2; ++ai) {
        const int a = (ak * 2 + aj) * 2 + ai;
        const double fx = ai ? sx : 1.0 - sx;
        const double fy = aj ? sy : 1.0 - sy;
        const double fz = ak ? sz : 1.0 - sz;
        const double dx = (ai ? 1.0 : -1.0) / hx;
        const double dy = (aj ? 1.0 : -1.0) / hy;
        const double dz = (ak ? 1.0 : -1.0) / hz;
        grads[a][0] = dx * fy * fz;
        grads[a][1] = fx * dy * fz;
        grads[a][2] = fx * fy * dz;
      }
}

void reference_matrices(double hx, double hy, double hz, Eigen::Matrix<double, 24, 24>& k_lam,
                        Eigen::Matrix<double, 24, 24>& k_mu) {
  k_lam.setZero();
  k_mu.setZero();
  const double gp[2] = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
  double grads[8][3];
  for (int qi = 0; qi < 2; ++qi)
    for (int qj = 0; qj < 2; ++qj)
      for (int qk = 0; qk < 2; ++qk) {
        const double w = hx * hy * hz / 8.0;
        shape_grads(hx, hy, hz, gp[qi] * hx, gp[qj] * hy, gp[qk] * hz, grads);
        for (int a = 0; a < 8; ++a)
          for (int b = 0; b < 8; ++b)
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) {
                k_lam(a * 3 + i, b * 3 + j) += w * grads[a][i] * grads[b][j];
                double m = grads[a][j] * grads[b][i];
                if (i == j)
                  for (int k = 0; k < 3; ++k) m += grads[a][k] * grads[b][k];
                k_mu(a * 3 + i, b * 3 + j) += w * m;
              }
      }
}

}  // namespace

bool GridSpec::fault_clear(const TriMesh& mesh) const {
  const double h = std::max({hx(), hy(), hz()});
  for (const auto& v : mesh.vertices) {
    if (v[0] < -L + 4 * h || v[0] > L - 4 * h) return false;
    if (v[1] < -L + 4 * h || v[1] > L - 4 * h) return false;
    if (v[2] < -D + 4 * h) return false;
    if (v[2] > -2 * h) return false;
  }
  return true;
}

FdOperator::FdOperator(const LameField& field, const GridSpec& grid)
    : grid_(grid), homogeneous_(field.is_constant()) {
  reference_matrices(grid.hx(), grid.hy(), grid.hz(), k_lam_, k_mu_);
  const long ne = long(grid.nx) * grid.ny * grid.nz;
  lam_e_.resize(ne);
  mu_e_.resize(ne);
  long e = 0;
  for (int k = 0; k < grid.nz; ++k)
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i, ++e) {
        const Vec3 c = grid.node_coord(i, j, k) +
                       0.5 * Vec3(grid.hx(), grid.hy(), grid.hz());
        lam_e_[e] = field.lambda(c);
        mu_e_[e] = field.mu(c);
      }
  if (homogeneous_) {
    // Merged 27-neighbor block stencil for fully interior nodes.
    stencil_.assign(27, Mat3::Zero());
    const double lam0 = lam_e_[0], mu0 = mu_e_[0];
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const int di = (b & 1) - (a & 1);
        const int dj = ((b >> 1) & 1) - ((a >> 1) & 1);
        const int dk = ((b >> 2) & 1) - ((a >> 2) & 1);
        const int s = ((dk + 1) * 3 + (dj + 1)) * 3 + (di + 1);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            stencil_[s](i, j) +=
                lam0 * k_lam_(a * 3 + i, b * 3 + j) + mu0 * k_mu_(a * 3 + i, b * 3 + j);
      }
  }
}

void FdOperator::project(Eigen::VectorXd& v) const {
  for (int k = 0; k <= grid_.nz; ++k)
    for (int j = 0; j <= grid_.ny; ++j)
      for (int i = 0; i <= grid_.nx; ++i)
        if (grid_.dirichlet_node(i, j, k)) v.segment<3>(3 * grid_.node_index(i, j, k)).setZero();
}

void FdOperator::apply(const Eigen::VectorXd& u_in, Eigen::VectorXd& out) const {
  Eigen::VectorXd u = u_in;
  project(u);
  out.setZero(u.size());
  const int nx = grid_.nx, ny = grid_.ny, nz = grid_.nz;

#pragma omp parallel for collapse(2) schedule(static)
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) {
        if (grid_.dirichlet_node(i, j, k)) continue;
        Vec3 acc = Vec3::Zero();
        const bool interior =
            homogeneous_ && i >= 1 && i <= nx - 1 && j >= 1 && j <= ny - 1 && k >= 1 && k <= nz - 1;
        if (interior) {
          for (int dk = -1; dk <= 1; ++dk)
            for (int dj = -1; dj <= 1; ++dj)
              for (int di = -1; di <= 1; ++di) {
                const int s = ((dk + 1) * 3 + (dj + 1)) * 3 + (di + 1);
                acc += stencil_[s] * u.segment<3>(3 * grid_.node_index(i + di, j + dj, k + dk));
              }
        } else {
          // Sum over the (up to 8) adjacent elements; node is local corner a.
          for (int ak = 0; ak < 2; ++ak)
            for (int aj = 0; aj < 2; ++aj)
              for (int ai = 0; ai < 2; ++ai) {
                const int ei = i - ai, ej = j - aj, ek = k - ak;
                if (ei < 0 || ei >= nx || ej < 0 || ej >= ny || ek < 0 || ek >= nz) continue;
                const long e = (long(ek) * ny + ej) * nx + ei;
                const int a = (ak * 2 + aj) * 2 + ai;
                for (int b = 0; b < 8; ++b) {
                  const int bi = b & 1, bj = (b >> 1) & 1, bk = (b >> 2) & 1;
                  const Vec3 ub = u.segment<3>(3 * grid_.node_index(ei + bi, ej + bj, ek + bk));
                  for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                      acc[c] += (lam_e_[e] * k_lam_(a * 3 + c, b * 3 + d) +
                                 mu_e_[e] * k_mu_(a * 3 + c, b * 3 + d)) *
                                ub[d];
                }
              }
        }
        out.segment<3>(3 * grid_.node_index(i, j, k)) = acc;
      }
}

Eigen::VectorXd FdOperator::diagonal() const {
  Eigen::VectorXd diag = Eigen::VectorXd::Ones(grid_.num_dofs());
  const int nx = grid_.nx, ny = grid_.ny, nz = grid_.nz;
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i) {
        if (grid_.dirichlet_node(i, j, k)) continue;
        Vec3 d = Vec3::Zero();
        for (int ak = 0; ak < 2; ++ak)
          for (int aj = 0; aj < 2; ++aj)
            for (int ai = 0; ai < 2; ++ai) {
              const int ei = i - ai, ej = j - aj, ek = k - ak;
              if (ei < 0 || ei >= nx || ej < 0 || ej >= ny || ek < 0 || ek >= nz) continue;
              const long e = (long(ek) * ny + ej) * nx + ei;
              const int a = (ak * 2 + aj) * 2 + ai;
              for (int c = 0; c < 3; ++c)
                d[c] +=
                    lam_e_[e] * k_lam_(a * 3 + c, a * 3 + c) + mu_e_[e] * k_mu_(a * 3 + c, a * 3 + c);
            }
        diag.segment<3>(3 * grid_.node_index(i, j, k)) = d;
      }
  return diag;
}

Eigen::SparseMatrix<double> FdOperator::assemble() const {
  const long n = grid_.num_dofs();
  std::vector<Eigen::Triplet<double>> trips;
  const int nx = grid_.nx, ny = grid_.ny, nz = grid_.nz;
  auto dirichlet_dof = [&](long node) {
    const int i = int(node % (nx + 1));
    const int j = int((node / (nx + 1)) % (ny + 1));
    const int k = int(node / (long(nx + 1) * (ny + 1)));
    return grid_.dirichlet_node(i, j, k);
  };
  long e = 0;
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++e)
        for (int a = 0; a < 8; ++a)
          for (int b = 0; b < 8; ++b) {
            const long na = grid_.node_index(i + (a & 1), j + ((a >> 1) & 1), k + ((a >> 2) & 1));
            const long nb = grid_.node_index(i + (b & 1), j + ((b >> 1) & 1), k + ((b >> 2) & 1));
            if (dirichlet_dof(na) || dirichlet_dof(nb)) continue;
            for (int c = 0; c < 3; ++c)
              for (int d = 0; d < 3; ++d)
                trips.emplace_back(3 * na + c, 3 * nb + d,
                                   lam_e_[e] * k_lam_(a * 3 + c, b * 3 + d) +
                                       mu_e_[e] * k_mu_(a * 3 + c, b * 3 + d));
          }
  for (long node = 0; node < grid_.num_nodes(); ++node)
    if (dirichlet_dof(node))
      for (int c = 0; c < 3; ++c) trips.emplace_back(3 * node + c, 3 * node + c, 1.0);
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(trips.begin(), trips.end());
  return A;
}

namespace {
// Recursively splits a triangle until its longest edge is below target_size,
// then hands (point, weight) quadrature samples to fn (centroid rule per leaf
// piece; leaves are small relative to the grid spacing).
template <class Fn>
void subdivide_facet(const Vec3& v0, const Vec3& v1, const Vec3& v2, double target_size,
                     int level, Fn&& fn) {
  const double size = std::max({(v1 - v0).norm(), (v2 - v1).norm(), (v0 - v2).norm()});
  if (size > target_size && level < 12) {
    const Vec3 m01 = 0.5 * (v0 + v1), m12 = 0.5 * (v1 + v2), m20 = 0.5 * (v2 + v0);
    subdivide_facet(v0, m01, m20, target_size, level + 1, fn);
    subdivide_facet(m01, v1, m12, target_size, level + 1, fn);
    subdivide_facet(m20, m12, v2, target_size, level + 1, fn);
    subdivide_facet(m01, m12, m20, target_size, level + 1, fn);
    return;
  }
  const double area = 0.5 * (v1 - v0).cross(v2 - v0).norm();
  fn((v0 + v1 + v2) / 3.0, area);
}
}  // namespace

Eigen::VectorXd discretize_fault_source(const TriMesh& mesh, const SlipField& slip,
                                        const LameField& field, const GridSpec& grid) {
  if (!grid.fault_clear(mesh))
    throw std::invalid_argument(
        "discretize_fault_source: fault too close to the grid boundaries");
  if (static_cast<int>(slip.g.size()) != mesh.num_facets())
    throw std::invalid_argument("discretize_fault_source: slip/mesh size mismatch");
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(grid.num_dofs());
  const double hmin = std::min({grid.hx(), grid.hy(), grid.hz()});
  double grads[8][3];
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const Vec3 n = mesh.facet_normal(f);
    const Vec3 g = slip.g[f];
    if (g.isZero()) continue;
    const auto& t = mesh.triangles[f];
    subdivide_facet(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]], 0.7 * hmin,
                    0, [&](const Vec3& q, double w) {
                      const double lam = field.lambda(q), mu = field.mu(q);
                      // Moment density C (g x n) = lam (g.n) I + mu (g n^T + n g^T).
                      Mat3 P = mu * (g * n.transpose() + n * g.transpose());
                      P += lam * g.dot(n) * Mat3::Identity();
                      int ci = std::clamp(int((q[0] + grid.L) / grid.hx()), 0, grid.nx - 1);
                      int cj = std::clamp(int((q[1] + grid.L) / grid.hy()), 0, grid.ny - 1);
                      int ck = std::clamp(int((q[2] + grid.D) / grid.hz()), 0, grid.nz - 1);
                      const Vec3 corner = grid.node_coord(ci, cj, ck);
                      shape_grads(grid.hx(), grid.hy(), grid.hz(), q[0] - corner[0],
                                  q[1] - corner[1], q[2] - corner[2], grads);
                      for (int a = 0; a < 8; ++a) {
                        const long node = grid.node_index(ci + (a & 1), cj + ((a >> 1) & 1),
                                                          ck + ((a >> 2) & 1));
                        for (int i = 0; i < 3; ++i) {
                          double s = 0.0;
                          for (int j = 0; j < 3; ++j) s += P(i, j) * grads[a][j];
                          rhs[3 * node + i] += w * s;
                        }
                      }
                    });
  }
  return rhs;
}

Vec3 DiscreteSolution::sample(const Vec3& x) const {
  const GridSpec& g = grid;
  const double fx = (x[0] + g.L) / g.hx();
  const double fy = (x[1] + g.L) / g.hy();
  const double fz = (x[2] + g.D) / g.hz();
  const int i = std::clamp(int(std::floor(fx)), 0, g.nx - 1);
  const int j = std::clamp(int(std::floor(fy)), 0, g.ny - 1);
  const int k = std::clamp(int(std::floor(fz)), 0, g.nz - 1);
  const double sx = std::clamp(fx - i, 0.0, 1.0);
  const double sy = std::clamp(fy - j, 0.0, 1.0);
  const double sz = std::clamp(fz - k, 0.0, 1.0);
  Vec3 v = Vec3::Zero();
  for (int a = 0; a < 8; ++a) {
    const int ai = a & 1, aj = (a >> 1) & 1, ak = (a >> 2) & 1;
    const double w = (ai ? sx : 1 - sx) * (aj ? sy : 1 - sy) * (ak ? sz : 1 - sz);
    v += w * u.segment<3>(3 * g.node_index(i + ai, j + aj, k + ak));
  }
  return v;
}

DiscreteSolution solve(const FdOperator& op, const Eigen::VectorXd& force, double tol,
                       int max_iter) {
  DiscreteSolution sol;
  sol.grid = op.grid();
  Eigen::VectorXd b = force;
  op.project(b);
  const double bnorm = b.norm();
  sol.u = Eigen::VectorXd::Zero(b.size());
  if (bnorm == 0.0) {
    sol.converged = true;
    return sol;
  }
  const Eigen::VectorXd invdiag = op.diagonal().cwiseInverse();
  Eigen::VectorXd r = b, z = invdiag.cwiseProduct(r), pdir = z, Ap(b.size());
  double rz = r.dot(z);
  int it = 0;
  for (; it < max_iter; ++it) {
    op.apply(pdir, Ap);
    const double alpha = rz / pdir.dot(Ap);
    sol.u += alpha * pdir;
    r -= alpha * Ap;
    if (r.norm() <= tol * bnorm) {
      ++it;
      break;
    }
    z = invdiag.cwiseProduct(r);
    const double rz_new = r.dot(z);
    pdir = z + (rz_new / rz) * pdir;
    rz = rz_new;
  }
  sol.iterations = it;
  sol.rel_residual = r.norm() / bnorm;
  sol.converged = sol.rel_residual <= tol;
  return sol;
}

FdErrorReport compare_with_analytic(const DiscreteSolution& sol, const TriMesh& mesh,
                                    const std::function<Vec3(const Vec3&)>& reference) {
  const GridSpec& g = sol.grid;
  const double h = std::max({g.hx(), g.hy(), g.hz()});
  FdErrorReport rep;
  double num = 0.0, den = 0.0;
  // Probe on a coarsened node lattice away from the fault and the truncation.
  const int stride = std::max(1, std::min({g.nx, g.ny, g.nz}) / 16);
  for (int k = 0; k <= g.nz; k += stride)
    for (int j = 0; j <= g.ny; j += stride)
      for (int i = 0; i <= g.nx; i += stride) {
        const Vec3 x = g.node_coord(i, j, k);
        if (x[0] < -g.L + 8 * h || x[0] > g.L - 8 * h) continue;
        if (x[1] < -g.L + 8 * h || x[1] > g.L - 8 * h) continue;
        if (x[2] < -g.D + 8 * h) continue;
        if (distance_to_mesh(mesh, x) < 4 * h) continue;
        const Vec3 ufd = sol.sample(x);
        const Vec3 uref = reference(x);
        num += (ufd - uref).squaredNorm();
        den += uref.squaredNorm();
        if (uref.norm() > 0.0)
          rep.max_rel = std::max(rep.max_rel, (ufd - uref).norm() / uref.norm());
        ++rep.num_probes;
      }
  rep.rel_l2 = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return rep;
}

}  // namespace dislo
