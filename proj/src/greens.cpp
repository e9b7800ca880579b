#include "dislo/greens.hpp"

#include <cmath>

#include "dislo/halfspace_remainder_gen.hpp"

namespace dislo {

namespace {
constexpr double kSingularGuard = 1e-12;

double kelvin_amplitude(const LameParameters& p, double& a34) {
  const double nu = poisson_ratio(p);
  a34 = 3.0 - 4.0 * nu;
  // Negated classical Kelvin amplitude: div(C grad_hat Gamma^(k)) = +delta e_k.
  return -1.0 / (16.0 * M_PI * p.mu * (1.0 - nu));
}
}  // namespace

KernelEval kelvin_gamma(const Vec3& r, const LameParameters& p) {
  const double rn = r.norm();
  if (rn < kSingularGuard)
    throw SingularPointError("kelvin_gamma: evaluation at the singular point");
  double a34 = 0.0;
  const double A = kelvin_amplitude(p, a34);
  const double r3 = rn * rn * rn;
  const double r5 = r3 * rn * rn;

  KernelEval out;
  out.value = A * (a34 / rn * Mat3::Identity() + (r * r.transpose()) / r3);
  for (int l = 0; l < 3; ++l) {
    Mat3 d;  // d/dr_l Gamma_ij
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double t = -a34 * (i == j) * r[l] / r3;
        t += ((i == l) * r[j] + (j == l) * r[i]) / r3;
        t -= 3.0 * r[i] * r[j] * r[l] / r5;
        d(i, j) = A * t;
      }
    out.grad_source[l] = -d;  // d/dy_l Gamma(x - y) = -d/dr_l
  }
  return out;
}

std::array<std::array<Mat3, 3>, 3> kelvin_gamma_d2(const Vec3& r, const LameParameters& p) {
  const double rn = r.norm();
  if (rn < kSingularGuard)
    throw SingularPointError("kelvin_gamma_d2: evaluation at the singular point");
  double a34 = 0.0;
  const double A = kelvin_amplitude(p, a34);
  const double r3 = rn * rn * rn;
  const double r5 = r3 * rn * rn;
  const double r7 = r5 * rn * rn;

  std::array<std::array<Mat3, 3>, 3> out;
  auto d = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) {
      Mat3 v;  // d^2/dr_l dr_m Gamma_ij
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double t = -a34 * d(i, j) * (d(l, m) / r3 - 3.0 * r[l] * r[m] / r5);
          t += -3.0 * (d(i, l) * r[j] + d(j, l) * r[i]) * r[m] / r5;
          t += (d(i, l) * d(j, m) + d(j, l) * d(i, m)) / r3;
          t += -3.0 * (d(i, m) * r[j] * r[l] + d(j, m) * r[i] * r[l] + d(l, m) * r[i] * r[j]) / r5;
          t += 15.0 * r[i] * r[j] * r[l] * r[m] / r7;
          v(i, j) = A * t;
        }
      // d/dy_l d/dx_m Gamma(x - y) = -(d^2/dr_l dr_m Gamma)(r).
      out[l][m] = -v;
    }
  return out;
}

Mat3 double_layer_rows(const std::array<Mat3, 3>& grad_source, const Vec3& n,
                       const LameParameters& p) {
  Mat3 out;
  for (int k = 0; k < 3; ++k) {
    Mat3 gv;  // (gv)_{jl} = d v^k_j / d y_l
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) gv(j, l) = grad_source[l](k, j);
    out.row(k) = (stress(p, strain(gv)) * n).transpose();
  }
  return out;
}

Mat3 xi_kernel(const Vec3& r, const LameParameters& p) {
  return xi_kernel_n(r, Vec3::UnitZ(), p);
}

Mat3 xi_kernel_n(const Vec3& r, const Vec3& n, const LameParameters& p) {
  return double_layer_rows(kelvin_gamma(r, p).grad_source, n, p);
}

KernelEval halfspace_remainder(const Vec3& x, const Vec3& y, const LameParameters& p) {
  if (x[2] > 0.0 || y[2] >= 0.0)
    throw std::domain_error("halfspace_remainder: requires x3 <= 0 and y3 < 0");
  const double nu = poisson_ratio(p);
  double val[9], dy[27];
  gen::halfspace_remainder_value(x.data(), y.data(), p.mu, nu, val);
  gen::halfspace_remainder_dy(x.data(), y.data(), p.mu, nu, dy);
  KernelEval out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.value(i, j) = val[i * 3 + j];
      for (int l = 0; l < 3; ++l) out.grad_source[l](i, j) = dy[(i * 3 + j) * 3 + l];
    }
  return out;
}

std::array<std::array<Mat3, 3>, 3> halfspace_remainder_d2(const Vec3& x, const Vec3& y,
                                                          const LameParameters& p) {
  if (x[2] > 0.0 || y[2] >= 0.0)
    throw std::domain_error("halfspace_remainder_d2: requires x3 <= 0 and y3 < 0");
  const double nu = poisson_ratio(p);
  double d2[81];
  gen::halfspace_remainder_dydx(x.data(), y.data(), p.mu, nu, d2);
  std::array<std::array<Mat3, 3>, 3> out;
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[l][m](i, j) = d2[((i * 3 + j) * 3 + l) * 3 + m];
  return out;
}

KernelEval mindlin_neumann(const Vec3& x, const Vec3& y, const LameParameters& p) {
  if ((x - y).norm() < kSingularGuard)
    throw SingularPointError("mindlin_neumann: evaluation at the singular point");
  KernelEval gamma = kelvin_gamma(x - y, p);
  const KernelEval rem = halfspace_remainder(x, y, p);
  gamma.value += rem.value;
  for (int l = 0; l < 3; ++l) gamma.grad_source[l] += rem.grad_source[l];
  return gamma;
}

Vec3 traction(const LameParameters& p, const Mat3& grad_u, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("traction: normal must be unit length");
  return stress(p, strain(grad_u)) * n;
}

}  // namespace dislo
