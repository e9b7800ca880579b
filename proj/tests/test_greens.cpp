#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dislo/greens.hpp"

using namespace dislo;

namespace {

std::mt19937 rng(42);
Vec3 random_vec(double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng), u(rng)};
}

// Finite-difference Lame operator div(C grad_hat v) applied to one column of
// a kernel, as an oracle independent of the analytic gradients.
Vec3 fd_lame_residual(const std::function<Vec3(const Vec3&)>& v, const Vec3& x,
                      const LameParameters& p, double h) {
  auto d2 = [&](int i, int j, int comp) {
    Vec3 ei = Vec3::Zero(), ej = Vec3::Zero();
    ei[i] = h;
    ej[j] = h;
    if (i == j)
      return (v(x + ei)[comp] - 2.0 * v(x)[comp] + v(x - ei)[comp]) / (h * h);
    return (v(x + ei + ej)[comp] - v(x + ei - ej)[comp] - v(x - ei + ej)[comp] +
            v(x - ei - ej)[comp]) /
           (4.0 * h * h);
  };
  // mu Lap u + (lambda + mu) grad div u (constant coefficients)
  Vec3 r;
  for (int c = 0; c < 3; ++c) {
    double lap = 0.0, gdiv = 0.0;
    for (int i = 0; i < 3; ++i) lap += d2(i, i, c);
    for (int j = 0; j < 3; ++j) gdiv += d2(c, j, j);
    r[c] = p.mu * lap + (p.lambda + p.mu) * gdiv;
  }
  return r;
}

}  // namespace

TEST_CASE("kelvin tensor symmetry and homogeneity") {
  LameParameters p(1.3, 0.9);
  for (int t = 0; t < 20; ++t) {
    const Vec3 x = random_vec();
    if (x.norm() < 0.1) continue;
    const Mat3 g = kelvin_gamma(x, p).value;
    CHECK((g - g.transpose()).norm() < 1e-14 * g.norm());
    const Mat3 g2 = kelvin_gamma(2.0 * x, p).value;
    CHECK((g2 - 0.5 * g).norm() < 1e-13 * g.norm());
  }
}

TEST_CASE("kelvin singular point guarded") {
  LameParameters p(1, 1);
  CHECK_THROWS_AS(kelvin_gamma(Vec3::Zero(), p), SingularPointError);
}

TEST_CASE("kelvin columns solve the homogeneous Lame equation away from origin") {
  LameParameters p(2.0, 1.5);
  const Vec3 x(0.7, -0.4, 0.9);
  for (int k = 0; k < 3; ++k) {
    auto col = [&](const Vec3& q) { return Vec3(kelvin_gamma(q, p).value.col(k)); };
    // h-refinement: residual should shrink ~O(h^2) (it is 0 analytically).
    const double r1 = fd_lame_residual(col, x, p, 1e-2).norm();
    const double r2 = fd_lame_residual(col, x, p, 5e-3).norm();
    CHECK(r1 < 1e-3);
    CHECK(r2 < 0.5 * r1 + 1e-9);
  }
}

TEST_CASE("kelvin analytic y-gradient matches central differences") {
  LameParameters p(1.0, 2.0);
  const Vec3 r(0.5, -0.8, 0.6);
  const auto ev = kelvin_gamma(r, p);
  const double h = 1e-6;
  for (int l = 0; l < 3; ++l) {
    Vec3 dy = Vec3::Zero();
    dy[l] = h;
    // y-derivative: r = x - y, so bumping y by +h bumps r by -h.
    const Mat3 fd =
        (kelvin_gamma(r - dy, p).value - kelvin_gamma(r + dy, p).value) / (2.0 * h);
    CHECK((ev.grad_source[l] - fd).norm() < 1e-8 * fd.norm());
  }
}

TEST_CASE("kelvin second derivatives match differenced gradients") {
  LameParameters p(1.0, 1.0);
  const Vec3 r(0.4, 0.7, -0.9);
  const auto d2 = kelvin_gamma_d2(r, p);
  const double h = 1e-6;
  for (int m = 0; m < 3; ++m) {
    Vec3 dx = Vec3::Zero();
    dx[m] = h;
    // x-derivative of the y-gradient: bump r by +h.
    const auto gp = kelvin_gamma(r + dx, p).grad_source;
    const auto gm = kelvin_gamma(r - dx, p).grad_source;
    for (int l = 0; l < 3; ++l) {
      const Mat3 fd = (gp[l] - gm[l]) / (2.0 * h);
      CHECK((d2[l][m] - fd).norm() < 1e-7 * (fd.norm() + 1.0));
    }
  }
}

TEST_CASE("xi kernel: definitional consistency, homogeneity, printed entry") {
  LameParameters p(1.7, 0.8);
  const Vec3 r(0.6, -0.3, 0.8);
  const Mat3 xi = xi_kernel(r, p);

  // Must equal the general-normal version with n = e3.
  CHECK((xi - xi_kernel_n(r, Vec3(0, 0, 1), p)).norm() < 1e-14 * xi.norm());

  // And the assembled traction rows of the Kelvin gradient.
  const auto ev = kelvin_gamma(r, p);
  const Mat3 rows = double_layer_rows(ev.grad_source, Vec3(0, 0, 1), p);
  CHECK((xi - rows).norm() < 1e-13 * xi.norm());

  // Degree -2 homogeneity.
  CHECK((xi_kernel(2.0 * r, p) - 0.25 * xi).norm() < 1e-13 * xi.norm());

  // Entry (2,0) equals mu (d3 Gamma_13 + d1 Gamma_33) by finite differences
  // in the source variable (Gamma symmetric, so Gamma_13 = Gamma_31).
  const double h = 1e-6;
  auto gam = [&](const Vec3& q) { return kelvin_gamma(q, p).value; };
  Vec3 e1 = Vec3::Zero(), e3 = Vec3::Zero();
  e1[0] = h;
  e3[2] = h;
  const double d3_g13 = (gam(r - e3)(0, 2) - gam(r + e3)(0, 2)) / (2.0 * h);
  const double d1_g33 = (gam(r - e1)(2, 2) - gam(r + e1)(2, 2)) / (2.0 * h);
  CHECK(xi(2, 0) == doctest::Approx(p.mu * (d3_g13 + d1_g33)).epsilon(1e-6));
}

TEST_CASE("half-space tensor is traction-free on the surface") {
  LameParameters p(1.0, 1.0);
  const Vec3 y(0.2, -0.3, -1.1);
  const double h = 1e-6;
  for (int t = 0; t < 5; ++t) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const Vec3 x(u(rng), u(rng), 0.0);
    for (int k = 0; k < 3; ++k) {
      // FD gradient of column k in the observation variable at the surface
      // (central in x1, x2; one-sided into the body for x3).
      Mat3 grad;
      for (int j = 0; j < 3; ++j) {
        Vec3 dx = Vec3::Zero();
        dx[j] = h;
        Vec3 xp = x + dx, xm = x - dx;
        if (j == 2) {  // stay in the closed half-space
          xp = x;
          const Vec3 xm2 = x - 2.0 * dx;
          const Vec3 vp = mindlin_neumann(xp, y, p).value.col(k);
          const Vec3 v1 = mindlin_neumann(xm, y, p).value.col(k);
          const Vec3 v2 = mindlin_neumann(xm2, y, p).value.col(k);
          grad.col(j) = (3.0 * vp - 4.0 * v1 + v2) / (2.0 * h);
        } else {
          grad.col(j) = (mindlin_neumann(xp, y, p).value.col(k) -
                         mindlin_neumann(xm, y, p).value.col(k)) /
                        (2.0 * h);
        }
      }
      const Vec3 tr = traction(p, grad, Vec3(0, 0, 1));
      CHECK(tr.norm() < 1e-7 * (grad.norm() + 1.0));
    }
  }
}

TEST_CASE("half-space remainder is regular near the source point") {
  LameParameters p(1.2, 0.7);
  const Vec3 y(0.1, 0.2, -0.8);
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = 0.1 / std::pow(10.0, i);
    const Vec3 x = y + Vec3(d, 0, 0);
    const double rnorm = halfspace_remainder(x, y, p).value.norm();
    if (i > 0) CHECK(std::abs(rnorm - prev) < 0.2 * (prev + 1e-12));
    prev = rnorm;
    // And N0 - Gamma equals R by construction.
    const Mat3 diff = mindlin_neumann(x, y, p).value - kelvin_gamma(x - y, p).value;
    CHECK((diff - halfspace_remainder(x, y, p).value).norm() < 1e-12);
  }
}

TEST_CASE("half-space tensor decays like 1/r at depth") {
  LameParameters p(1, 1);
  const Vec3 y(0, 0, -1.0);
  double prev_ratio = -1.0;
  for (double r = 2.0; r <= 256.0; r *= 2.0) {
    const Vec3 x = y + r * Vec3(0.6, 0.48, -0.64);  // unit direction into depth
    const double ratio = mindlin_neumann(x, y, p).value.norm() * r;
    if (prev_ratio > 0) CHECK(ratio < 2.0 * prev_ratio);  // C/r boundedness
    prev_ratio = ratio;
  }
}

TEST_CASE("half-space gradient bounded by C/r^2, constant stable under doubling") {
  LameParameters p(1, 1);
  const Vec3 y(0, 0, -1.0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double c_small = 0.0, c_large = 0.0;
  for (int t = 0; t < 40; ++t) {
    Vec3 dir = random_vec();
    dir[2] = -std::abs(dir[2]) - 0.3;
    dir.normalize();
    const double r = 2.0 + 30.0 * std::abs(u(rng));
    const Vec3 x = y + r * dir;
    const auto ev = mindlin_neumann(x, y, p);
    double gnorm = 0.0;
    for (int l = 0; l < 3; ++l) gnorm = std::max(gnorm, ev.grad_source[l].norm());
    (t < 20 ? c_small : c_large) = std::max(t < 20 ? c_small : c_large, gnorm * r * r);
  }
  CHECK(std::max(c_small, c_large) < 4.0 * std::min(c_small, c_large) + 1e-12);
}

TEST_CASE("half-space tensor rejects points above the surface") {
  LameParameters p(1, 1);
  CHECK_THROWS(mindlin_neumann(Vec3(0, 0, 0.1), Vec3(0, 0, -1), p));
  CHECK_THROWS(mindlin_neumann(Vec3(0, 0, -1), Vec3(0, 0, 0.1), p));
}

TEST_CASE("half-space analytic derivatives match finite differences") {
  LameParameters p(1.4, 0.9);
  const Vec3 x(0.3, -0.2, -0.6), y(-0.1, 0.4, -1.3);
  const auto ev = mindlin_neumann(x, y, p);
  const double h = 1e-6;
  for (int l = 0; l < 3; ++l) {
    Vec3 dy = Vec3::Zero();
    dy[l] = h;
    const Mat3 fd =
        (mindlin_neumann(x, y + dy, p).value - mindlin_neumann(x, y - dy, p).value) / (2.0 * h);
    CHECK((ev.grad_source[l] - fd).norm() < 1e-7 * (fd.norm() + 1.0));
  }
  const auto d2 = halfspace_remainder_d2(x, y, p);
  for (int m = 0; m < 3; ++m) {
    Vec3 dx = Vec3::Zero();
    dx[m] = h;
    const auto gp = halfspace_remainder(x + dx, y, p).grad_source;
    const auto gm = halfspace_remainder(x - dx, y, p).grad_source;
    for (int l = 0; l < 3; ++l) {
      const Mat3 fd = (gp[l] - gm[l]) / (2.0 * h);
      CHECK((d2[l][m] - fd).norm() < 1e-6 * (fd.norm() + 1.0));
    }
  }
}

TEST_CASE("traction operator basics") {
  LameParameters p(1, 1);
  Mat3 skew;
  skew << 0, 2, -1, -2, 0, 0.5, 1, -0.5, 0;
  CHECK(traction(p, skew, Vec3(0, 0, 1)).norm() < 1e-14);
  CHECK((traction(p, Mat3::Identity(), Vec3(0, 0, 1)) - Vec3(0, 0, 5)).norm() < 1e-14);
  Mat3 g;
  g << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  const Vec3 n(0, 1, 0);
  CHECK((traction(p, 3.0 * g, n) - 3.0 * traction(p, g, n)).norm() < 1e-13);
  CHECK_THROWS(traction(p, g, Vec3(0, 0, 2)));
}
