#pragma once

// Closed-form fundamental solutions for the isotropic Lame operator:
// the Kelvin full-space tensor Gamma, the traction kernel Xi built from it,
// and the half-space Neumann tensor N0 = Gamma + R with traction-free
// surface at x3 = 0 (Mindlin image system).
//
// Convention: Gamma solves div(C grad_hat Gamma^(k)) = +delta e_k, so
// Gamma_ij(r) = -1/(16 pi mu (1-nu)) [ (3-4nu) delta_ij / |r| + r_i r_j / |r|^3 ].
// With this choice the double layer u = int_S Xi(x-y) g dsigma recovers the
// jump [u]_S = +g across S, and the quadrature of Xi reproduces the
// rectangular-dislocation closed form.

#include <array>
#include <stdexcept>

#include "dislo/core.hpp"

namespace dislo {

struct SingularPointError : std::domain_error {
  using std::domain_error::domain_error;
};

// Green tensor value plus gradient with respect to the source point y.
struct KernelEval {
  Mat3 value;                       // value(i,j): component i, force direction j
  std::array<Mat3, 3> grad_source;  // grad_source[l](i,j) = d value_ij / d y_l
};

// Kelvin tensor of r = x - y and its gradient. grad_source holds y-derivatives,
// i.e. minus the r-derivatives.
KernelEval kelvin_gamma(const Vec3& r, const LameParameters& p);

// Second derivatives: out[l][m](i,j) = d^2 Gamma_ij(x-y) / (d y_l d x_m).
std::array<std::array<Mat3, 3>, 3> kelvin_gamma_d2(const Vec3& r, const LameParameters& p);

// Xi_{kj}(r) = [C grad_hat_y Gamma^{(k)}(x-y)]_{j3}: the traction kernel of the
// double layer on horizontal surfaces (normal e3).
Mat3 xi_kernel(const Vec3& r, const LameParameters& p);

// Generalization to arbitrary facet normal n: row k is the traction vector of
// the k-th Kelvin column, (C grad_hat_y Gamma^{(k)}) n.
Mat3 xi_kernel_n(const Vec3& r, const Vec3& n, const LameParameters& p);

// Half-space Neumann tensor N0(x, y): displacement convention as Gamma,
// traction-free on {x3 = 0}. Requires x3 <= 0 and y3 < 0.
KernelEval mindlin_neumann(const Vec3& x, const Vec3& y, const LameParameters& p);

// Image-correction part R = N0 - Gamma alone (regular in the open half-space).
KernelEval halfspace_remainder(const Vec3& x, const Vec3& y, const LameParameters& p);
std::array<std::array<Mat3, 3>, 3> halfspace_remainder_d2(const Vec3& x, const Vec3& y,
                                                          const LameParameters& p);

// Surface force density (C grad_hat u) n; n must be unit length.
Vec3 traction(const LameParameters& p, const Mat3& grad_u, const Vec3& n);

// Row k is the traction (C grad_hat_y v^k) n of the k-th kernel column
// v^k_j = K_kj, built from the source-gradient blocks. The double-layer
// integrand is this matrix applied to the slip vector.
Mat3 double_layer_rows(const std::array<Mat3, 3>& grad_source, const Vec3& n,
                       const LameParameters& p);

}  // namespace dislo
