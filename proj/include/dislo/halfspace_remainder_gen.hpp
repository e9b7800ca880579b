#pragma once

// Machine-generated straight-line evaluators for the half-space image
// correction R of the Neumann tensor (see scripts/gen_halfspace_kernel.py).
// xf = field point (x3 <= 0), ys = source point (y3 < 0).

namespace dislo::gen {

// out[i*3+j] = R_ij
void halfspace_remainder_value(const double* xf, const double* ys, double mu, double nu,
                               double* out);
// out[(i*3+j)*3+l] = d R_ij / d y_l
void halfspace_remainder_dy(const double* xf, const double* ys, double mu, double nu,
                            double* out);
// out[(i*3+j)*3+m] = d R_ij / d x_m
void halfspace_remainder_dx(const double* xf, const double* ys, double mu, double nu,
                            double* out);
// out[((i*3+j)*3+l)*3+m] = d^2 R_ij / (d y_l d x_m)
void halfspace_remainder_dydx(const double* xf, const double* ys, double mu, double nu,
                              double* out);

}  // namespace dislo::gen
