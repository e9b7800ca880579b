#pragma once

// Closed-form displacement of a rectangular Volterra dislocation parallel to
// the free surface (Kelvin part only), the Gauss-quadrature oracle defining
// it, and probes for the logarithmic corner singularities.

#include <stdexcept>
#include <vector>

#include "dislo/core.hpp"
#include "dislo/greens.hpp"

namespace dislo {

// Rectangle a <= y1 <= b, c <= y2 <= d at depth y3 = -|alpha|, constant slip k.
struct RectDislocation {
  double a, b, c, d;
  double alpha;
  Vec3 slip = Vec3::Zero();

  RectDislocation(double a_, double b_, double c_, double d_, double alpha_,
                  const Vec3& k = Vec3::Zero())
      : a(a_), b(b_), c(c_), d(d_), alpha(alpha_), slip(k) {
    if (!(a < b) || !(c < d) || alpha == 0.0)
      throw std::invalid_argument("RectDislocation: need a < b, c < d, alpha != 0");
  }

  double depth() const { return -std::abs(alpha); }
  double diagonal() const { return std::hypot(b - a, d - c); }
};

struct HDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The seven auxiliary antiderivative functions h0..h6.
double eval_h(int idx, double x, double y, double z);

// Closed-form u_Gamma at x (must be off the closed rectangle).
Vec3 u_gamma_closed_form(const Vec3& x, const RectDislocation& rect, const LameParameters& p);

struct QuadratureResult {
  Vec3 value = Vec3::Zero();
  double error_estimate = 0.0;  // Richardson self-estimate |I(order) - I(order/2)|
};

// Tensor-product Gauss-Legendre integration of Xi(x-y) * slip over the rectangle.
// The independent oracle for the closed form.
QuadratureResult u_gamma_quadrature(const Vec3& x, const RectDislocation& rect,
                                    const LameParameters& p, int order);

struct LogFit {
  double intercept = 0.0;  // c0 in |u| ~ c0 + c1 log(1/d)
  double slope = 0.0;      // c1
  double slope_stderr = 0.0;
  double r_squared = 0.0;
  double residual = 0.0;  // RMS of fit residuals
};

// Samples |u_component| along an in-plane approach to a rectangle corner (or
// any in-plane anchor point) at the given ladder of distances and fits the
// two-parameter logarithmic model.
LogFit vertex_singularity_probe(const RectDislocation& rect, const Vec3& anchor,
                                const Vec3& approach_dir, const std::vector<double>& distances,
                                int component, const LameParameters& p);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace dislo
