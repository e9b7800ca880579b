#pragma once

// Elastic constitutive types shared by all modules: Lame parameters
// (constant and spatially varying), small-tensor algebra, and sampled
// admissibility validation.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dislo {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct LameParameters {
  double lambda = 0.0;
  double mu = 0.0;

  LameParameters() = default;
  LameParameters(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
    if (!strongly_convex())
      throw std::invalid_argument(
          "LameParameters: strong convexity requires mu > 0 and 3*lambda + 2*mu > 0");
  }

  bool strongly_convex() const { return mu > 0.0 && 3.0 * lambda + 2.0 * mu > 0.0; }
};

// nu = lambda / (2 (lambda + mu)); always < 1/2 under strong convexity.
double poisson_ratio(const LameParameters& p);

// Symmetric part (A + A^T)/2.
Mat3 strain(const Mat3& grad_u);

// Isotropic Hooke law: lambda tr(e) I + 2 mu e.
Mat3 stress(const LameParameters& p, const Mat3& e);

// Spatially varying Lame coefficients with declared convexity floors and a
// Lipschitz bound. The functions are handles; validation is by sampling.
struct LameField {
  std::function<double(const Vec3&)> lambda;
  std::function<double(const Vec3&)> mu;
  double lipschitz_bound = 0.0;
  double alpha0 = 0.0;  // floor for mu
  double beta0 = 0.0;   // floor for 3*lambda + 2*mu

  static LameField constant(const LameParameters& p);
  bool is_constant() const { return constant_; }
  LameParameters constant_params() const;

 private:
  friend LameField make_field(std::function<double(const Vec3&)>,
                              std::function<double(const Vec3&)>, double, double,
                              double);
  bool constant_ = false;
  LameParameters const_params_{};

 public:
  LameField() = default;
  LameField(std::function<double(const Vec3&)> lam, std::function<double(const Vec3&)> mu_,
            double lipschitz, double a0, double b0)
      : lambda(std::move(lam)), mu(std::move(mu_)), lipschitz_bound(lipschitz),
        alpha0(a0), beta0(b0) {}
};

struct FieldViolation {
  Vec3 point;
  std::string what;
};

struct FieldReport {
  std::vector<FieldViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks convexity floors at each sample point and the finite-difference
// Lipschitz estimate over all sampled pairs.
FieldReport validate_field(const LameField& f, const std::vector<Vec3>& sample_points);

}  // namespace dislo
