#include "dislo/core.hpp"

#include <cmath>
#include <sstream>

namespace dislo {

double poisson_ratio(const LameParameters& p) {
  if (!p.strongly_convex())
    throw std::invalid_argument("poisson_ratio: parameters violate strong convexity");
  return p.lambda / (2.0 * (p.lambda + p.mu));
}

Mat3 strain(const Mat3& grad_u) { return 0.5 * (grad_u + grad_u.transpose()); }

Mat3 stress(const LameParameters& p, const Mat3& e) {
  return p.lambda * e.trace() * Mat3::Identity() + 2.0 * p.mu * e;
}

LameField LameField::constant(const LameParameters& p) {
  LameField f([p](const Vec3&) { return p.lambda; }, [p](const Vec3&) { return p.mu; },
              0.0, p.mu, 3.0 * p.lambda + 2.0 * p.mu);
  f.constant_ = true;
  f.const_params_ = p;
  return f;
}

LameParameters LameField::constant_params() const {
  if (!constant_) throw std::logic_error("LameField: not a constant field");
  return const_params_;
}

FieldReport validate_field(const LameField& f, const std::vector<Vec3>& sample_points) {
  if (sample_points.empty())
    throw std::invalid_argument("validate_field: empty sample set");
  FieldReport report;
  std::vector<double> lam(sample_points.size()), mu(sample_points.size());
  for (size_t i = 0; i < sample_points.size(); ++i) {
    const Vec3& x = sample_points[i];
    lam[i] = f.lambda(x);
    mu[i] = f.mu(x);
    if (mu[i] < f.alpha0) {
      std::ostringstream os;
      os << "mu(x) = " << mu[i] << " below floor alpha0 = " << f.alpha0;
      report.violations.push_back({x, os.str()});
    }
    if (3.0 * lam[i] + 2.0 * mu[i] < f.beta0) {
      std::ostringstream os;
      os << "3*lambda + 2*mu = " << 3.0 * lam[i] + 2.0 * mu[i] << " below floor beta0 = "
         << f.beta0;
      report.violations.push_back({x, os.str()});
    }
  }
  if (f.lipschitz_bound > 0.0) {
    for (size_t i = 0; i < sample_points.size(); ++i)
      for (size_t j = i + 1; j < sample_points.size(); ++j) {
        const double dist = (sample_points[i] - sample_points[j]).norm();
        if (dist < 1e-14) continue;
        const double slope = std::max(std::abs(lam[i] - lam[j]), std::abs(mu[i] - mu[j])) / dist;
        if (slope > f.lipschitz_bound) {
          std::ostringstream os;
          os << "sampled Lipschitz slope " << slope << " exceeds bound " << f.lipschitz_bound;
          report.violations.push_back({sample_points[i], os.str()});
        }
      }
  }
  return report;
}

}  // namespace dislo
