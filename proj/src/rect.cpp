#include "dislo/rect.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dislo {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

double h0f(double x, double y, double z) { return std::sqrt(x * x + y * y + z * z); }

// arctan(xy / (z h0)) with the in-plane (z = 0) limit convention z -> +0.
double h1_limit(double x, double y, double z) {
  const double num = x * y;
  if (z == 0.0) {
    if (num == 0.0) return 0.0;
    return num > 0.0 ? M_PI / 2.0 : -M_PI / 2.0;
  }
  return std::atan(num / (z * h0f(x, y, z)));
}

// ln(y + h0); rearranged as ln(x^2 + z^2) - ln(h0 - y) when y < 0 to avoid
// cancellation on the antipodal ray.
double h3_stable(double x, double y, double z) {
  const double h0 = h0f(x, y, z);
  if (y >= 0.0) return std::log(y + h0);
  const double s = x * x + z * z;
  if (s == 0.0) throw HDomainError("h3: antipodal ray, y + h0 vanishes");
  return std::log(s) - std::log(h0 - y);
}

double h2f(double x, double y, double z) {
  return x * y * z / ((x * x + z * z) * h0f(x, y, z));
}
double h4f(double x, double y, double z) {
  return y * z * z / ((x * x + z * z) * h0f(x, y, z));
}
double h5f(double x, double y, double z) {
  return x * y * z * h0f(x, y, z) / ((x * x + z * z) * (y * y + z * z));
}
double h6f(double x, double y, double z) {
  const double z3 = z * z * z;
  return x * y * z3 / ((x * x + z * z) * (y * y + z * z) * h0f(x, y, z));
}

}  // namespace

double eval_h(int idx, double x, double y, double z) {
  const double h0 = h0f(x, y, z);
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      std::ostringstream os;
      os << "eval_h(h" << idx << "): vanishing denominator: " << what;
      throw HDomainError(os.str());
    }
  };
  switch (idx) {
    case 0:
      return h0;
    case 1:
      need(z * h0 != 0.0, "z * h0");
      return std::atan(x * y / (z * h0));
    case 2:
      need(x * x + z * z > 0.0, "x^2 + z^2");
      return h2f(x, y, z);
    case 3:
      need(y + h0 > 0.0 || x * x + z * z > 0.0, "y + h0");
      return h3_stable(x, y, z);
    case 4:
      need(x * x + z * z > 0.0, "x^2 + z^2");
      return h4f(x, y, z);
    case 5:
      need(x * x + z * z > 0.0 && y * y + z * z > 0.0, "(x^2+z^2)(y^2+z^2)");
      return h5f(x, y, z);
    case 6:
      need(x * x + z * z > 0.0 && y * y + z * z > 0.0, "(x^2+z^2)(y^2+z^2)");
      return h6f(x, y, z);
    default:
      throw std::invalid_argument("eval_h: index must be in 0..6");
  }
}

namespace {
bool on_closed_rectangle(const Vec3& x, const RectDislocation& r) {
  return x[2] == r.depth() && x[0] >= r.a && x[0] <= r.b && x[1] >= r.c && x[1] <= r.d;
}
}  // namespace

Vec3 u_gamma_closed_form(const Vec3& x, const RectDislocation& rect, const LameParameters& p) {
  if (on_closed_rectangle(x, rect))
    throw std::domain_error("u_gamma_closed_form: evaluation point on the closed rectangle");
  const double lam = p.lambda, mu = p.mu;
  const double nu = poisson_ratio(p);
  const double cnu = -1.0 / (8.0 * M_PI * (1.0 - nu));
  const double k1 = rect.slip[0], k2 = rect.slip[1], k3 = rect.slip[2];

  const double xa = x[0] - rect.a, xb = x[0] - rect.b;
  const double xc = x[1] - rect.c, xd = x[1] - rect.d;
  const double z = x[2] + std::abs(rect.alpha);

  // Alternating four-corner sums; argument order (p, q) means h(p, q, z).
  auto S = [&](double (*h)(double, double, double), double pa, double pb, double qc,
               double qd) { return h(pa, qc, z) - h(pb, qc, z) + h(pb, qd, z) - h(pa, qd, z); };

  const double H1 = h1_limit(xa, xc, z) - h1_limit(xa, xd, z) + h1_limit(xb, xd, z) -
                    h1_limit(xb, xc, z);
  const double invh0 = S([](double a, double b, double c) { return 1.0 / h0f(a, b, c); }, xa,
                         xb, xc, xd);

  // The direct-term h1 coefficient is (lam+2mu)/(lam+mu); the published table
  // carries an extra factor 2 there that the quadrature of Xi over the
  // rectangle rules out (all other terms match it to machine precision).
  const double cdir = (lam + 2.0 * mu) / (lam + mu);
  const double cmix = mu / (lam + mu);

  const double u1 =
      k1 * cdir * H1 +
      k1 * (h2f(xa, xd, z) - h2f(xa, xc, z) + h2f(xb, xc, z) - h2f(xb, xd, z)) +
      k2 * z * invh0 + k3 * cmix * S(h3_stable, xa, xb, xc, xd) +
      k3 * (h4f(xa, xd, z) - h4f(xa, xc, z) + h4f(xb, xc, z) - h4f(xb, xd, z));

  const double u2 =
      k1 * z * invh0 + k2 * cdir * H1 +
      k2 * (h2f(xd, xa, z) - h2f(xc, xa, z) + h2f(xc, xb, z) - h2f(xd, xb, z)) +
      k3 * cmix * S(h3_stable, xc, xd, xa, xb) +
      k3 * (h4f(xd, xa, z) - h4f(xc, xa, z) + h4f(xc, xb, z) - h4f(xd, xb, z));

  const double u3 =
      -k1 * cmix * S(h3_stable, xa, xb, xc, xd) +
      k1 * (h4f(xa, xd, z) - h4f(xa, xc, z) + h4f(xb, xc, z) - h4f(xb, xd, z)) -
      k2 * cmix * S(h3_stable, xc, xd, xa, xb) +
      k2 * (h4f(xd, xa, z) - h4f(xc, xa, z) + h4f(xc, xb, z) - h4f(xd, xb, z)) +
      k3 * cdir * H1 +
      k3 * (h5f(xa, xc, z) - h5f(xa, xd, z) + h5f(xb, xd, z) - h5f(xb, xc, z)) +
      k3 * (h6f(xa, xc, z) - h6f(xa, xd, z) + h6f(xb, xd, z) - h6f(xb, xc, z));

  return -cnu * Vec3(u1, u2, u3);
}

namespace {
double rect_distance(const Vec3& x, const RectDislocation& r) {
  const double dx = std::max({r.a - x[0], 0.0, x[0] - r.b});
  const double dy = std::max({r.c - x[1], 0.0, x[1] - r.d});
  const double dz = x[2] - r.depth();
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Vec3 quad_pass(const Vec3& x, const RectDislocation& rect, const LameParameters& p, int order) {
  std::vector<double> gn, gw;
  gauss_legendre(order, gn, gw);
  Vec3 u = Vec3::Zero();
  const double mid1 = 0.5 * (rect.a + rect.b), half1 = 0.5 * (rect.b - rect.a);
  const double mid2 = 0.5 * (rect.c + rect.d), half2 = 0.5 * (rect.d - rect.c);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const Vec3 y(mid1 + half1 * gn[i], mid2 + half2 * gn[j], rect.depth());
      u += (gw[i] * gw[j] * half1 * half2) * (xi_kernel(x - y, p) * rect.slip);
    }
  // Global minus from the representation theorem: the Kelvin tensor here is
  // the negative of the fundamental solution with div(C grad_hat G) = -delta.
  // With it the displacement jumps by +slip across the rectangle along e3.
  return -u;
}
}  // namespace

QuadratureResult u_gamma_quadrature(const Vec3& x, const RectDislocation& rect,
                                    const LameParameters& p, int order) {
  if (order < 2) throw std::invalid_argument("u_gamma_quadrature: order must be >= 2");
  if (rect_distance(x, rect) < 1e-3 * rect.diagonal())
    throw std::domain_error("u_gamma_quadrature: evaluation point too close to the rectangle");
  QuadratureResult res;
  res.value = quad_pass(x, rect, p, order);
  const Vec3 coarse = quad_pass(x, rect, p, std::max(2, order / 2));
  res.error_estimate = (res.value - coarse).norm();
  return res;
}

LogFit vertex_singularity_probe(const RectDislocation& rect, const Vec3& anchor,
                                const Vec3& approach_dir, const std::vector<double>& distances,
                                int component, const LameParameters& p) {
  if (distances.size() < 6)
    throw std::invalid_argument("vertex_singularity_probe: need >= 6 ladder distances");
  const auto [dmin, dmax] = std::minmax_element(distances.begin(), distances.end());
  if (*dmin <= 0.0 || *dmax / *dmin < 100.0)
    throw std::invalid_argument("vertex_singularity_probe: ladder must span >= 2 decades");
  const Vec3 dir = approach_dir.normalized();

  const int n = static_cast<int>(distances.size());
  double st = 0.0, sv = 0.0, stt = 0.0, stv = 0.0, svv = 0.0;
  std::vector<double> ts(n), vs(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 x = anchor + distances[i] * dir;
    const double v = std::abs(u_gamma_closed_form(x, rect, p)[component]);
    const double t = std::log(1.0 / distances[i]);
    ts[i] = t;
    vs[i] = v;
    st += t;
    sv += v;
    stt += t * t;
    stv += t * v;
    svv += v * v;
  }
  LogFit fit;
  const double det = n * stt - st * st;
  fit.slope = (n * stv - st * sv) / det;
  fit.intercept = (sv - fit.slope * st) / n;
  double rss = 0.0;
  const double vbar = sv / n;
  double tss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = vs[i] - (fit.intercept + fit.slope * ts[i]);
    rss += r * r;
    tss += (vs[i] - vbar) * (vs[i] - vbar);
  }
  fit.residual = std::sqrt(rss / n);
  fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
  const double s2 = rss / std::max(1, n - 2);
  fit.slope_stderr = std::sqrt(s2 * n / det);
  return fit;
}

}  // namespace dislo
