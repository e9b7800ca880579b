#include "dislo/forward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace dislo {

StationSet StationSet::surface_grid(double x1_min, double x1_max, double x2_min, double x2_max,
                                    int n1, int n2) {
  StationSet s;
  s.surface = true;
  s.points.reserve(size_t(n1) * n2);
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i)
      s.points.emplace_back(x1_min + (x1_max - x1_min) * (n1 > 1 ? double(i) / (n1 - 1) : 0.5),
                            x2_min + (x2_max - x2_min) * (n2 > 1 ? double(j) / (n2 - 1) : 0.5),
                            0.0);
  return s;
}

namespace {

struct Tri {
  Vec3 v0, v1, v2;
};

double dist_to_tri(const Vec3& p, const Tri& t) {
  return point_triangle_distance(p, t.v0, t.v1, t.v2);
}

struct TriRule {
  std::vector<double> l1, l2, w;  // barycentric points, weights summing to 1
};

TriRule make_rule(int order) {
  // Reuse the mesh-module rules through a one-facet scratch mesh is wasteful
  // here; inline the barycentric tables instead.
  TriRule r;
  auto perm3 = [&](double a, double b, double w) {
    r.l1.insert(r.l1.end(), {a, b, b});
    r.l2.insert(r.l2.end(), {b, a, b});
    r.w.insert(r.w.end(), {w, w, w});
  };
  switch (order) {
    case 1:
      r.l1 = {1.0 / 3};
      r.l2 = {1.0 / 3};
      r.w = {1.0};
      break;
    case 3:
      perm3(2.0 / 3, 1.0 / 6, 1.0 / 3);
      break;
    case 6:
      perm3(0.108103018168070, 0.445948490915965, 0.223381589678011);
      perm3(0.816847572980459, 0.091576213509771, 0.109951743655322);
      break;
    case 12: {
      perm3(0.873821971016996, 0.063089014491502, 0.050844906370207);
      perm3(0.501426509658179, 0.249286745170910, 0.116786275726379);
      const double a = 0.310352451033785, b = 0.053145049844816;
      const double c = 1.0 - a - b, w = 0.082851075618374;
      const double xs[6][2] = {{a, b}, {a, c}, {b, a}, {b, c}, {c, a}, {c, b}};
      for (auto& x : xs) {
        r.l1.push_back(x[0]);
        r.l2.push_back(x[1]);
        r.w.push_back(w);
      }
      break;
    }
    default:
      throw std::invalid_argument("forward: quadrature order must be one of {1, 3, 6, 12}");
  }
  return r;
}

double tri_area(const Tri& t) { return 0.5 * (t.v1 - t.v0).cross(t.v2 - t.v0).norm(); }
double tri_size(const Tri& t) {
  return std::max({(t.v1 - t.v0).norm(), (t.v2 - t.v1).norm(), (t.v0 - t.v2).norm()});
}

// Integrates fn(q, w) over the triangle, recursively subdividing 4-way while
// the evaluation point is within one sub-facet size. Only the triangles next
// to the projection of x refine, so the depth cap costs little even when the
// point sits a few 1e-5 facet sizes off the surface.
template <class Fn>
void integrate_adaptive(const Tri& t, const Vec3& x, const TriRule& rule, int level, Fn&& fn,
                        double near_factor = 1.0) {
  if (level < 20 && dist_to_tri(x, t) < near_factor * tri_size(t)) {
    const Vec3 m01 = 0.5 * (t.v0 + t.v1), m12 = 0.5 * (t.v1 + t.v2), m20 = 0.5 * (t.v2 + t.v0);
    integrate_adaptive({t.v0, m01, m20}, x, rule, level + 1, fn, near_factor);
    integrate_adaptive({m01, t.v1, m12}, x, rule, level + 1, fn, near_factor);
    integrate_adaptive({m20, m12, t.v2}, x, rule, level + 1, fn, near_factor);
    integrate_adaptive({m01, m12, m20}, x, rule, level + 1, fn, near_factor);
    return;
  }
  const double area = tri_area(t);
  for (size_t i = 0; i < rule.w.size(); ++i) {
    const double l1 = rule.l1[i], l2 = rule.l2[i], l3 = 1.0 - l1 - l2;
    fn(l1 * t.v0 + l2 * t.v1 + l3 * t.v2, rule.w[i] * area);
  }
}

void check_inputs(const Vec3& x, const TriMesh& mesh, const SlipField& slip) {
  if (static_cast<int>(slip.g.size()) != mesh.num_facets())
    throw std::invalid_argument("forward: slip/mesh size mismatch");
  const double diam = mesh.diameter();
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const auto& t = mesh.triangles[f];
    const Tri tri{mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    if (dist_to_tri(x, tri) < 1e-6 * diam)
      throw std::domain_error("forward: evaluation point on (or too near) the fault surface");
  }
}

}  // namespace

Vec3 displacement_at(const Vec3& x, const TriMesh& mesh, const SlipField& slip,
                     const LameParameters& p, Kernel kernel, int order) {
  check_inputs(x, mesh, slip);
  const TriRule rule = make_rule(order);
  Vec3 u = Vec3::Zero();
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const Vec3 g = slip.g[f];
    if (g.isZero()) continue;
    const Vec3 n = mesh.facet_normal(f);
    const auto& t = mesh.triangles[f];
    const Tri tri{mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    // Singular Kelvin part with adaptive subdivision.
    integrate_adaptive(tri, x, rule, 0, [&](const Vec3& q, double w) {
      u += w * (xi_kernel_n(x - q, n, p) * g);
    });
    // Smooth half-space correction with the plain rule.
    if (kernel == Kernel::mindlin) {
      const double area = tri_area(tri);
      for (size_t i = 0; i < rule.w.size(); ++i) {
        const double l1 = rule.l1[i], l2 = rule.l2[i], l3 = 1.0 - l1 - l2;
        const Vec3 q = l1 * tri.v0 + l2 * tri.v1 + l3 * tri.v2;
        const auto rem = halfspace_remainder(x, q, p);
        u += (rule.w[i] * area) * (double_layer_rows(rem.grad_source, n, p) * g);
      }
    }
  }
  // The representation theorem uses the fundamental solution G with
  // div(C grad_hat G) = -delta; our Kelvin tensor is its negative, so the
  // double layer built on it gets a global minus. With this sign the
  // displacement jumps by +g across the surface in the direction of n.
  return -u;
}

Mat3 displacement_gradient_at(const Vec3& x, const TriMesh& mesh, const SlipField& slip,
                              const LameParameters& p, Kernel kernel, int order) {
  check_inputs(x, mesh, slip);
  const TriRule rule = make_rule(order);
  Mat3 grad = Mat3::Zero();  // grad(i, m) = d u_i / d x_m
  auto accumulate = [&](const std::array<std::array<Mat3, 3>, 3>& d2, const Vec3& n,
                        const Vec3& g, double w) {
    for (int m = 0; m < 3; ++m) {
      std::array<Mat3, 3> gm;  // y-gradient of the x_m derivative of the kernel
      for (int l = 0; l < 3; ++l) gm[l] = d2[l][m];
      grad.col(m) += w * (double_layer_rows(gm, n, p) * g);
    }
  };
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const Vec3 g = slip.g[f];
    if (g.isZero()) continue;
    const Vec3 n = mesh.facet_normal(f);
    const auto& t = mesh.triangles[f];
    const Tri tri{mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    // The second-derivative kernel decays like 1/r^3, so refine until the
    // subfacets are well below the standoff distance.
    integrate_adaptive(
        tri, x, rule, 0,
        [&](const Vec3& q, double w) { accumulate(kelvin_gamma_d2(x - q, p), n, g, w); }, 4.0);
    if (kernel == Kernel::mindlin) {
      const double area = tri_area(tri);
      for (size_t i = 0; i < rule.w.size(); ++i) {
        const double l1 = rule.l1[i], l2 = rule.l2[i], l3 = 1.0 - l1 - l2;
        const Vec3 q = l1 * tri.v0 + l2 * tri.v1 + l3 * tri.v2;
        accumulate(halfspace_remainder_d2(x, q, p), n, g, rule.w[i] * area);
      }
    }
  }
  // Same global sign as displacement_at (see the comment there).
  return -grad;
}

DisplacementField surface_displacement(const StationSet& stations, const TriMesh& mesh,
                                       const SlipField& slip, const LameParameters& p,
                                       int order) {
  if (!stations.surface)
    throw std::invalid_argument("surface_displacement: station set not flagged as surface");
  for (const auto& s : stations.points)
    if (s[2] != 0.0)
      throw std::invalid_argument("surface_displacement: stations must have x3 = 0 exactly");
  DisplacementField out;
  out.kernel = Kernel::mindlin;
  out.order = order;
  out.u.reserve(stations.points.size());
  for (const auto& s : stations.points)
    out.u.push_back(displacement_at(s, mesh, slip, p, Kernel::mindlin, order));
  return out;
}

namespace {
// Extrapolates v(eps) -> eps = 0 with the two-term model c0 + c1 eps^s fitted
// on the last three points of a descending geometric ladder.
double extrapolate_ladder(const std::vector<double>& eps, const std::vector<double>& v) {
  const size_t n = eps.size();
  const double e0 = eps[n - 3], e1 = eps[n - 2];
  const double v0 = v[n - 3], v1 = v[n - 2], v2 = v[n - 1];
  const double d01 = v0 - v1, d12 = v1 - v2;
  if (std::abs(d12) < 1e-15 * (std::abs(v2) + 1e-300)) return v2;
  const double ratio = d01 / d12;
  if (ratio <= 1.0) return v2;  // not in the asymptotic regime; best value wins
  const double s = std::log(ratio) / std::log(e0 / e1);
  const double rho_s = std::pow(e0 / e1, s);  // == ratio
  return v2 - d12 / (rho_s - 1.0);
}

void check_ladder(const std::vector<double>& eps_ladder, double edge_clearance,
                  double facet_size) {
  if (eps_ladder.size() < 3)
    throw std::invalid_argument("eps ladder: need at least 3 values");
  if (!std::is_sorted(eps_ladder.rbegin(), eps_ladder.rend()))
    throw std::invalid_argument("eps ladder: must be descending");
  if (eps_ladder.front() / eps_ladder.back() < 100.0)
    throw std::invalid_argument("eps ladder: must span >= 2 decades");
  if (edge_clearance < 0.25 * facet_size)
    throw std::invalid_argument("probe point too close to facet edges");
}

// Distance from q to the boundary of the fault surface. The displacement
// blows up only along boundary edges of S (across interior facet edges the
// constant slip keeps the density smooth), so only edges belonging to a
// single facet count for the clearance gate.
double edge_clearance_of(const Vec3& q, const TriMesh& mesh, int /*facet*/) {
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : mesh.triangles)
    for (int e = 0; e < 3; ++e) {
      const int a = std::min(t[e], t[(e + 1) % 3]);
      const int b = std::max(t[e], t[(e + 1) % 3]);
      ++edge_count[{a, b}];
    }
  double dmin = std::numeric_limits<double>::max();
  for (const auto& [edge, count] : edge_count) {
    if (count != 1) continue;
    const Vec3 a = mesh.vertices[edge.first], b = mesh.vertices[edge.second];
    const Vec3 ab = b - a;
    const double s = std::clamp((q - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    dmin = std::min(dmin, (q - (a + s * ab)).norm());
  }
  return dmin;
}
}  // namespace

JumpReport jump_check(const Vec3& q, int facet, const TriMesh& mesh, const SlipField& slip,
                      const LameParameters& p, Kernel kernel,
                      const std::vector<double>& eps_ladder, int order) {
  check_ladder(eps_ladder, edge_clearance_of(q, mesh, facet), mesh.facet_size(facet));
  const Vec3 n = mesh.facet_normal(facet);
  std::vector<std::array<double, 3>> diffs;
  for (double eps : eps_ladder) {
    const Vec3 d = displacement_at(q + eps * n, mesh, slip, p, kernel, order) -
                   displacement_at(q - eps * n, mesh, slip, p, kernel, order);
    diffs.push_back({d[0], d[1], d[2]});
  }
  JumpReport rep;
  rep.ladder = eps_ladder;
  rep.expected = slip.g[facet];
  for (int c = 0; c < 3; ++c) {
    std::vector<double> v(diffs.size());
    for (size_t i = 0; i < diffs.size(); ++i) v[i] = diffs[i][c];
    rep.recovered[c] = extrapolate_ladder(eps_ladder, v);
  }
  const double scale = std::max(rep.expected.norm(), 1e-300);
  rep.rel_error = (rep.recovered - rep.expected).norm() / scale;
  return rep;
}

TractionJumpReport traction_continuity_check(const Vec3& q, int facet, const TriMesh& mesh,
                                             const SlipField& slip, const LameParameters& p,
                                             Kernel kernel,
                                             const std::vector<double>& eps_ladder, int order) {
  check_ladder(eps_ladder, edge_clearance_of(q, mesh, facet), mesh.facet_size(facet));
  const Vec3 n = mesh.facet_normal(facet);
  std::vector<std::array<double, 3>> diffs;
  double ref = 0.0;
  for (double eps : eps_ladder) {
    const Vec3 tp = traction(p, displacement_gradient_at(q + eps * n, mesh, slip, p, kernel, order), n);
    const Vec3 tm = traction(p, displacement_gradient_at(q - eps * n, mesh, slip, p, kernel, order), n);
    const Vec3 d = tp - tm;
    diffs.push_back({d[0], d[1], d[2]});
    ref = std::max(ref, 0.5 * (tp.norm() + tm.norm()));
  }
  TractionJumpReport rep;
  Vec3 jump;
  for (int c = 0; c < 3; ++c) {
    std::vector<double> v(diffs.size());
    for (size_t i = 0; i < diffs.size(); ++i) v[i] = diffs[i][c];
    jump[c] = extrapolate_ladder(eps_ladder, v);
  }
  rep.jump_magnitude = jump.norm();
  rep.reference = ref;
  rep.relative = ref > 0.0 ? rep.jump_magnitude / ref : 0.0;
  return rep;
}

double free_surface_traction_check(const std::vector<Vec3>& surface_points, const TriMesh& mesh,
                                   const SlipField& slip, const LameParameters& p, Kernel kernel,
                                   int order) {
  bool all_zero = true;
  for (const auto& s : slip.g) all_zero = all_zero && s.isZero();
  if (all_zero) return 0.0;
  std::vector<Mat3> sigmas;
  double global = 0.0;
  for (const auto& x : surface_points) {
    const Mat3 grad = displacement_gradient_at(x, mesh, slip, p, kernel, order);
    sigmas.push_back(stress(p, strain(grad)));
    global = std::max(global, sigmas.back().norm());
  }
  // The local stress magnitude can vanish exactly at symmetry points; floor
  // the normalizer with a fraction of the probe-set stress scale so 0/0
  // noise does not masquerade as a boundary-condition violation.
  double worst = 0.0;
  for (const Mat3& sig : sigmas) {
    const double denom = std::max(sig.norm(), 1e-9 * global);
    if (denom == 0.0) continue;
    worst = std::max(worst, (sig * Vec3::UnitZ()).norm() / denom);
  }
  return worst;
}

}  // namespace dislo
