#pragma once

// Double-layer potential forward map: displacement (and its gradient)
// anywhere in the half-space from a fault mesh and slip field, plus the
// numerical checks of the transmission conditions and the free surface.

#include <string>
#include <vector>

#include "dislo/greens.hpp"
#include "dislo/mesh.hpp"

namespace dislo {

enum class Kernel { kelvin, mindlin };

struct StationSet {
  std::vector<Vec3> points;
  bool surface = true;  // all points with x3 == 0 exactly

  static StationSet surface_grid(double x1_min, double x1_max, double x2_min, double x2_max,
                                 int n1, int n2);
};

struct DisplacementField {
  std::vector<Vec3> u;
  Kernel kernel = Kernel::mindlin;
  int order = 6;
};

// Double-layer displacement at x. The Kelvin part uses adaptive 4-way facet
// subdivision when x is within 0.5 facet sizes of a facet (max 6 levels);
// the smooth half-space remainder is integrated with the plain rule.
Vec3 displacement_at(const Vec3& x, const TriMesh& mesh, const SlipField& slip,
                     const LameParameters& p, Kernel kernel, int order);

// Displacement gradient (d u_i / d x_m) via analytic kernel second derivatives.
Mat3 displacement_gradient_at(const Vec3& x, const TriMesh& mesh, const SlipField& slip,
                              const LameParameters& p, Kernel kernel, int order);

// Batch evaluation at surface stations (mindlin kernel mandatory).
DisplacementField surface_displacement(const StationSet& stations, const TriMesh& mesh,
                                       const SlipField& slip, const LameParameters& p,
                                       int order);

struct JumpReport {
  Vec3 recovered = Vec3::Zero();   // extrapolated [u] at the probe point
  Vec3 expected = Vec3::Zero();    // configured slip there
  double rel_error = 0.0;
  std::vector<double> ladder;      // epsilons used
};

// u(q + eps n) - u(q - eps n) extrapolated to eps -> 0 with a per-component
// c0 + c1 eps^s model fitted on the geometric ladder.
JumpReport jump_check(const Vec3& q, int facet, const TriMesh& mesh, const SlipField& slip,
                      const LameParameters& p, Kernel kernel,
                      const std::vector<double>& eps_ladder, int order);

struct TractionJumpReport {
  double jump_magnitude = 0.0;  // |[(C grad u) n]| extrapolated
  double reference = 0.0;       // |traction| scale at the probe
  double relative = 0.0;
};

TractionJumpReport traction_continuity_check(const Vec3& q, int facet, const TriMesh& mesh,
                                             const SlipField& slip, const LameParameters& p,
                                             Kernel kernel, const std::vector<double>& eps_ladder,
                                             int order);

// Max over surface points of |(C grad u) e3| / |grad u|_F.
double free_surface_traction_check(const std::vector<Vec3>& surface_points, const TriMesh& mesh,
                                   const SlipField& slip, const LameParameters& p, Kernel kernel,
                                   int order);

}  // namespace dislo
