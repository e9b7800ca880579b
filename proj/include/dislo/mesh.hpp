#pragma once

// Triangulated piecewise-linear fault surfaces, per-facet slip fields with
// mode constraints, the graph-condition validator used by the uniqueness
// experiments, and surface quadrature rules.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dislo/core.hpp"
#include "dislo/rect.hpp"

namespace dislo {

struct TriMesh {
  std::vector<Vec3> vertices;                 // all strictly below {x3 = 0}
  std::vector<std::array<int, 3>> triangles;  // 0-based, consistent winding

  TriMesh() = default;
  TriMesh(std::vector<Vec3> verts, std::vector<std::array<int, 3>> tris);

  int num_facets() const { return static_cast<int>(triangles.size()); }
  Vec3 facet_normal(int f) const;    // unit normal from winding
  double facet_area(int f) const;
  Vec3 facet_centroid(int f) const;
  double facet_size(int f) const;    // longest edge
  double total_area() const;
  double diameter() const;           // bounding-box diagonal
  double surface_clearance() const;  // min distance of vertices to {x3 = 0}
};

enum class SlipMode { tangential, normal, oblique };

struct SlipField {
  std::vector<Vec3> g;  // one vector per facet
  SlipMode mode = SlipMode::oblique;

  bool full_support() const;
};

struct FacetFrame {
  Vec3 n, t1, t2;  // right-handed orthonormal, n from winding
};

// Frames per facet; throws on degenerate triangles (area below eps * scale^2).
std::vector<FacetFrame> facet_frames(const TriMesh& mesh);

struct GraphCheckResult {
  bool is_graph = false;
  // Witness facet pair whose projections overlap (or a facet parallel to the
  // direction, reported as (f, f)).
  std::optional<std::pair<int, int>> witness;
};

// True iff orthogonal projection along `direction` is injective on the mesh.
GraphCheckResult validate_graph_condition(const TriMesh& mesh, const Vec3& direction);

// Removes the normal (tangential mode) or tangential (normal mode) component
// of the slip per facet. Idempotent. Oblique mode is rejected.
SlipField project_slip(const SlipField& field, const TriMesh& mesh);

struct SurfQuadPoint {
  Vec3 point;
  double weight;
  int facet;
};

// Symmetric triangle quadrature; order in {1, 3, 6, 12} points per facet.
// Weights per facet sum to the facet area.
std::vector<SurfQuadPoint> quadrature_points(const TriMesh& mesh, int order);

// Regular nx-by-ny triangulation of a horizontal rectangle; normals +e3.
TriMesh rect_to_mesh(const RectDislocation& rect, int nx, int ny);

// Euclidean distance from p to the closed triangle (a, b, c).
double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Distance from p to the closed surface of the mesh.
double distance_to_mesh(const TriMesh& mesh, const Vec3& p);

// Plain-text formats: header "dislo-mesh v1", then "v x1 x2 x3" and
// "f i j k" (1-based) lines. Slip files: "s facet_index g1 g2 g3" (1-based).
TriMesh load_mesh(const std::string& path);
void save_mesh(const TriMesh& mesh, const std::string& path);
SlipField load_slip(const std::string& path, int num_facets, SlipMode mode);
void save_slip(const SlipField& slip, const std::string& path);

}  // namespace dislo
