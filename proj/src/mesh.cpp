#include "dislo/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dislo {

TriMesh::TriMesh(std::vector<Vec3> verts, std::vector<std::array<int, 3>> tris)
    : vertices(std::move(verts)), triangles(std::move(tris)) {
  if (vertices.empty() || triangles.empty())
    throw std::invalid_argument("TriMesh: empty mesh");
  for (const auto& v : vertices)
    if (!(v[2] < 0.0))
      throw std::invalid_argument("TriMesh: all vertices must lie strictly below {x3 = 0}");
  std::set<std::array<int, 3>> seen;
  std::map<std::pair<int, int>, int> directed_edges;
  const int nv = static_cast<int>(vertices.size());
  for (const auto& t : triangles) {
    for (int i : t)
      if (i < 0 || i >= nv) throw std::invalid_argument("TriMesh: vertex index out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw std::invalid_argument("TriMesh: degenerate facet (repeated vertex)");
    std::array<int, 3> key = t;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw std::invalid_argument("TriMesh: duplicate facet");
    for (int e = 0; e < 3; ++e) {
      const auto edge = std::make_pair(t[e], t[(e + 1) % 3]);
      if (++directed_edges[edge] > 1)
        throw std::invalid_argument("TriMesh: inconsistent orientation or non-manifold edge");
    }
  }
}

Vec3 TriMesh::facet_normal(int f) const {
  const auto& t = triangles[f];
  const Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
  return n.normalized();
}

double TriMesh::facet_area(int f) const {
  const auto& t = triangles[f];
  return 0.5 *
         (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
}

Vec3 TriMesh::facet_centroid(int f) const {
  const auto& t = triangles[f];
  return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
}

double TriMesh::facet_size(int f) const {
  const auto& t = triangles[f];
  return std::max({(vertices[t[1]] - vertices[t[0]]).norm(),
                   (vertices[t[2]] - vertices[t[1]]).norm(),
                   (vertices[t[0]] - vertices[t[2]]).norm()});
}

double TriMesh::total_area() const {
  double a = 0.0;
  for (int f = 0; f < num_facets(); ++f) a += facet_area(f);
  return a;
}

double TriMesh::diameter() const {
  Vec3 lo = vertices[0], hi = vertices[0];
  for (const auto& v : vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  return (hi - lo).norm();
}

double TriMesh::surface_clearance() const {
  double c = std::numeric_limits<double>::max();
  for (const auto& v : vertices) c = std::min(c, -v[2]);
  return c;
}

bool SlipField::full_support() const {
  return std::all_of(g.begin(), g.end(), [](const Vec3& v) { return v.norm() > 0.0; });
}

std::vector<FacetFrame> facet_frames(const TriMesh& mesh) {
  std::vector<FacetFrame> frames(mesh.num_facets());
  const double scale = mesh.diameter();
  for (int f = 0; f < mesh.num_facets(); ++f) {
    if (mesh.facet_area(f) <= 1e-14 * scale * scale) {
      std::ostringstream os;
      os << "facet_frames: degenerate triangle at facet " << f;
      throw std::invalid_argument(os.str());
    }
    const auto& t = mesh.triangles[f];
    FacetFrame fr;
    fr.n = mesh.facet_normal(f);
    fr.t1 = (mesh.vertices[t[1]] - mesh.vertices[t[0]]).normalized();
    fr.t1 = (fr.t1 - fr.t1.dot(fr.n) * fr.n).normalized();
    fr.t2 = fr.n.cross(fr.t1);
    frames[f] = fr;
  }
  return frames;
}

namespace {

using Vec2 = Eigen::Vector2d;

// Clip polygon `poly` by the half-plane left of segment a->b (Sutherland-Hodgman).
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
  std::vector<Vec2> out;
  auto side = [&](const Vec2& p) {
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
  };
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const double sp = side(p), sq = side(q);
    if (sp >= 0.0) out.push_back(p);
    if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
  double a = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * a;
}

double tri_overlap_area(std::array<Vec2, 3> t1, std::array<Vec2, 3> t2) {
  auto signed_area = [](const std::array<Vec2, 3>& t) {
    return 0.5 * ((t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) -
                  (t[2][0] - t[0][0]) * (t[1][1] - t[0][1]));
  };
  if (signed_area(t1) < 0.0) std::swap(t1[1], t1[2]);
  if (signed_area(t2) < 0.0) std::swap(t2[1], t2[2]);
  std::vector<Vec2> poly(t1.begin(), t1.end());
  for (int e = 0; e < 3 && !poly.empty(); ++e)
    poly = clip_halfplane(poly, t2[e], t2[(e + 1) % 3]);
  return poly.empty() ? 0.0 : std::abs(polygon_area(poly));
}

}  // namespace

GraphCheckResult validate_graph_condition(const TriMesh& mesh, const Vec3& direction) {
  const Vec3 d = direction.normalized();
  // Orthonormal in-plane basis for the projection.
  Vec3 e1 = std::abs(d[0]) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  e1 = (e1 - e1.dot(d) * d).normalized();
  const Vec3 e2 = d.cross(e1);

  const double scale = mesh.diameter();
  const double area_tol = 1e-12 * scale * scale;

  std::vector<std::array<Vec2, 3>> proj(mesh.num_facets());
  GraphCheckResult res;
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const auto& t = mesh.triangles[f];
    for (int k = 0; k < 3; ++k)
      proj[f][k] = Vec2(mesh.vertices[t[k]].dot(e1), mesh.vertices[t[k]].dot(e2));
    // A facet parallel to the direction projects to a segment: not a graph.
    if (std::abs(mesh.facet_normal(f).dot(d)) * mesh.facet_area(f) <= area_tol) {
      res.witness = {f, f};
      return res;
    }
  }
  for (int f = 0; f < mesh.num_facets(); ++f)
    for (int g = f + 1; g < mesh.num_facets(); ++g)
      if (tri_overlap_area(proj[f], proj[g]) > area_tol) {
        res.witness = {f, g};
        return res;
      }
  res.is_graph = true;
  return res;
}

SlipField project_slip(const SlipField& field, const TriMesh& mesh) {
  if (field.mode == SlipMode::oblique)
    throw std::invalid_argument("project_slip: oblique mode has no projection");
  if (static_cast<int>(field.g.size()) != mesh.num_facets())
    throw std::invalid_argument("project_slip: slip/mesh size mismatch");
  SlipField out = field;
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const Vec3 n = mesh.facet_normal(f);
    if (field.mode == SlipMode::tangential)
      out.g[f] = field.g[f] - field.g[f].dot(n) * n;
    else
      out.g[f] = field.g[f].dot(n) * n;
  }
  return out;
}

namespace {
struct TriRulePoint {
  double l1, l2, l3, w;  // barycentric coordinates, weight (sums to 1)
};

std::vector<TriRulePoint> tri_rule(int order) {
  std::vector<TriRulePoint> r;
  auto perm3 = [&](double a, double b, double w) {
    r.push_back({a, b, b, w});
    r.push_back({b, a, b, w});
    r.push_back({b, b, a, w});
  };
  switch (order) {
    case 1:
      r.push_back({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0});
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
      const double xs[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                               {b, c, a}, {c, a, b}, {c, b, a}};
      for (auto& x : xs) r.push_back({x[0], x[1], x[2], w});
      break;
    }
    default:
      throw std::invalid_argument("quadrature_points: order must be one of {1, 3, 6, 12}");
  }
  return r;
}
}  // namespace

std::vector<SurfQuadPoint> quadrature_points(const TriMesh& mesh, int order) {
  const auto rule = tri_rule(order);
  std::vector<SurfQuadPoint> pts;
  pts.reserve(mesh.num_facets() * rule.size());
  for (int f = 0; f < mesh.num_facets(); ++f) {
    const auto& t = mesh.triangles[f];
    const double area = mesh.facet_area(f);
    for (const auto& rp : rule) {
      SurfQuadPoint q;
      q.point = rp.l1 * mesh.vertices[t[0]] + rp.l2 * mesh.vertices[t[1]] +
                rp.l3 * mesh.vertices[t[2]];
      q.weight = rp.w * area;
      q.facet = f;
      pts.push_back(q);
    }
  }
  return pts;
}

TriMesh rect_to_mesh(const RectDislocation& rect, int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("rect_to_mesh: need nx, ny >= 1");
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  const double z = rect.depth();
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      verts.emplace_back(rect.a + (rect.b - rect.a) * i / nx,
                         rect.c + (rect.d - rect.c) * j / ny, z);
  auto id = [&](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      // CCW seen from above: normal +e3.
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return TriMesh(std::move(verts), std::move(tris));
}

TriMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_mesh: cannot open " + path);
  std::string header;
  std::getline(in, header);
  if (header != "dislo-mesh v1")
    throw std::runtime_error("load_mesh: bad header in " + path + ": '" + header + "'");
  std::vector<Vec3> verts;
  std::vector<std::array<int, 3>> tris;
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'v') {
      Vec3 v;
      ls >> v[0] >> v[1] >> v[2];
      if (!ls) throw std::runtime_error("load_mesh: bad vertex line " + std::to_string(lineno));
      verts.push_back(v);
    } else if (tag == 'f') {
      std::array<int, 3> t;
      ls >> t[0] >> t[1] >> t[2];
      if (!ls) throw std::runtime_error("load_mesh: bad facet line " + std::to_string(lineno));
      for (int& i : t) i -= 1;  // 1-based on disk
      tris.push_back(t);
    } else {
      throw std::runtime_error("load_mesh: unknown tag at line " + std::to_string(lineno));
    }
  }
  return TriMesh(std::move(verts), std::move(tris));
}

void save_mesh(const TriMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_mesh: cannot open " + path);
  out << "dislo-mesh v1\n";
  out.precision(17);
  for (const auto& v : mesh.vertices) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

SlipField load_slip(const std::string& path, int num_facets, SlipMode mode) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_slip: cannot open " + path);
  SlipField slip;
  slip.mode = mode;
  slip.g.assign(num_facets, Vec3::Zero());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag;
    int f;
    Vec3 g;
    ls >> tag >> f >> g[0] >> g[1] >> g[2];
    if (!ls || tag != 's')
      throw std::runtime_error("load_slip: bad line " + std::to_string(lineno));
    if (f < 1 || f > num_facets)
      throw std::runtime_error("load_slip: facet index out of range at line " +
                               std::to_string(lineno));
    slip.g[f - 1] = g;
  }
  return slip;
}

void save_slip(const SlipField& slip, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_slip: cannot open " + path);
  out.precision(17);
  for (size_t f = 0; f < slip.g.size(); ++f)
    out << "s " << f + 1 << ' ' << slip.g[f][0] << ' ' << slip.g[f][1] << ' ' << slip.g[f][2]
        << '\n';
}


double point_triangle_distance(const Vec3& p, const Vec3& va, const Vec3& vb, const Vec3& vc) {
  // Ericson-style closest point on triangle.
  const Vec3 ab = vb - va, ac = vc - va, ap = p - va;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return (p - va).norm();
  const Vec3 bp = p - vb;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return (p - vb).norm();
  const double vcr = d1 * d4 - d3 * d2;
  if (vcr <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return (p - (va + ab * (d1 / (d1 - d3)))).norm();
  const Vec3 cp = p - vc;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return (p - vc).norm();
  const double vbr = d5 * d2 - d1 * d6;
  if (vbr <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return (p - (va + ac * (d2 / (d2 - d6)))).norm();
  const double var = d3 * d6 - d5 * d4;
  if (var <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
    return (p - (vb + (vc - vb) * ((d4 - d3) / ((d4 - d3) + (d5 - d6))))).norm();
  const double denom = 1.0 / (var + vbr + vcr);
  return (p - (va + ab * (vbr * denom) + ac * (vcr * denom))).norm();
}

double distance_to_mesh(const TriMesh& mesh, const Vec3& p) {
  double d = std::numeric_limits<double>::max();
  for (const auto& t : mesh.triangles)
    d = std::min(d, point_triangle_distance(p, mesh.vertices[t[0]], mesh.vertices[t[1]],
                                            mesh.vertices[t[2]]));
  return d;
}


}  // namespace dislo
