#include "spaceform/dual.hpp"

#include "spaceform/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace spaceform {

namespace {

double mink4(const Vec& x, const Vec& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3];
}

void require_klein_polytope(const PolyhedralSurface& s) {
  if (s.chart != Chart::Klein && s.chart != Chart::Euclidean)
    throw std::invalid_argument("polar dual: expected a projective-chart polytope");
  if (!s.closed) throw std::invalid_argument("polar dual: surface must be closed");
}

// Faces around vertex v in rotational order: from face f, the successor is the
// face across the edge leaving v inside f.
std::vector<int> vertex_fan(const PolyhedralSurface& s, int v) {
  std::map<std::pair<int, int>, int> face_of_directed;  // directed edge -> face
  std::vector<int> incident;
  for (size_t f = 0; f < s.faces.size(); ++f) {
    const auto& cyc = s.faces[f];
    bool has = false;
    for (size_t i = 0; i < cyc.size(); ++i) {
      face_of_directed[{cyc[i], cyc[(i + 1) % cyc.size()]}] = static_cast<int>(f);
      if (cyc[i] == v) has = true;
    }
    if (has) incident.push_back(static_cast<int>(f));
  }
  if (incident.empty()) throw std::invalid_argument("vertex_fan: isolated vertex");
  std::vector<int> fan;
  int f = incident[0];
  do {
    fan.push_back(f);
    const auto& cyc = s.faces[f];
    const size_t pos = std::find(cyc.begin(), cyc.end(), v) - cyc.begin();
    const int next = cyc[(pos + 1) % cyc.size()];
    const auto it = face_of_directed.find({next, v});
    if (it == face_of_directed.end())
      throw std::invalid_argument("vertex_fan: open link");
    f = it->second;
  } while (f != incident[0] && fan.size() <= incident.size());
  if (fan.size() != incident.size())
    throw std::invalid_argument("vertex_fan: link is not a single cycle");
  return fan;
}

}  // namespace

std::vector<Vec3> polar_poles(const PolyhedralSurface& s) {
  require_klein_polytope(s);
  std::vector<Vec3> poles;
  for (size_t f = 0; f < s.faces.size(); ++f) {
    const Vec3 n = face_unit_normal(s, static_cast<int>(f));
    const double d = face_plane_offset(s, static_cast<int>(f));
    if (d <= kEpsGeom)
      throw std::domain_error("polar dual: origin is not interior to the polytope");
    poles.push_back(n / d);
  }
  return poles;
}

PolyhedralSurface polar_dual(const PolyhedralSurface& s) {
  require_klein_polytope(s);
  PolyhedralSurface dual;
  dual.chart = Chart::DeSitter;
  dual.closed = true;
  for (size_t f = 0; f < s.faces.size(); ++f) {
    const Vec3 n = face_unit_normal(s, static_cast<int>(f));
    const double d = face_plane_offset(s, static_cast<int>(f));
    if (d <= kEpsGeom)
      throw std::domain_error("polar dual: origin is not interior to the polytope");
    if (d >= 1 - kEpsGeom)
      throw std::domain_error("polar dual: face plane does not meet the ball");
    Eigen::Vector4d z(n[0], n[1], n[2], d);
    dual.vertices.push_back(Vec(z / std::sqrt(1 - d * d)));
  }
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    std::vector<int> fan = vertex_fan(s, static_cast<int>(v));
    const size_t start = std::min_element(fan.begin(), fan.end()) - fan.begin();
    std::rotate(fan.begin(), fan.begin() + static_cast<long>(start), fan.end());
    dual.faces.push_back(fan);
  }
  finalize_surface(dual);
  return dual;
}

ConeMetricReport dual_metric(const PolyhedralSurface& dual) {
  if (dual.chart != Chart::DeSitter)
    throw std::invalid_argument("dual_metric: expected a de sitter surface");
  return surface_metric(dual);
}

double dihedral_angle(const PolyhedralSurface& s, const SurfaceEdge& e) {
  if (s.chart != Chart::Klein)
    throw std::invalid_argument("dihedral_angle: expected the Klein chart");
  if (e.f1 == -1) throw std::invalid_argument("dihedral_angle: boundary edge");
  const Vec u = klein_lift(s.vertices[e.v0]);
  const Vec w = klein_lift(s.vertices[e.v1]);
  Vec edge_dir = w + mink4(w, u) * u;  // tangent at u along the edge
  edge_dir /= std::sqrt(mink4(edge_dir, edge_dir));
  auto side_dir = [&](int f) {
    for (int v : s.faces[f]) {
      if (v == e.v0 || v == e.v1) continue;
      const Vec a = klein_lift(s.vertices[v]);
      Vec t = a + mink4(a, u) * u;
      t -= mink4(t, edge_dir) * edge_dir;
      const double q = mink4(t, t);
      if (q > 1e-18) return Vec(t / std::sqrt(q));
    }
    throw std::invalid_argument("dihedral_angle: degenerate face");
  };
  const Vec s0 = side_dir(e.f0), s1 = side_dir(e.f1);
  return std::acos(std::clamp(mink4(s0, s1), -1.0, 1.0));
}

double involution_residual(const PolyhedralSurface& s) {
  const std::vector<Vec3> poles = polar_poles(s);
  const PolyhedralSurface once = convex_hull(poles, Chart::Euclidean);
  const std::vector<Vec3> twice = polar_poles(once);
  if (twice.size() != s.vertices.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (const auto& v : s.vertices) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : twice) best = std::min(best, (Vec3(v) - q).norm());
    worst = std::max(worst, best);
  }
  return worst;
}

GeneralizedVertexReport truncate_and_classify(const std::vector<Vec3>& vertices) {
  const PolyhedralSurface hull = convex_hull(vertices, Chart::Euclidean);
  GeneralizedVertexReport rep;
  for (size_t v = 0; v < hull.vertices.size(); ++v) {
    const double r2 = hull.vertices[v].squaredNorm();
    VertexClass c = VertexClass::Finite;
    if (r2 > 1 + kEpsGeom) c = VertexClass::Hyperideal;
    else if (r2 > 1 - kEpsGeom)
      c = VertexClass::Ideal;
    rep.classes.push_back(c);
    if (c == VertexClass::Finite) ++rep.finite_count;
    if (c == VertexClass::Ideal) ++rep.ideal_count;
    if (c == VertexClass::Hyperideal) {
      ++rep.hyperideal_count;
      const Vec3 p = hull.vertices[v];
      rep.truncations.push_back(
          TruncationPlane{static_cast<int>(v), p.normalized(), 1.0 / p.norm()});
    }
  }
  for (const auto& e : hull.edges) {
    const Vec3 a = hull.vertices[e.v0], b = hull.vertices[e.v1];
    const Vec3 d = b - a;
    const double t = std::clamp(-a.dot(d) / d.squaredNorm(), 0.0, 1.0);
    if ((a + t * d).squaredNorm() >= 1 - kEpsGeom)
      throw std::domain_error("truncate_and_classify: an edge misses the model ball");
  }
  return rep;
}

std::string vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::Finite: return "finite";
    case VertexClass::Ideal: return "ideal";
    case VertexClass::Hyperideal: return "hyperideal";
  }
  return "?";
}

}  // namespace spaceform
