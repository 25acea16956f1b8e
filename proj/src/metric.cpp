#include "spaceform/metric.hpp"

#include "spaceform/forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spaceform {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

double shoelace(const std::vector<double>& xs, const std::vector<double>& ys) {
  double acc = 0;
  const size_t n = xs.size();
  for (size_t i = 0; i < n; ++i) {
    const size_t j = (i + 1) % n;
    acc += xs[i] * ys[j] - xs[j] * ys[i];
  }
  return 0.5 * std::abs(acc);
}

// Flat face geometry under the bilinear form with the given diagonal signs.
FaceGeometry flat_geometry(const PolyhedralSurface& s, int f, const Vec& signs) {
  const auto& cyc = s.faces[f];
  const size_t n = cyc.size();
  auto B = [&](const Vec& x, const Vec& y) { return (x.array() * signs.array() * y.array()).sum(); };
  FaceGeometry g;
  for (size_t i = 0; i < n; ++i) {
    const Vec d = s.vertices[cyc[(i + 1) % n]] - s.vertices[cyc[i]];
    const double q = B(d, d);
    if (q <= 0) throw std::domain_error("face_geometry: edge is not space-like");
    g.edge_lengths.push_back(std::sqrt(q));
  }
  for (size_t i = 0; i < n; ++i) {
    const Vec u = s.vertices[cyc[(i + n - 1) % n]] - s.vertices[cyc[i]];
    const Vec v = s.vertices[cyc[(i + 1) % n]] - s.vertices[cyc[i]];
    const double qu = B(u, u), qv = B(v, v);
    if (qu <= 0 || qv <= 0) throw std::domain_error("face_geometry: face is not space-like");
    g.angles.push_back(std::acos(clamp1(B(u, v) / std::sqrt(qu * qv))));
  }
  // Shoelace in an orthonormal in-plane frame of the induced (flat) metric.
  const Vec d0 = s.vertices[cyc[1]] - s.vertices[cyc[0]];
  Vec f1 = d0 / std::sqrt(B(d0, d0));
  Vec f2;
  bool have = false;
  for (size_t i = 2; i < n && !have; ++i) {
    Vec w = s.vertices[cyc[i]] - s.vertices[cyc[0]];
    w -= B(w, f1) * f1;
    const double q = B(w, w);
    if (q > 1e-18) {
      f2 = w / std::sqrt(q);
      have = true;
    }
  }
  if (!have) throw std::domain_error("face_geometry: degenerate face");
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec r = s.vertices[cyc[i]] - s.vertices[cyc[0]];
    xs[i] = B(r, f1);
    ys[i] = B(r, f2);
  }
  g.area = shoelace(xs, ys);
  return g;
}

// Curved face geometry for points on a level set of the 4D Minkowski form:
// level -1 (hyperboloid, reached by lifting the Klein chart) or +1 (de Sitter).
FaceGeometry curved_geometry(const std::vector<Vec>& lifted, double level) {
  const size_t n = lifted.size();
  auto B = [](const Vec& x, const Vec& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3];
  };
  FaceGeometry g;
  for (size_t i = 0; i < n; ++i) {
    const double ip = B(lifted[i], lifted[(i + 1) % n]);
    g.edge_lengths.push_back(level < 0 ? std::acosh(std::max(1.0, -ip))
                                       : std::acos(clamp1(ip)));
  }
  for (size_t i = 0; i < n; ++i) {
    const Vec& v = lifted[i];
    auto tangent = [&](const Vec& a) -> Vec { return a - (B(a, v) / level) * v; };
    const Vec ta = tangent(lifted[(i + n - 1) % n]);
    const Vec tb = tangent(lifted[(i + 1) % n]);
    const double qa = B(ta, ta), qb = B(tb, tb);
    if (qa <= 0 || qb <= 0) throw std::domain_error("face_geometry: tangent not space-like");
    g.angles.push_back(std::acos(clamp1(B(ta, tb) / std::sqrt(qa * qb))));
  }
  const double sum = std::accumulate(g.angles.begin(), g.angles.end(), 0.0);
  const double flat = (static_cast<double>(n) - 2.0) * kPi;
  g.area = level < 0 ? flat - sum : sum - flat;
  return g;
}

struct VertexStar {
  std::vector<int> faces;  // incident faces
  int edge_count = 0;
  bool boundary = false;
};

std::vector<VertexStar> vertex_stars(const PolyhedralSurface& s) {
  std::vector<VertexStar> stars(s.vertices.size());
  for (size_t f = 0; f < s.faces.size(); ++f)
    for (int v : s.faces[f]) stars[v].faces.push_back(static_cast<int>(f));
  for (const auto& e : s.edges) {
    ++stars[e.v0].edge_count;
    ++stars[e.v1].edge_count;
    if (e.f1 == -1) stars[e.v0].boundary = stars[e.v1].boundary = true;
  }
  return stars;
}

double angle_at(const PolyhedralSurface& s, const FaceGeometry& g, int f, int v) {
  const auto& cyc = s.faces[f];
  for (size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == v) return g.angles[i];
  throw std::logic_error("angle_at: vertex not on face");
}

double chart_curvature(Chart c) {
  switch (c) {
    case Chart::Euclidean:
    case Chart::Minkowski: return 0;
    case Chart::Klein: return -1;
    case Chart::DeSitter: return 1;
  }
  return 0;
}

std::string epsilon_of(const std::vector<ConePoint>& cps) {
  bool pos = false, neg = false;
  for (const auto& c : cps) (c.k > 0 ? pos : neg) = true;
  if (pos && neg) return "mixed";
  if (pos) return "+";
  if (neg) return "-";
  return "none";
}

int letter_rank(char c) { return c >= 'a' ? c - 'a' : 26 + (c - 'A'); }

bool word_before(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return false;
}

// Supporting plane of a face, written against the ambient Minkowski form as
// the pair (unit conormal z, level c):  { x : <z, x> = c }.
struct FacePlane {
  Vec z;
  double c = 0;
  bool signed_z = false;  // whether the sign of z is canonical
};

FacePlane face_plane_minkowski(const PolyhedralSurface& s, int f) {
  const Vec3 n = face_unit_normal(s, f);
  Vec3 m(n[0], n[1], -n[2]);
  const double q = m[0] * m[0] + m[1] * m[1] - m[2] * m[2];
  if (q >= -1e-15) throw std::domain_error("face plane conormal is not time-like");
  Vec3 z = m / std::sqrt(-q);
  if (z[2] < 0) z = -z;
  double c = 0;
  for (int v : s.faces[f]) {
    const Vec& x = s.vertices[v];
    c += z[0] * x[0] + z[1] * x[1] - z[2] * x[2];
  }
  c /= static_cast<double>(s.faces[f].size());
  return FacePlane{Vec(z), c, true};
}

FacePlane face_plane_klein(const PolyhedralSurface& s, int f) {
  const Vec3 n = face_unit_normal(s, f);
  const double d = face_plane_offset(s, f);
  Eigen::Vector4d m(n[0], n[1], n[2], d);
  const double q = n.squaredNorm() - d * d;
  if (q <= 1e-15) throw std::domain_error("face plane does not meet the ball");
  return FacePlane{Vec(m / std::sqrt(q)), 0.0, false};
}

bool plane_match(const FacePlane& a, const Vec& image_z, const FacePlane& b) {
  const double tol = 1e-6 * std::max(1.0, b.z.cwiseAbs().maxCoeff());
  const bool zmatch = (image_z - b.z).cwiseAbs().maxCoeff() < tol ||
                      (!a.signed_z && (image_z + b.z).cwiseAbs().maxCoeff() < tol);
  if (!zmatch) return false;
  return std::abs(a.c - b.c) < 1e-6 * std::max(1.0, std::abs(b.c));
}

}  // namespace

FaceGeometry face_geometry(const PolyhedralSurface& s, int f) {
  switch (s.chart) {
    case Chart::Euclidean: {
      Vec signs = Vec::Ones(s.vertices[s.faces[f][0]].size());
      return flat_geometry(s, f, signs);
    }
    case Chart::Minkowski: {
      Vec signs(3);
      signs << 1, 1, -1;
      return flat_geometry(s, f, signs);
    }
    case Chart::Klein: {
      std::vector<Vec> lifted;
      for (int v : s.faces[f]) lifted.push_back(klein_lift(s.vertices[v]));
      return curved_geometry(lifted, -1.0);
    }
    case Chart::DeSitter: {
      std::vector<Vec> lifted;
      for (int v : s.faces[f]) lifted.push_back(s.vertices[v]);
      return curved_geometry(lifted, 1.0);
    }
  }
  throw std::logic_error("face_geometry: unknown chart");
}

std::vector<ConePoint> cone_angles(const PolyhedralSurface& s) {
  const auto stars = vertex_stars(s);
  std::vector<char> good(s.faces.size(), 1);
  std::vector<FaceGeometry> geom(s.faces.size());
  for (size_t f = 0; f < s.faces.size(); ++f) {
    if (!face_space_like(s, static_cast<int>(f))) {
      good[f] = 0;
      continue;
    }
    geom[f] = face_geometry(s, static_cast<int>(f));
  }
  std::vector<ConePoint> out;
  for (size_t v = 0; v < s.vertices.size(); ++v) {
    const auto& st = stars[v];
    if (st.boundary || st.faces.empty()) continue;
    if (st.edge_count != static_cast<int>(st.faces.size())) continue;
    bool ok = true;
    double theta = 0;
    for (int f : st.faces) {
      if (!good[f]) {
        ok = false;
        break;
      }
      theta += angle_at(s, geom[f], f, static_cast<int>(v));
    }
    if (!ok) continue;
    out.push_back(ConePoint{static_cast<int>(v), theta, 2 * kPi - theta});
  }
  return out;
}

ConeMetricReport surface_metric(const PolyhedralSurface& s) {
  if (!s.closed) throw std::invalid_argument("surface_metric: surface must be closed");
  ConeMetricReport r;
  r.curvature = chart_curvature(s.chart);
  r.cells = CellCounts{static_cast<int>(s.vertices.size()), static_cast<int>(s.edges.size()),
                       static_cast<int>(s.faces.size())};
  r.euler_characteristic = r.cells.vertices - r.cells.edges + r.cells.faces;
  r.genus = (2 - r.euler_characteristic) / 2;
  for (size_t f = 0; f < s.faces.size(); ++f)
    r.total_area += face_geometry(s, static_cast<int>(f)).area;
  const auto cps = cone_angles(s);
  if (cps.size() != s.vertices.size())
    throw std::invalid_argument("surface_metric: surface has incomplete vertex links");
  double k_sum = 0;
  r.large_flag = !cps.empty();
  for (const auto& c : cps) {
    k_sum += c.k;
    if (c.theta <= 2 * kPi) r.large_flag = false;
    if (std::abs(c.k) > kEpsReport) r.cone_points.push_back(c);
  }
  r.epsilon = epsilon_of(r.cone_points);
  r.gb_residual =
      std::abs(k_sum + r.curvature * r.total_area - 2 * kPi * r.euler_characteristic);
  r.has_large_flag = r.curvature == 1 && r.epsilon == "-";
  return r;
}

ConeMetricReport quotient_metric(const PolyhedralSurface& s, const GroupSpec& spec,
                                 int depth) {
  if (s.words.size() != s.vertices.size())
    throw std::invalid_argument("quotient_metric: surface carries no orbit words");
  int base = -1;
  for (size_t i = 0; i < s.words.size(); ++i)
    if (s.words[i].empty()) base = static_cast<int>(i);
  if (base < 0) throw std::invalid_argument("quotient_metric: no base vertex");
  if (s.chart != Chart::Minkowski && s.chart != Chart::Klein)
    throw std::invalid_argument("quotient_metric: unsupported chart");

  std::vector<int> link;
  for (size_t f = 0; f < s.faces.size(); ++f)
    if (std::count(s.faces[f].begin(), s.faces[f].end(), base)) link.push_back(static_cast<int>(f));
  if (link.empty()) throw std::invalid_argument("quotient_metric: base vertex has no faces");

  std::vector<FaceGeometry> geom;
  for (int f : link) geom.push_back(face_geometry(s, f));

  double theta = 0;
  std::set<std::string> neighbor_words;
  for (size_t i = 0; i < link.size(); ++i) {
    const auto& cyc = s.faces[link[i]];
    const size_t pos = std::find(cyc.begin(), cyc.end(), base) - cyc.begin();
    theta += geom[i].angles[pos];
    neighbor_words.insert(s.words[cyc[(pos + 1) % cyc.size()]]);
    neighbor_words.insert(s.words[cyc[(pos + cyc.size() - 1) % cyc.size()]]);
  }
  std::set<std::string> edge_classes;
  for (const auto& w : neighbor_words) {
    const std::string wi = invert_word(w);
    edge_classes.insert(word_before(w, wi) ? w : wi);
  }

  // Face classes: supporting planes matched under the group elements.
  std::vector<FacePlane> planes;
  for (int f : link)
    planes.push_back(s.chart == Chart::Minkowski ? face_plane_minkowski(s, f)
                                                 : face_plane_klein(s, f));
  const Vec base_ambient =
      s.chart == Chart::Minkowski ? s.vertices[base] : klein_lift(s.vertices[base]);
  const auto orb = orbit(spec, base_ambient, depth);
  std::vector<int> parent(link.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& op : orb) {
    const Mat m = word_isometry(spec, op.word).matrix;
    for (size_t i = 0; i < link.size(); ++i) {
      const Vec image = m * planes[i].z;
      for (size_t j = 0; j < link.size(); ++j)
        if (plane_match(planes[i], image, planes[j]) && find((int)i) != find((int)j))
          parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  std::map<int, int> class_rep;  // root -> smallest link index
  for (size_t i = 0; i < link.size(); ++i) {
    const int r = find(static_cast<int>(i));
    if (!class_rep.count(r)) class_rep[r] = static_cast<int>(i);
    else
      class_rep[r] = std::min(class_rep[r], static_cast<int>(i));
  }

  ConeMetricReport r;
  r.curvature = chart_curvature(s.chart);
  r.cells = CellCounts{1, static_cast<int>(edge_classes.size()),
                       static_cast<int>(class_rep.size())};
  r.euler_characteristic = r.cells.vertices - r.cells.edges + r.cells.faces;
  r.genus = (2 - r.euler_characteristic) / 2;
  for (const auto& [root, rep] : class_rep) r.total_area += geom[rep].area;
  const double k = 2 * kPi - theta;
  if (std::abs(k) > kEpsReport) r.cone_points.push_back(ConePoint{base, theta, k});
  r.epsilon = epsilon_of(r.cone_points);
  r.gb_residual =
      std::abs(k + r.curvature * r.total_area - 2 * kPi * r.euler_characteristic);
  r.large_flag = theta > 2 * kPi;
  r.has_large_flag = r.curvature == 1 && r.epsilon == "-";
  return r;
}

int classify(const ConeMetricReport& r) {
  if (r.epsilon == "mixed")
    throw std::domain_error("classify: cone curvatures of mixed sign");
  if (r.epsilon == "none") return 0;
  const int g = r.genus;
  const int K = static_cast<int>(r.curvature);
  const bool pos = r.epsilon == "+";
  if (g == 0) {
    if (K == -1 && pos) return 1;
    if (K == 0 && pos) return 2;
    if (K == 1 && pos) return 3;
    if (K == 1 && !pos && r.large_flag) return 4;
    return 0;
  }
  if (g == 1) {
    if (K == -1 && pos) return 5;
    if (K == 1 && !pos) return 6;
    return 0;
  }
  if (K == -1) return pos ? 7 : 8;
  if (K == 0 && !pos) return 9;
  if (K == 1 && !pos) return 10;
  return 0;
}

std::string classify_description(int row) {
  switch (row) {
    case 1: return "genus 0, hyperbolic faces, positive excess";
    case 2: return "genus 0, flat faces, positive excess";
    case 3: return "genus 0, spherical faces, positive excess";
    case 4: return "genus 0, spherical faces, negative excess, large links";
    case 5: return "genus 1, hyperbolic faces, positive excess";
    case 6: return "genus 1, spherical faces, negative excess";
    case 7: return "genus >= 2, hyperbolic faces, positive excess";
    case 8: return "genus >= 2, hyperbolic faces, negative excess";
    case 9: return "genus >= 2, flat faces, negative excess";
    case 10: return "genus >= 2, spherical faces, negative excess";
    default: return "outside table";
  }
}

}  // namespace spaceform
