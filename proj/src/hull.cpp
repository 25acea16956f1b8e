#include "spaceform/hull.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace spaceform {

namespace {

using LD = long double;

LD orient3(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const LD ax = (LD)b[0] - (LD)a[0], ay = (LD)b[1] - (LD)a[1], az = (LD)b[2] - (LD)a[2];
  const LD bx = (LD)c[0] - (LD)a[0], by = (LD)c[1] - (LD)a[1], bz = (LD)c[2] - (LD)a[2];
  const LD cx = (LD)d[0] - (LD)a[0], cy = (LD)d[1] - (LD)a[1], cz = (LD)d[2] - (LD)a[2];
  return ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
}

struct Tri {
  int a, b, c;
  Vec3 n;   // outward unit normal
  double d; // plane offset, n . x = d
  bool alive = true;
};

Vec3 tri_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
  return (b - a).cross(c - a);
}

// Andrew monotone chain on 2D points given as (x, y, original index).
// Returns the strict hull (collinear interior points dropped), CCW.
std::vector<int> hull2d(std::vector<std::array<double, 3>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    if (p[0] != q[0]) return p[0] < q[0];
    if (p[1] != q[1]) return p[1] < q[1];
    return p[2] < q[2];
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& p, const auto& q) {
                          return p[0] == q[0] && p[1] == q[1];
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) throw std::runtime_error("hull2d: fewer than 3 distinct points");
  auto cross = [](const std::array<double, 3>& o, const std::array<double, 3>& a,
                  const std::array<double, 3>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<double, 3>> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  std::vector<int> out;
  out.reserve(h.size());
  for (const auto& p : h) out.push_back(static_cast<int>(p[2]));
  return out;
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Canonical key of a cycle up to rotation and reversal.
std::vector<int> cycle_key(const std::vector<int>& cyc) {
  auto best_rotation = [](const std::vector<int>& c) {
    const size_t n = c.size();
    size_t best = 0;
    for (size_t s = 1; s < n; ++s)
      for (size_t i = 0; i < n; ++i) {
        const int x = c[(s + i) % n], y = c[(best + i) % n];
        if (x != y) {
          if (x < y) best = s;
          break;
        }
      }
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = c[(best + i) % n];
    return out;
  };
  std::vector<int> rev(cyc.rbegin(), cyc.rend());
  const std::vector<int> k1 = best_rotation(cyc), k2 = best_rotation(rev);
  return std::min(k1, k2);
}

PolyhedralSurface doubly_covered_from_plane(const std::vector<Vec3>& pts, Chart chart,
                                            const std::vector<std::string>& words,
                                            const Vec3& normal) {
  const Vec3 n = normal.normalized();
  Vec3 seed = std::abs(n[0]) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  const Vec3 e1 = (seed - seed.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);
  std::vector<std::array<double, 3>> uv;
  for (size_t i = 0; i < pts.size(); ++i)
    uv.push_back({pts[i].dot(e1), pts[i].dot(e2), static_cast<double>(i)});
  const std::vector<int> poly = hull2d(uv);  // CCW as seen from the +n side

  PolyhedralSurface s;
  s.chart = chart;
  s.closed = true;
  s.doubly_covered = true;
  std::vector<int> remap(pts.size(), -1);
  std::vector<int> front;
  for (int idx : poly) {
    remap[idx] = static_cast<int>(s.vertices.size());
    s.vertices.push_back(pts[idx]);
    if (!words.empty()) s.words.push_back(words[idx]);
    front.push_back(remap[idx]);
  }
  std::vector<int> back(front.rbegin(), front.rend());
  s.faces.push_back(front);
  s.faces.push_back(back);
  s.stable_mask.assign(2, 1);
  finalize_surface(s);
  return s;
}

}  // namespace

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::Euclidean: return "euclidean R^3";
    case Chart::Minkowski: return "minkowski R^{2,1}";
    case Chart::Klein: return "klein ball of H^3";
    case Chart::DeSitter: return "de sitter dS^3";
  }
  return "?";
}

void finalize_surface(PolyhedralSurface& s) {
  s.edges.clear();
  std::map<std::pair<int, int>, std::array<int, 2>> emap;  // (v0<v1) -> faces
  std::map<std::pair<int, int>, int> directed;             // directed edge use count
  for (size_t f = 0; f < s.faces.size(); ++f) {
    const auto& cyc = s.faces[f];
    if (cyc.size() < 3) throw std::runtime_error("finalize_surface: face with < 3 vertices");
    for (size_t i = 0; i < cyc.size(); ++i) {
      const int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (u == v) throw std::runtime_error("finalize_surface: degenerate edge");
      if (++directed[{u, v}] > 1)
        throw std::runtime_error("finalize_surface: inconsistent face orientations");
      auto key = std::minmax(u, v);
      auto it = emap.find(key);
      if (it == emap.end())
        emap[key] = {static_cast<int>(f), -1};
      else if (it->second[1] == -1)
        it->second[1] = static_cast<int>(f);
      else
        throw std::runtime_error("finalize_surface: edge on more than two faces");
    }
  }
  for (const auto& [key, fs] : emap) {
    if (s.closed && fs[1] == -1)
      throw std::runtime_error("finalize_surface: open edge on a closed surface");
    s.edges.push_back(SurfaceEdge{key.first, key.second, fs[0], fs[1]});
  }

  if (s.chart == Chart::DeSitter) {
    // A de Sitter face is spherical: its corners lie on the unit sphere of the
    // space-like complement of a common time-like direction.
    for (const auto& cyc : s.faces) {
      Eigen::MatrixXd rows(static_cast<int>(cyc.size()), 4);
      for (size_t i = 0; i < cyc.size(); ++i) {
        Vec z = s.vertices[cyc[i]];
        z[3] = -z[3];  // row = z^T B
        rows.row(static_cast<int>(i)) = z.transpose();
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (cyc.size() >= 4 && sv[3] > 1e-7 * sv[0])
        throw std::runtime_error("finalize_surface: de sitter face is not spherical");
      const Vec axis = svd.matrixV().col(3);
      const double q = axis.head<3>().squaredNorm() - axis[3] * axis[3];
      if (q >= 0)
        throw std::runtime_error("finalize_surface: de sitter face axis not time-like");
    }
    if (s.stable_mask.empty()) s.stable_mask.assign(s.faces.size(), 1);
    if (!s.words.empty() && s.words.size() != s.vertices.size())
      throw std::runtime_error("finalize_surface: words/vertices size mismatch");
    return;
  }

  // Planarity and strict convexity of every face polygon (in an orthonormal
  // frame of its affine span).
  for (size_t f = 0; f < s.faces.size(); ++f) {
    const auto& cyc = s.faces[f];
    const int dim = static_cast<int>(s.vertices[cyc[0]].size());
    Eigen::MatrixXd rel(static_cast<int>(cyc.size()) - 1, dim);
    for (size_t i = 1; i < cyc.size(); ++i)
      rel.row(static_cast<int>(i) - 1) = (s.vertices[cyc[i]] - s.vertices[cyc[0]]).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rel, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() < 2 || sv[1] <= 0)
      throw std::runtime_error("finalize_surface: degenerate (collinear) face");
    if (sv.size() > 2 && sv[2] > 1e-7 * sv[0])
      throw std::runtime_error("finalize_surface: non-planar face");
    const Vec e1 = svd.matrixV().col(0), e2 = svd.matrixV().col(1);
    std::vector<double> xs(cyc.size()), ys(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) {
      const Vec r = s.vertices[cyc[i]] - s.vertices[cyc[0]];
      xs[i] = r.dot(e1);
      ys[i] = r.dot(e2);
    }
    const double turn_tol = kEpsGeom * sv[0] * sv[0];
    double sign = 0;
    for (size_t i = 0; i < cyc.size(); ++i) {
      const size_t j = (i + 1) % cyc.size(), k = (i + 2) % cyc.size();
      const double cr = (xs[j] - xs[i]) * (ys[k] - ys[j]) - (ys[j] - ys[i]) * (xs[k] - xs[j]);
      if (sign == 0 && std::abs(cr) > turn_tol) sign = cr > 0 ? 1 : -1;
      else if (cr * sign < -turn_tol)
        throw std::runtime_error("finalize_surface: non-convex face polygon");
    }
  }
  if (s.stable_mask.empty()) s.stable_mask.assign(s.faces.size(), 1);
  if (!s.words.empty() && s.words.size() != s.vertices.size())
    throw std::runtime_error("finalize_surface: words/vertices size mismatch");
}

Vec3 face_unit_normal(const PolyhedralSurface& s, int f) {
  const auto& cyc = s.faces[f];
  if (s.vertices[cyc[0]].size() != 3)
    throw std::invalid_argument("face_unit_normal: 3D charts only");
  Vec3 acc = Vec3::Zero();  // Newell accumulation over the polygon
  for (size_t i = 0; i < cyc.size(); ++i) {
    const Vec3 u = s.vertices[cyc[i]], v = s.vertices[cyc[(i + 1) % cyc.size()]];
    acc += u.cross(v);
  }
  return acc.normalized();
}

double face_plane_offset(const PolyhedralSurface& s, int f) {
  const Vec3 n = face_unit_normal(s, f);
  double d = 0;
  for (int v : s.faces[f]) d += n.dot(s.vertices[v]);
  return d / static_cast<double>(s.faces[f].size());
}

bool face_space_like(const PolyhedralSurface& s, int f) {
  if (s.chart != Chart::Minkowski) return true;
  const auto& cyc = s.faces[f];
  auto B = [](const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] - x[2] * y[2]; };
  const Vec3 d0 = Vec3(s.vertices[cyc[1]] - s.vertices[cyc[0]]);
  const Vec3 d1 = Vec3(s.vertices[cyc[2]] - s.vertices[cyc[1]]);
  const double q0 = B(d0, d0);
  if (q0 <= 0) return false;
  const Vec3 w = d1 - (B(d1, d0) / q0) * d0;
  return B(w, w) > 0;
}

PolyhedralSurface convex_hull(const std::vector<Vec3>& points, Chart chart,
                              const std::vector<std::string>& words, int depth) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw std::invalid_argument("convex_hull: fewer than 4 points");
  if (!words.empty() && words.size() != points.size())
    throw std::invalid_argument("convex_hull: words/points size mismatch");

  double scale = 0;
  for (const auto& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  scale = std::max(scale, 1.0);
  const double tau = 1e-10 * scale;  // visibility / on-plane threshold

  // Deterministic affine seed: lexicographic min, then spread maximizers.
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    const Vec3 &p = points[i], &q = points[i0];
    if (std::lexicographical_compare(p.data(), p.data() + 3, q.data(), q.data() + 3)) i0 = i;
  }
  int i1 = -1;
  double best = -1;
  for (int i = 0; i < n; ++i) {
    const double d = (points[i] - points[i0]).norm();
    if (d > best + 1e-18) best = d, i1 = i;
  }
  if (best <= tau) throw std::invalid_argument("convex_hull: all points coincide");
  int i2 = -1;
  best = -1;
  for (int i = 0; i < n; ++i) {
    const double a = tri_normal(points[i0], points[i1], points[i]).norm();
    if (a > best + 1e-18) best = a, i2 = i;
  }
  if (best <= tau * scale) throw std::invalid_argument("convex_hull: all points collinear");
  const Vec3 plane_n = tri_normal(points[i0], points[i1], points[i2]);
  int i3 = -1;
  LD bestv = -1;
  for (int i = 0; i < n; ++i) {
    const LD v = std::abs((double)orient3(points[i0], points[i1], points[i2], points[i]));
    if ((double)v > (double)bestv + 1e-18) bestv = v, i3 = i;
  }
  if ((double)bestv <= tau * scale * scale)
    return doubly_covered_from_plane(points, chart, words, plane_n);

  // Initial tetrahedron, outward orientation against its centroid.
  const Vec3 interior =
      (points[i0] + points[i1] + points[i2] + points[i3]) / 4.0;
  std::vector<Tri> tris;
  auto push_tri = [&](int a, int b, int c) {
    Vec3 nn = tri_normal(points[a], points[b], points[c]);
    const double len = nn.norm();
    if (len <= 1e-14 * scale * scale)
      throw std::runtime_error("convex_hull: degenerate triangle");
    nn /= len;
    double d = nn.dot(points[a]);
    if (nn.dot(interior) > d) {  // flip to outward
      std::swap(b, c);
      nn = -nn;
      d = -d;
    }
    tris.push_back(Tri{a, b, c, nn, d, true});
  };
  push_tri(i0, i1, i2);
  push_tri(i0, i1, i3);
  push_tri(i0, i2, i3);
  push_tri(i1, i2, i3);

  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);

  for (int pi : order) {
    const Vec3& p = points[pi];
    std::vector<char> visible(tris.size(), 0);
    bool any = false;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      if (tris[t].n.dot(p) - tris[t].d > tau) visible[t] = 1, any = true;
    }
    if (!any) continue;  // interior or on the boundary: swallowed, reinserted later
    // Horizon = directed edges of visible triangles whose twin is hidden.
    std::map<std::pair<int, int>, int> edge_owner;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive || !visible[t]) continue;
      const int vs[3] = {tris[t].a, tris[t].b, tris[t].c};
      for (int e = 0; e < 3; ++e) edge_owner[{vs[e], vs[(e + 1) % 3]}] = 1;
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [e, one] : edge_owner)
      if (!edge_owner.count({e.second, e.first})) horizon.push_back(e);
    for (size_t t = 0; t < tris.size(); ++t)
      if (tris[t].alive && visible[t]) tris[t].alive = false;
    for (const auto& [u, v] : horizon) push_tri(u, v, pi);
  }

  // Merge coplanar triangle groups into faces.  Two adjacent groups merge when
  // every vertex of the smaller-area group lies on the larger group's fitted
  // plane; fitting is area-weighted, so slivers never decide a merge.
  std::vector<int> alive;
  for (size_t t = 0; t < tris.size(); ++t)
    if (tris[t].alive) alive.push_back(static_cast<int>(t));
  DSU dsu(static_cast<int>(alive.size()));
  std::map<std::pair<int, int>, int> half;  // directed edge -> alive-index
  for (size_t k = 0; k < alive.size(); ++k) {
    const Tri& t = tris[alive[k]];
    const int vs[3] = {t.a, t.b, t.c};
    for (int e = 0; e < 3; ++e) half[{vs[e], vs[(e + 1) % 3]}] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> adj;
  for (const auto& [e, k] : half) {
    auto it = half.find({e.second, e.first});
    if (it == half.end()) throw std::runtime_error("convex_hull: open edge in hull boundary");
    if (k < it->second) adj.push_back({k, it->second});
  }
  const double coplanar_tol = 1e-8 * scale;
  struct GroupInfo {
    Vec3 acc = Vec3::Zero();  // area-weighted outward normal accumulator
    double area2 = 0;
    std::vector<int> verts;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, GroupInfo> info;
    for (size_t k = 0; k < alive.size(); ++k) {
      const Tri& t = tris[alive[k]];
      const Vec3 raw = tri_normal(points[t.a], points[t.b], points[t.c]);
      auto& gi = info[dsu.find(static_cast<int>(k))];
      gi.acc += raw;
      gi.area2 += raw.norm();
      gi.verts.insert(gi.verts.end(), {t.a, t.b, t.c});
    }
    for (auto& [r, gi] : info) {
      std::sort(gi.verts.begin(), gi.verts.end());
      gi.verts.erase(std::unique(gi.verts.begin(), gi.verts.end()), gi.verts.end());
    }
    for (const auto& [k1, k2] : adj) {
      const int r1 = dsu.find(k1), r2 = dsu.find(k2);
      if (r1 == r2) continue;
      const GroupInfo* big = &info[r1];
      const GroupInfo* small = &info[r2];
      if (big->area2 < small->area2) std::swap(big, small);
      const Vec3 nh = big->acc.normalized();
      double d = 0;
      for (int v : big->verts) d += nh.dot(points[v]);
      d /= static_cast<double>(big->verts.size());
      bool ok = true;
      for (int v : small->verts)
        if (std::abs(nh.dot(points[v]) - d) > coplanar_tol) {
          ok = false;
          break;
        }
      if (ok) {
        dsu.unite(r1, r2);
        changed = true;
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (size_t k = 0; k < alive.size(); ++k) groups[dsu.find(static_cast<int>(k))].push_back(alive[k]);

  // Each merged group becomes one polygon: 2D hull (in the face plane) of the
  // group's triangle vertices plus any swallowed points lying on the plane.
  std::vector<char> is_vertex(n, 0);
  for (int t : alive) is_vertex[tris[t].a] = is_vertex[tris[t].b] = is_vertex[tris[t].c] = 1;

  struct RawFace {
    std::vector<int> poly;  // original point indices, CCW from outside
  };
  std::vector<RawFace> raw;
  for (const auto& [root, members] : groups) {
    Vec3 nsum = Vec3::Zero();
    for (int t : members) nsum += tri_normal(points[tris[t].a], points[tris[t].b], points[tris[t].c]);
    const Vec3 fn = nsum.normalized();
    std::vector<char> in_face(n, 0);
    double dsum = 0;
    int dcnt = 0;
    for (int t : members) {
      for (int v : {tris[t].a, tris[t].b, tris[t].c})
        if (!in_face[v]) in_face[v] = 1, dsum += fn.dot(points[v]), ++dcnt;
    }
    const double d = dsum / dcnt;
    for (int i = 0; i < n; ++i)
      if (!is_vertex[i] && std::abs(fn.dot(points[i]) - d) <= tau) in_face[i] = 1;
    Vec3 seed = std::abs(fn[0]) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    const Vec3 e1 = (seed - seed.dot(fn) * fn).normalized();
    const Vec3 e2 = fn.cross(e1);
    std::vector<std::array<double, 3>> uv;
    for (int i = 0; i < n; ++i)
      if (in_face[i]) uv.push_back({points[i].dot(e1), points[i].dot(e2), static_cast<double>(i)});
    raw.push_back(RawFace{hull2d(uv)});
  }

  // Canonical face order and vertex renumbering for deterministic output.
  for (auto& rf : raw) {
    auto& c = rf.poly;
    const size_t start =
        std::min_element(c.begin(), c.end()) - c.begin();
    std::rotate(c.begin(), c.begin() + static_cast<long>(start), c.end());
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawFace& a, const RawFace& b) { return a.poly < b.poly; });

  std::vector<int> remap(n, -1);
  PolyhedralSurface s;
  s.chart = chart;
  s.closed = true;
  std::vector<int> used;
  for (const auto& rf : raw)
    for (int v : rf.poly)
      if (remap[v] == -1) {
        remap[v] = 0;
        used.push_back(v);
      }
  std::sort(used.begin(), used.end());
  for (size_t k = 0; k < used.size(); ++k) {
    remap[used[k]] = static_cast<int>(k);
    s.vertices.push_back(points[used[k]]);
    if (!words.empty()) s.words.push_back(words[used[k]]);
  }
  for (const auto& rf : raw) {
    std::vector<int> cyc;
    for (int v : rf.poly) cyc.push_back(remap[v]);
    s.faces.push_back(cyc);
  }
  s.stable_mask.assign(s.faces.size(), 1);
  if (!s.words.empty() && depth >= 0) {
    for (size_t f = 0; f < s.faces.size(); ++f) {
      bool stable = true;
      for (int v : s.faces[f])
        if (static_cast<int>(s.words[v].size()) > depth - 1) stable = false;
      s.stable_mask[f] = stable ? 1 : 0;
    }
  }
  finalize_surface(s);
  return s;
}

PolyhedralSurface lower_hull_fuchsian(const std::vector<OrbitPoint>& orbit, int depth) {
  std::vector<Vec3> pts;
  std::vector<std::string> words;
  for (const auto& op : orbit) {
    if (op.coords.size() != 3)
      throw std::invalid_argument("lower_hull_fuchsian: expected R^{2,1} orbit points");
    pts.push_back(Vec3(op.coords));
    words.push_back(op.word);
  }
  PolyhedralSurface full = convex_hull(pts, Chart::Minkowski, words, depth);

  std::vector<int> keep;
  for (size_t f = 0; f < full.faces.size(); ++f)
    if (face_unit_normal(full, static_cast<int>(f))[2] < 0) keep.push_back(static_cast<int>(f));

  PolyhedralSurface s;
  s.chart = Chart::Minkowski;
  s.closed = false;
  std::vector<int> remap(full.vertices.size(), -1);
  for (int f : keep)
    for (int v : full.faces[f])
      if (remap[v] == -1) {
        remap[v] = static_cast<int>(s.vertices.size());
        s.vertices.push_back(full.vertices[v]);
        s.words.push_back(full.words[v]);
      }
  for (int f : keep) {
    std::vector<int> cyc;
    for (int v : full.faces[f]) cyc.push_back(remap[v]);
    s.faces.push_back(cyc);
    s.stable_mask.push_back(full.stable_mask[f]);
  }
  finalize_surface(s);
  return s;
}

Vec apply_isometry_chart(const PolyhedralSurface& s, const Mat& m, const Vec& v) {
  switch (s.chart) {
    case Chart::Euclidean:
    case Chart::Minkowski:
      return m * v;
    case Chart::Klein:
      return klein_project(m * klein_lift(v));
    case Chart::DeSitter:
      return m * v;
  }
  throw std::logic_error("apply_isometry_chart: unknown chart");
}

EquivarianceReport equivariance_check(const PolyhedralSurface& s, const GroupSpec& spec) {
  EquivarianceReport rep;
  std::vector<Isometry> gens;
  for (const auto& g : spec.generators) {
    gens.push_back(g);
    gens.push_back(inverse(g));
  }
  auto find_vertex = [&](const Vec& q) -> int {
    const double tol = kEpsGeom * std::max(1.0, q.norm());
    for (size_t i = 0; i < s.vertices.size(); ++i)
      if ((s.vertices[i] - q).cwiseAbs().maxCoeff() < tol) return static_cast<int>(i);
    return -1;
  };
  std::map<std::vector<int>, int> face_by_key;
  for (size_t f = 0; f < s.faces.size(); ++f) face_by_key[cycle_key(s.faces[f])] = static_cast<int>(f);

  for (const auto& g : gens) {
    for (size_t f = 0; f < s.faces.size(); ++f) {
      if (!s.stable_mask[f]) continue;
      std::vector<int> image;
      bool all_present = true;
      for (int v : s.faces[f]) {
        const int idx = find_vertex(apply_isometry_chart(s, g.matrix, s.vertices[v]));
        if (idx < 0) {
          all_present = false;
          break;
        }
        image.push_back(idx);
      }
      if (!all_present) continue;
      ++rep.checked_faces;
      if (!face_by_key.count(cycle_key(image)))
        rep.violations.push_back(g.label + " face " + std::to_string(f));
    }
  }
  return rep;
}

}  // namespace spaceform
