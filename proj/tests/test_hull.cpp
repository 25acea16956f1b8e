#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spaceform/groups.hpp"
#include "spaceform/hull.hpp"
#include "spaceform/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace spaceform;

namespace {
std::vector<Vec3> cube_points(double s) {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back(Vec3(sx * s, sy * s, sz * s));
  return pts;
}

int euler(const PolyhedralSurface& s) {
  return int(s.vertices.size()) - int(s.edges.size()) + int(s.faces.size());
}
}  // namespace

TEST_CASE("cube hull merges coplanar triangles into squares") {
  std::vector<Vec3> pts = cube_points(0.5);
  pts.push_back(Vec3(0, 0, 0));        // interior: swallowed
  pts.push_back(Vec3(0.5, 0, 0));      // face center: on-plane but not extreme
  pts.push_back(Vec3(0.5, 0.5, 0));    // edge midpoint: on two planes, not extreme
  const PolyhedralSurface s = convex_hull(pts, Chart::Euclidean);

  CHECK(s.vertices.size() == 8);
  CHECK(s.faces.size() == 6);
  CHECK(s.edges.size() == 12);
  CHECK(s.closed);
  CHECK_FALSE(s.doubly_covered);
  CHECK(euler(s) == 2);
  for (const auto& f : s.faces) CHECK(f.size() == 4);

  // Outward unit normals are the six signed axes at offset 0.5.
  for (int f = 0; f < 6; ++f) {
    const Vec3 n = face_unit_normal(s, f);
    CHECK(n.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
    CHECK(face_plane_offset(s, f) == doctest::Approx(0.5));
  }
}

TEST_CASE("octahedron hull keeps eight triangles") {
  std::vector<Vec3> pts;
  for (int a = 0; a < 3; ++a)
    for (int sgn : {-1, 1}) {
      Vec3 p = Vec3::Zero();
      p[a] = sgn * 0.7;
      pts.push_back(p);
    }
  const PolyhedralSurface s = convex_hull(pts, Chart::Euclidean);
  CHECK(s.vertices.size() == 6);
  CHECK(s.faces.size() == 8);
  CHECK(s.edges.size() == 12);
  CHECK(euler(s) == 2);
  for (const auto& f : s.faces) CHECK(f.size() == 3);
  for (int f = 0; f < 8; ++f)
    CHECK(face_unit_normal(s, f).cwiseAbs().sum() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("planar input becomes a doubly covered polygon") {
  std::vector<Vec3> pts = {Vec3(-1, -1, 0), Vec3(1, -1, 0), Vec3(1, 1, 0), Vec3(-1, 1, 0),
                           Vec3(0.3, 0.2, 0)};
  const PolyhedralSurface s = convex_hull(pts, Chart::Euclidean);
  CHECK(s.doubly_covered);
  CHECK(s.closed);
  CHECK(s.vertices.size() == 4);
  REQUIRE(s.faces.size() == 2);
  CHECK(s.faces[0].size() == 4);
  CHECK(s.faces[1].size() == 4);
  CHECK(s.edges.size() == 4);
  CHECK(euler(s) == 2);
  // The two faces traverse the same cycle in opposite directions.
  std::vector<int> rev(s.faces[1].rbegin(), s.faces[1].rend());
  std::rotate(rev.begin(), std::find(rev.begin(), rev.end(), s.faces[0][0]), rev.end());
  CHECK(rev == s.faces[0]);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS(convex_hull({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}, Chart::Euclidean));
  CHECK_THROWS(convex_hull({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0), Vec3(3, 0, 0)},
                           Chart::Euclidean));
  CHECK_THROWS(convex_hull({Vec3(0, 0, 0), Vec3(0, 0, 0), Vec3(0, 0, 0), Vec3(0, 0, 0)},
                           Chart::Euclidean));
}

TEST_CASE("random hulls satisfy convexity and closure invariants") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec3> pts;
    const int n = 6 + int(rng.uniform(0, 1) * 20);
    for (int i = 0; i < n; ++i) pts.push_back(rng.in_ball3(1.0));
    PolyhedralSurface s;
    try {
      s = convex_hull(pts, Chart::Euclidean);
    } catch (const std::exception&) {
      continue;  // degenerate sample
    }
    if (s.doubly_covered) continue;
    CHECK(euler(s) == 2);
    CHECK(s.closed);
    // Every edge bounds exactly two faces.
    for (const SurfaceEdge& e : s.edges) {
      CHECK(e.f0 >= 0);
      CHECK(e.f1 >= 0);
    }
    // All input points lie on or below every face plane (outward normals).
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
      const Vec3 nrm = face_unit_normal(s, int(f));
      const double d = face_plane_offset(s, int(f));
      for (const Vec3& p : pts) CHECK(nrm.dot(p) <= d + 1e-9);
    }
    // Face cycles use each vertex of the surface at least once.
    std::set<int> used;
    for (const auto& f : s.faces) used.insert(f.begin(), f.end());
    CHECK(used.size() == s.vertices.size());
  }
}

TEST_CASE("hull construction is deterministic") {
  Rng rng(23);
  std::vector<Vec3> pts;
  for (int i = 0; i < 30; ++i) pts.push_back(rng.in_ball3(1.0));
  const PolyhedralSurface a = convex_hull(pts, Chart::Euclidean);
  const PolyhedralSurface b = convex_hull(pts, Chart::Euclidean);
  REQUIRE(a.faces.size() == b.faces.size());
  CHECK(a.faces == b.faces);
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    CHECK((a.vertices[i] - b.vertices[i]).norm() == 0.0);
}

TEST_CASE("fuchsian lower hull by depth") {
  const GroupSpec spec = octagon_fuchsian_generators();
  Vec base(3);
  base << 0, 0, 1;

  struct Expect {
    int depth, verts, faces, edges, base_gon;
  };
  // The faces around the orbit base point grow with the truncation depth:
  // triangles, then pentagons, heptagons, and finally full octagons.
  const Expect table[] = {{1, 9, 8, 16, 3}, {2, 65, 80, 144, 5}, {3, 457, 584, 1040, 7}};
  for (const Expect& e : table) {
    CAPTURE(e.depth);
    const auto pts = orbit(spec, base, e.depth);
    const PolyhedralSurface s = lower_hull_fuchsian(pts, e.depth);
    CHECK_FALSE(s.closed);
    CHECK(int(s.vertices.size()) == e.verts);
    CHECK(int(s.faces.size()) == e.faces);
    CHECK(int(s.edges.size()) == e.edges);
    CHECK(euler(s) == 1);  // disk

    int base_idx = -1;
    for (int i = 0; i < int(s.vertices.size()); ++i)
      if (s.words[i].empty()) base_idx = i;
    REQUIRE(base_idx >= 0);
    int incident = 0;
    for (const auto& f : s.faces)
      if (std::find(f.begin(), f.end(), base_idx) != f.end()) {
        ++incident;
        CHECK(int(f.size()) == e.base_gon);
      }
    CHECK(incident == 8);

    // Lower hull: every outward normal points down in the chart.
    for (int f = 0; f < int(s.faces.size()); ++f) CHECK(face_unit_normal(s, f)[2] < 0);
  }
}

TEST_CASE("depth-4 lower hull closes octagon facets around the base point") {
  const GroupSpec spec = octagon_fuchsian_generators();
  Vec base(3);
  base << 0, 0, 1;
  const auto pts = orbit(spec, base, 4);
  REQUIRE(pts.size() == 3193);
  const PolyhedralSurface s = lower_hull_fuchsian(pts, 4);

  int base_idx = -1;
  for (int i = 0; i < int(s.vertices.size()); ++i)
    if (s.words[i].empty()) base_idx = i;
  REQUIRE(base_idx >= 0);

  int octagons = 0;
  for (const auto& f : s.faces) {
    if (std::find(f.begin(), f.end(), base_idx) == f.end()) continue;
    REQUIRE(f.size() == 8);
    ++octagons;
    // Walking the cycle from the base vertex, the orbit word lengths rise to
    // the truncation depth and come back down.
    // Palindromic profile, so the traversal direction does not matter.
    std::vector<std::size_t> lens;
    auto it = std::find(f.begin(), f.end(), base_idx);
    const std::size_t start = std::size_t(it - f.begin());
    for (std::size_t i = 0; i < 8; ++i) lens.push_back(s.words[f[(start + i) % 8]].size());
    CHECK(lens == std::vector<std::size_t>{0, 1, 2, 3, 4, 3, 2, 1});
  }
  CHECK(octagons == 8);
}

TEST_CASE("word-length stability marks truncation-safe faces") {
  const GroupSpec spec = parabolic_square_generators();
  Vec base(4);
  base << 0, 0, 0, 1;
  const auto pts4 = orbit(spec, base, 3);
  REQUIRE(pts4.size() == 25);
  std::vector<Vec3> kle;
  std::vector<std::string> words;
  for (const OrbitPoint& p : pts4) {
    kle.push_back(Vec3(klein_project(p.coords)));
    words.push_back(p.word);
  }
  const PolyhedralSurface s = convex_hull(kle, Chart::Klein, words, 3);
  int stable = 0;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (!s.stable_mask[f]) continue;
    ++stable;
    CHECK(s.faces[f].size() == 4);  // the stable cells of this group are squares
    for (int v : s.faces[f]) CHECK(s.words[v].size() <= 2);
  }
  CHECK(stable == 4);
  CHECK(s.faces.size() > 4);  // truncation artifacts exist but are unstable
}

TEST_CASE("equivariance holds on stable faces of the parabolic hull") {
  const GroupSpec spec = parabolic_square_generators();
  Vec base(4);
  base << 0, 0, 0, 1;
  const auto pts4 = orbit(spec, base, 3);
  std::vector<Vec3> kle;
  std::vector<std::string> words;
  for (const OrbitPoint& p : pts4) {
    kle.push_back(Vec3(klein_project(p.coords)));
    words.push_back(p.word);
  }
  const PolyhedralSurface s = convex_hull(kle, Chart::Klein, words, 3);
  const EquivarianceReport rep = equivariance_check(s, spec);
  CHECK(rep.checked_faces > 0);
  CHECK(rep.violations.empty());
}

TEST_CASE("finalize rejects broken complexes") {
  PolyhedralSurface s;
  s.chart = Chart::Euclidean;
  s.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  s.faces = {{0, 1, 2}};  // open edges on a closed surface
  s.closed = true;
  CHECK_THROWS(finalize_surface(s));

  PolyhedralSurface t;
  t.chart = Chart::Euclidean;
  t.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  t.faces = {{0, 1, 2}, {0, 1, 3}};  // same directed edge 0->1 twice
  t.closed = false;
  CHECK_THROWS(finalize_surface(t));
}
