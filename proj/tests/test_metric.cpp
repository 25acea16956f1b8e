#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spaceform/forms.hpp"
#include "spaceform/groups.hpp"
#include "spaceform/hull.hpp"
#include "spaceform/metric.hpp"

#include <cmath>
#include <numeric>

using namespace spaceform;

namespace {
constexpr double kPi = 3.14159265358979323846;

PolyhedralSurface single_face(Chart chart, std::vector<Vec> verts) {
  PolyhedralSurface s;
  s.chart = chart;
  s.vertices = std::move(verts);
  std::vector<int> cycle(s.vertices.size());
  std::iota(cycle.begin(), cycle.end(), 0);
  s.faces = {cycle};
  s.closed = false;
  return s;
}

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}
Vec v4(double x, double y, double z, double w) {
  Vec v(4);
  v << x, y, z, w;
  return v;
}

std::vector<Vec3> cube_points(double s) {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back(Vec3(sx * s, sy * s, sz * s));
  return pts;
}

ConeMetricReport synthetic(int genus, double curvature, const std::string& eps,
                           bool large = false) {
  ConeMetricReport r;
  r.genus = genus;
  r.curvature = curvature;
  r.epsilon = eps;
  r.large_flag = large;
  return r;
}
}  // namespace

TEST_CASE("flat right triangle") {
  const PolyhedralSurface s =
      single_face(Chart::Euclidean, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)});
  const FaceGeometry g = face_geometry(s, 0);
  REQUIRE(g.edge_lengths.size() == 3);
  CHECK(g.edge_lengths[0] == doctest::Approx(1.0));
  CHECK(g.edge_lengths[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(g.edge_lengths[2] == doctest::Approx(1.0));
  CHECK(g.angles[0] == doctest::Approx(kPi / 2));
  CHECK(g.angles[1] == doctest::Approx(kPi / 4));
  CHECK(g.angles[2] == doctest::Approx(kPi / 4));
  CHECK(g.area == doctest::Approx(0.5));
}

TEST_CASE("minkowski chart: space-like faces are euclidean, others rejected") {
  const PolyhedralSurface flat =
      single_face(Chart::Minkowski, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)});
  const FaceGeometry g = face_geometry(flat, 0);
  CHECK(g.area == doctest::Approx(0.5));
  CHECK(g.angles[0] == doctest::Approx(kPi / 2));

  // A face containing a time-like direction carries no induced metric.
  const PolyhedralSurface bad =
      single_face(Chart::Minkowski, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 1)});
  CHECK_FALSE(face_space_like(bad, 0));
  CHECK_THROWS_AS(face_geometry(bad, 0), std::domain_error);
}

TEST_CASE("spherical octant triangle on the de sitter equator") {
  const PolyhedralSurface s = single_face(
      Chart::DeSitter, {v4(1, 0, 0, 0), v4(0, 1, 0, 0), v4(0, 0, 1, 0)});
  const FaceGeometry g = face_geometry(s, 0);
  for (double len : g.edge_lengths) CHECK(len == doctest::Approx(kPi / 2));
  for (double ang : g.angles) CHECK(ang == doctest::Approx(kPi / 2));
  CHECK(g.area == doctest::Approx(kPi / 2));  // angle excess
}

TEST_CASE("hyperbolic square cell of the parabolic group") {
  const GroupSpec spec = parabolic_square_generators();
  const auto pts4 = orbit(spec, v4(0, 0, 0, 1), 3);
  std::vector<Vec3> kle;
  std::vector<std::string> words;
  for (const OrbitPoint& p : pts4) {
    kle.push_back(Vec3(klein_project(p.coords)));
    words.push_back(p.word);
  }
  const PolyhedralSurface s = convex_hull(kle, Chart::Klein, words, 3);
  int checked = 0;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (!s.stable_mask[f]) continue;
    ++checked;
    const FaceGeometry g = face_geometry(s, int(f));
    REQUIRE(g.edge_lengths.size() == 4);
    for (double len : g.edge_lengths)
      CHECK(len == doctest::Approx(std::acosh(2.5)).epsilon(1e-9));
    CHECK(g.area == doctest::Approx(1.7716441762945552).epsilon(1e-9));
    // Hyperbolic area is the angle defect.
    const double sum = g.angles[0] + g.angles[1] + g.angles[2] + g.angles[3];
    CHECK(g.area == doctest::Approx(2 * kPi - sum).epsilon(1e-12));
  }
  CHECK(checked == 4);
}

TEST_CASE("depth-4 octagon facet area matches 48 + 32 sqrt 2") {
  const GroupSpec spec = octagon_fuchsian_generators();
  const auto pts = orbit(spec, v3(0, 0, 1), 4);
  const PolyhedralSurface s = lower_hull_fuchsian(pts, 4);
  int base_idx = -1;
  for (int i = 0; i < int(s.vertices.size()); ++i)
    if (s.words[i].empty()) base_idx = i;
  REQUIRE(base_idx >= 0);
  const double expect = 48.0 + 32.0 * std::sqrt(2.0);
  int count = 0;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (std::find(s.faces[f].begin(), s.faces[f].end(), base_idx) == s.faces[f].end())
      continue;
    ++count;
    CHECK(face_geometry(s, int(f)).area == doctest::Approx(expect).epsilon(1e-9));
  }
  CHECK(count == 8);
}

TEST_CASE("flat cube cone metric") {
  const PolyhedralSurface s = convex_hull(cube_points(0.5), Chart::Euclidean);
  const ConeMetricReport r = surface_metric(s);
  CHECK(r.curvature == 0);
  CHECK(r.genus == 0);
  CHECK(r.euler_characteristic == 2);
  REQUIRE(r.cone_points.size() == 8);
  double total_k = 0;
  for (const ConePoint& c : r.cone_points) {
    CHECK(c.theta == doctest::Approx(3 * kPi / 2).epsilon(1e-12));
    CHECK(c.k == doctest::Approx(kPi / 2).epsilon(1e-12));
    total_k += c.k;
  }
  CHECK(total_k == doctest::Approx(4 * kPi).epsilon(1e-12));
  CHECK(r.gb_residual < 1e-12);
  CHECK(r.epsilon == "+");
  CHECK(r.total_area == doctest::Approx(6.0));
  CHECK(classify(r) == 2);
}

TEST_CASE("flat octahedron cone metric") {
  std::vector<Vec3> pts;
  for (int a = 0; a < 3; ++a)
    for (int sgn : {-1, 1}) {
      Vec3 p = Vec3::Zero();
      p[a] = sgn;
      pts.push_back(p);
    }
  const ConeMetricReport r = surface_metric(convex_hull(pts, Chart::Euclidean));
  REQUIRE(r.cone_points.size() == 6);
  for (const ConePoint& c : r.cone_points) {
    CHECK(c.theta == doctest::Approx(4 * kPi / 3).epsilon(1e-12));
    CHECK(c.k == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
  }
  CHECK(r.gb_residual < 1e-12);
  CHECK(classify(r) == 2);
}

TEST_CASE("doubly covered square carries four right-angle cones") {
  const std::vector<Vec3> pts = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)};
  const PolyhedralSurface s = convex_hull(pts, Chart::Euclidean);
  REQUIRE(s.doubly_covered);
  const ConeMetricReport r = surface_metric(s);
  REQUIRE(r.cone_points.size() == 4);
  for (const ConePoint& c : r.cone_points) CHECK(c.theta == doctest::Approx(kPi));
  CHECK(r.gb_residual < 1e-12);
  CHECK(r.total_area == doctest::Approx(2.0));  // both sides
  CHECK(r.euler_characteristic == 2);
  CHECK(classify(r) == 2);
}

TEST_CASE("fuchsian quotient metric: one cone of angle 6 pi on a genus-2 body") {
  const GroupSpec spec = octagon_fuchsian_generators();
  const auto pts = orbit(spec, v3(0, 0, 1), 3);
  const PolyhedralSurface s = lower_hull_fuchsian(pts, 3);
  const ConeMetricReport r = quotient_metric(s, spec, 3);
  CHECK(r.cells.vertices == 1);
  CHECK(r.cells.edges == 4);
  CHECK(r.cells.faces == 1);
  CHECK(r.euler_characteristic == -2);
  CHECK(r.genus == 2);
  CHECK(r.curvature == 0);
  REQUIRE(r.cone_points.size() == 1);
  CHECK(r.cone_points[0].theta == doctest::Approx(6 * kPi).epsilon(1e-9));
  CHECK(r.cone_points[0].k == doctest::Approx(-4 * kPi).epsilon(1e-9));
  CHECK(r.epsilon == "-");
  CHECK(r.gb_residual < 1e-8);
  CHECK(r.total_area > 0);
  CHECK(classify(r) == 9);
}

TEST_CASE("parabolic quotient metric: flat-torus combinatorics, hyperbolic faces") {
  const GroupSpec spec = parabolic_square_generators();
  const auto pts4 = orbit(spec, v4(0, 0, 0, 1), 3);
  std::vector<Vec3> kle;
  std::vector<std::string> words;
  for (const OrbitPoint& p : pts4) {
    kle.push_back(Vec3(klein_project(p.coords)));
    words.push_back(p.word);
  }
  const PolyhedralSurface s = convex_hull(kle, Chart::Klein, words, 3);
  const ConeMetricReport r = quotient_metric(s, spec, 3);
  CHECK(r.cells.vertices == 1);
  CHECK(r.cells.edges == 2);
  CHECK(r.cells.faces == 1);
  CHECK(r.euler_characteristic == 0);
  CHECK(r.genus == 1);
  CHECK(r.curvature == -1);
  REQUIRE(r.cone_points.size() == 1);
  CHECK(r.cone_points[0].theta == doctest::Approx(4.5115411308850311).epsilon(1e-9));
  CHECK(r.cone_points[0].k == doctest::Approx(1.7716441762945552).epsilon(1e-9));
  CHECK(r.epsilon == "+");
  // On a torus with hyperbolic faces the cone curvature equals the area.
  CHECK(r.cone_points[0].k == doctest::Approx(r.total_area).epsilon(1e-9));
  CHECK(r.gb_residual < 1e-9);
  CHECK(classify(r) == 5);
}

TEST_CASE("classification table") {
  CHECK(classify(synthetic(0, -1, "+")) == 1);
  CHECK(classify(synthetic(0, 0, "+")) == 2);
  CHECK(classify(synthetic(0, 1, "+")) == 3);
  CHECK(classify(synthetic(0, 1, "-", true)) == 4);
  CHECK(classify(synthetic(0, 1, "-", false)) == 0);  // small links fall outside
  CHECK(classify(synthetic(1, -1, "+")) == 5);
  CHECK(classify(synthetic(1, 1, "-")) == 6);
  CHECK(classify(synthetic(2, -1, "+")) == 7);
  CHECK(classify(synthetic(3, -1, "-")) == 8);
  CHECK(classify(synthetic(2, 0, "-")) == 9);
  CHECK(classify(synthetic(5, 1, "-")) == 10);
  CHECK(classify(synthetic(0, -1, "-")) == 0);
  CHECK(classify(synthetic(1, 0, "+")) == 0);
  CHECK(classify(synthetic(0, 0, "none")) == 0);
  CHECK_THROWS_AS(classify(synthetic(0, 0, "mixed")), std::domain_error);
  for (int row = 1; row <= 10; ++row) CHECK_FALSE(classify_description(row).empty());
}

TEST_CASE("surface_metric rejects open surfaces") {
  const GroupSpec spec = octagon_fuchsian_generators();
  const auto pts = orbit(spec, v3(0, 0, 1), 2);
  const PolyhedralSurface s = lower_hull_fuchsian(pts, 2);
  CHECK_THROWS(surface_metric(s));
}
