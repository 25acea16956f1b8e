#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spaceform/hull.hpp"
#include "spaceform/rigidity.hpp"
#include "spaceform/rng.hpp"

#include <cmath>

using namespace spaceform;

namespace {
std::vector<Vec3> octa_points() {
  std::vector<Vec3> pts;
  for (int a = 0; a < 3; ++a)
    for (int sgn : {-1, 1}) {
      Vec3 p = Vec3::Zero();
      p[a] = sgn;
      pts.push_back(p);
    }
  return pts;
}

std::vector<Vec3> tetra_points() {
  return {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
}
}  // namespace

TEST_CASE("closed hulls admit exactly the rigid motions") {
  struct Expect {
    std::vector<Vec3> pts;
    int faces, interior, rank;
  };
  std::vector<Vec3> cube;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) cube.push_back(Vec3(sx * 0.5, sy * 0.5, sz * 0.5));

  const Expect table[] = {{tetra_points(), 4, 6, 18},
                          {cube, 6, 12, 30},
                          {octa_points(), 8, 12, 42}};
  for (const Expect& e : table) {
    const RigidityReport r = deformation_space(convex_hull(e.pts, Chart::Euclidean));
    CHECK(r.face_count == e.faces);
    CHECK(r.interior_edge_count == e.interior);
    CHECK(r.matrix_rows == 6 * e.interior);
    CHECK(r.matrix_cols == 6 * e.faces);
    CHECK(r.rank == e.rank);
    CHECK(r.kernel_dim == 6);
  }
}

TEST_CASE("the singular spectrum has a clean six-dimensional kernel gap") {
  const RigidityReport r = deformation_space(convex_hull(octa_points(), Chart::Euclidean));
  REQUIRE(r.singular_tail.size() == 10);  // ascending
  for (int i = 0; i + 1 < 10; ++i) CHECK(r.singular_tail[i] <= r.singular_tail[i + 1]);
  CHECK(r.singular_tail[5] < 1e-12);  // six numerical zeros
  CHECK(r.singular_tail[6] > 0.5);    // then order-one singular values
}

TEST_CASE("a hinge gains one folding degree of freedom") {
  PolyhedralSurface hinge;
  hinge.chart = Chart::Euclidean;
  hinge.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0.3, -0.8, 0.5)};
  hinge.faces = {{0, 1, 2}, {1, 0, 3}};
  hinge.closed = false;
  finalize_surface(hinge);
  const RigidityReport r = deformation_space(hinge);
  CHECK(r.matrix_rows == 6);
  CHECK(r.matrix_cols == 12);
  CHECK(r.rank == 5);
  CHECK(r.kernel_dim == 7);  // rigid motions plus the fold about the shared edge
}

TEST_CASE("a single face is unconstrained") {
  PolyhedralSurface s;
  s.chart = Chart::Euclidean;
  s.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
  s.faces = {{0, 1, 2}};
  s.closed = false;
  finalize_surface(s);
  const RigidityReport r = deformation_space(s);
  CHECK(r.interior_edge_count == 0);
  CHECK(r.kernel_dim == 6);
}

TEST_CASE("non-euclidean charts are rejected") {
  std::vector<Vec3> pts = octa_points();
  for (Vec3& p : pts) p *= 0.5;
  CHECK_THROWS_AS(deformation_space(convex_hull(pts, Chart::Klein)),
                  std::invalid_argument);
}

TEST_CASE("projective maps act on vertices and can degenerate") {
  const PolyhedralSurface octa = convex_hull(octa_points(), Chart::Euclidean);
  const PolyhedralSurface same = apply_projective_map(octa, Mat4::Identity());
  REQUIRE(same.vertices.size() == octa.vertices.size());
  for (std::size_t i = 0; i < octa.vertices.size(); ++i)
    CHECK((same.vertices[i] - octa.vertices[i]).norm() < 1e-15);

  Mat4 collapse = Mat4::Identity();
  collapse(3, 3) = 1e-15;
  CHECK_THROWS_AS(apply_projective_map(octa, collapse), std::domain_error);
}

TEST_CASE("random admissible maps keep all denominators away from zero") {
  const PolyhedralSurface octa = convex_hull(octa_points(), Chart::Euclidean);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Mat4 m = random_projective_map(octa, rng);
    CHECK((m - Mat4::Identity()).cwiseAbs().maxCoeff() <= 0.2);
    for (const Vec& v : octa.vertices)
      CHECK(m(3, 0) * v[0] + m(3, 1) * v[1] + m(3, 2) * v[2] + m(3, 3) >= 0.1);
  }
}

TEST_CASE("the deformation dimension is a projective invariant") {
  const PolyhedralSurface octa = convex_hull(octa_points(), Chart::Euclidean);
  const ProjectiveInvarianceReport rep = projective_invariance_check(octa, 8, 7);
  CHECK(rep.base_dim == 6);
  CHECK(rep.trials == 8);
  CHECK(rep.min_dim == 6);
  CHECK(rep.max_dim == 6);
  CHECK(rep.invariant);
}

TEST_CASE("random convex shells are infinitesimally rigid") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vec3> pts;
    for (int i = 0; i < 10; ++i) pts.push_back(rng.unit_vector3() * rng.uniform(0.8, 1.2));
    PolyhedralSurface s;
    try {
      s = convex_hull(pts, Chart::Euclidean);
    } catch (const std::exception&) {
      continue;
    }
    if (s.doubly_covered) continue;
    CHECK(deformation_space(s).kernel_dim == 6);
  }
}
