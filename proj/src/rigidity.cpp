#include "spaceform/rigidity.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spaceform {

namespace {

Mat3 cross_matrix(const Vec3& v) {
  Mat3 m;
  m << 0, -v[2], v[1], v[2], 0, -v[0], -v[1], v[0], 0;
  return m;
}

}  // namespace

RigidityReport deformation_space(const PolyhedralSurface& s) {
  if (s.chart != Chart::Euclidean)
    throw std::invalid_argument("deformation_space: expected the Euclidean chart");
  const int F = static_cast<int>(s.faces.size());
  std::vector<const SurfaceEdge*> interior;
  for (const auto& e : s.edges)
    if (e.f1 != -1) interior.push_back(&e);

  RigidityReport rep;
  rep.face_count = F;
  rep.interior_edge_count = static_cast<int>(interior.size());
  rep.matrix_rows = 6 * rep.interior_edge_count;
  rep.matrix_cols = 6 * F;
  if (interior.empty()) {
    rep.kernel_dim = rep.matrix_cols;
    return rep;
  }

  // Unknowns per face: translation a (columns 6f..6f+2) and rotation w
  // (columns 6f+3..6f+5); the field at x is a + w x x.  Matching the fields of
  // the two faces at an edge endpoint v gives, per face, blocks +-I for a and
  // -+[v]_x for w.
  Mat A = Mat::Zero(rep.matrix_rows, rep.matrix_cols);
  int row = 0;
  for (const SurfaceEdge* e : interior) {
    for (int v : {e->v0, e->v1}) {
      const Mat3 vx = cross_matrix(Vec3(s.vertices[v]));
      A.block<3, 3>(row, 6 * e->f0) = Mat3::Identity();
      A.block<3, 3>(row, 6 * e->f0 + 3) = -vx;
      A.block<3, 3>(row, 6 * e->f1) = -Mat3::Identity();
      A.block<3, 3>(row, 6 * e->f1 + 3) = vx;
      row += 3;
    }
  }
  Eigen::JacobiSVD<Mat> svd(A);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * sv[0];
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rep.rank;
  rep.kernel_dim = rep.matrix_cols - rep.rank;
  const int tail = std::min<int>(10, static_cast<int>(sv.size()));
  for (int i = static_cast<int>(sv.size()) - tail; i < sv.size(); ++i)
    rep.singular_tail.push_back(sv[i]);
  std::reverse(rep.singular_tail.begin(), rep.singular_tail.end());
  return rep;
}

PolyhedralSurface apply_projective_map(const PolyhedralSurface& s, const Mat4& map) {
  PolyhedralSurface out = s;
  for (auto& v : out.vertices) {
    Eigen::Vector4d h(v[0], v[1], v[2], 1.0);
    const Eigen::Vector4d image = map * h;
    if (std::abs(image[3]) < 1e-12)
      throw std::domain_error("apply_projective_map: vanishing denominator");
    v = Vec(Vec3(image.head<3>() / image[3]));
  }
  out.edges.clear();
  finalize_surface(out);
  return out;
}

Mat4 random_projective_map(const PolyhedralSurface& s, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = (i == j ? 1.0 : 0.0) + rng.uniform(-0.2, 0.2);
    bool ok = true;
    for (const auto& v : s.vertices) {
      const double den = m(3, 0) * v[0] + m(3, 1) * v[1] + m(3, 2) * v[2] + m(3, 3);
      if (den < 0.1) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  throw std::runtime_error("random_projective_map: no admissible map found");
}

ProjectiveInvarianceReport projective_invariance_check(const PolyhedralSurface& s,
                                                       int trials, uint64_t seed) {
  ProjectiveInvarianceReport rep;
  rep.base_dim = deformation_space(s).kernel_dim;
  rep.trials = trials;
  rep.min_dim = rep.base_dim;
  rep.max_dim = rep.base_dim;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Mat4 m = random_projective_map(s, rng);
    const int dim = deformation_space(apply_projective_map(s, m)).kernel_dim;
    rep.min_dim = std::min(rep.min_dim, dim);
    rep.max_dim = std::max(rep.max_dim, dim);
  }
  rep.invariant = rep.min_dim == rep.base_dim && rep.max_dim == rep.base_dim;
  return rep;
}

}  // namespace spaceform
