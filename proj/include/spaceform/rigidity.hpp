#pragma once

#include "spaceform/hull.hpp"
#include "spaceform/rng.hpp"

#include <vector>

namespace spaceform {

struct RigidityReport {
  int face_count = 0;
  int interior_edge_count = 0;
  int matrix_rows = 0;
  int matrix_cols = 0;
  int rank = 0;
  int kernel_dim = 0;                 // dimension of the isometric deformation space
  std::vector<double> singular_tail;  // smallest singular values, ascending
};

// Infinitesimal isometric deformations of a Euclidean polyhedral surface: one
// Killing field (translation + rotation) per face, matched at both endpoints
// of every interior edge.  The trivial global motions always contribute 6.
RigidityReport deformation_space(const PolyhedralSurface& s);

// Image of the surface under the projective map given by a 4x4 matrix acting
// on homogeneous coordinates (combinatorics kept, vertices mapped).
PolyhedralSurface apply_projective_map(const PolyhedralSurface& s, const Mat4& map);

// Random projective perturbation of the identity whose denominators stay away
// from zero on the given surface.
Mat4 random_projective_map(const PolyhedralSurface& s, Rng& rng);

struct ProjectiveInvarianceReport {
  int base_dim = 0;
  int trials = 0;
  int min_dim = 0;
  int max_dim = 0;
  bool invariant = false;
};

// Verify that the deformation space dimension is unchanged under random
// projective images of the surface.
ProjectiveInvarianceReport projective_invariance_check(const PolyhedralSurface& s,
                                                       int trials, uint64_t seed);

}  // namespace spaceform
