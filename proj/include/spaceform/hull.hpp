#pragma once

#include "spaceform/forms.hpp"
#include "spaceform/groups.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spaceform {

// Which affine chart the vertex coordinates live in. Euclidean and Minkowski
// are flat ambients (R^3 / R^{2,1}); Klein holds points of the unit-ball
// model of H^3; DeSitter holds 4D pseudo-sphere points of dS^3.
enum class Chart { Euclidean, Minkowski, Klein, DeSitter };

std::string chart_name(Chart c);

struct SurfaceEdge {
  int v0, v1;  // v0 < v1
  int f0, f1;  // incident faces, f1 == -1 on an open boundary
};

struct PolyhedralSurface {
  Chart chart = Chart::Euclidean;
  std::vector<Vec> vertices;
  std::vector<std::string> words;        // orbit words, parallel to vertices (may be empty)
  std::vector<std::vector<int>> faces;   // cyclic vertex indices, outward orientation
  std::vector<SurfaceEdge> edges;        // derived by finalize_surface
  std::vector<std::uint8_t> stable_mask; // per face, 1 = unaffected by orbit truncation
  bool closed = true;
  bool doubly_covered = false;
};

// Derives edges and validates the complex: faces planar within kEpsGeom and
// strictly convex, consistent orientation, every edge on <= 2 faces (exactly
// 2 when closed). Throws std::runtime_error on violation.
void finalize_surface(PolyhedralSurface& s);

// Outward unit normal / offset of a face's plane in the 3D chart (n . x = d).
Vec3 face_unit_normal(const PolyhedralSurface& s, int f);
double face_plane_offset(const PolyhedralSurface& s, int f);

// True when the ambient Minkowski form restricted to the face plane is
// positive definite (the face carries a Riemannian induced metric).
bool face_space_like(const PolyhedralSurface& s, int f);

// Boundary complex of the Euclidean convex hull of 3D chart points, coplanar
// triangles merged into maximal convex faces, outward orientation. A rank-2
// input is returned as a doubly covered polygon (two faces, opposite
// orientations). Throws on < 4 points or affine rank < 2. When `words` are
// supplied together with depth >= 0, faces whose vertices all have word
// length <= depth - 1 are marked stable; otherwise every face is stable.
PolyhedralSurface convex_hull(const std::vector<Vec3>& points, Chart chart,
                              const std::vector<std::string>& words = {}, int depth = -1);

// The part of the hull of a Fuchsian orbit facing the origin: faces whose
// outward Euclidean normal has negative third coordinate. Open surface;
// stability mask per the word-length rule.
PolyhedralSurface lower_hull_fuchsian(const std::vector<OrbitPoint>& orbit, int depth);

struct EquivarianceReport {
  int checked_faces = 0;
  std::vector<std::string> violations;  // "<generator letter> face <index>"
};

// For every generator (and inverse) and every stable face whose image
// vertices are all present, the image must again be a face (same cycle up to
// rotation/reversal).
EquivarianceReport equivariance_check(const PolyhedralSurface& s, const GroupSpec& spec);

// Chart-aware action of an isometry on chart coordinates (Minkowski: linear;
// Klein: lift to the hyperboloid, apply, project back).
Vec apply_isometry_chart(const PolyhedralSurface& s, const Mat& m, const Vec& v);

}  // namespace spaceform
