#pragma once

#include "spaceform/hull.hpp"
#include "spaceform/metric.hpp"

#include <vector>

namespace spaceform {

// Projective pole of each face plane n.x = d, the point n/d. Requires d > 0
// (origin interior); poles of planes missing the ball land outside it.
std::vector<Vec3> polar_poles(const PolyhedralSurface& s);

// Polar dual of a compact polytope in the Klein chart with the origin in its
// interior: one de Sitter vertex per face, one spherical face per vertex, with
// corners ordered by walking the primal face fan around the vertex.
PolyhedralSurface polar_dual(const PolyhedralSurface& s);

// Cone metric of a dual (de Sitter chart) surface.
ConeMetricReport dual_metric(const PolyhedralSurface& dual);

// Interior dihedral angle along edge e of a Klein-chart polytope, computed
// from tangent projections at a lifted endpoint.
double dihedral_angle(const PolyhedralSurface& s, const SurfaceEdge& e);

// Largest vertex mismatch between the original polytope and the polar dual of
// its polar dual, both taken in the projective (pole) model.
double involution_residual(const PolyhedralSurface& s);

enum class VertexClass { Finite, Ideal, Hyperideal };

struct TruncationPlane {
  int vertex = -1;
  Vec3 normal = Vec3::Zero();  // polar plane normal.x = offset
  double offset = 0;
};

struct GeneralizedVertexReport {
  std::vector<VertexClass> classes;
  int finite_count = 0;
  int ideal_count = 0;
  int hyperideal_count = 0;
  std::vector<TruncationPlane> truncations;  // one per hyperideal vertex
};

// Classify the vertices of the convex position set as finite / ideal /
// hyperideal relative to the unit ball and compute the truncating polar plane
// of every hyperideal vertex.  Throws std::domain_error when some edge of the
// hull misses the open ball, in which case no truncation exists.
GeneralizedVertexReport truncate_and_classify(const std::vector<Vec3>& vertices);

std::string vertex_class_name(VertexClass c);

}  // namespace spaceform
