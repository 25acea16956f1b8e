#pragma once

#include "spaceform/groups.hpp"
#include "spaceform/hull.hpp"

#include <string>
#include <vector>

namespace spaceform {

// Intrinsic geometry of one face in the metric induced by its chart:
// flat for Euclidean and Minkowski charts, hyperbolic for the Klein chart,
// spherical for the de Sitter chart.
struct FaceGeometry {
  std::vector<double> edge_lengths;  // edge i joins corner i to corner i+1
  std::vector<double> angles;       // interior angle at corner i
  double area = 0;
};

FaceGeometry face_geometry(const PolyhedralSurface& s, int f);

struct ConePoint {
  int vertex = -1;
  double theta = 0;  // total angle around the point
  double k = 0;      // concentrated curvature 2*pi - theta
};

// Total angle at every vertex whose link is complete: interior (non-boundary)
// vertices all of whose incident faces carry an induced metric.
std::vector<ConePoint> cone_angles(const PolyhedralSurface& s);

struct CellCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

struct ConeMetricReport {
  double curvature = 0;          // constant curvature of the face geometry
  std::string epsilon = "none";  // sign of the cone curvatures: +, -, mixed, none
  int genus = 0;
  std::vector<ConePoint> cone_points;  // vertices with |k| > kEpsReport
  double total_area = 0;
  double gb_residual = 0;      // |sum k + curvature * area - 2 pi chi|
  bool has_large_flag = false; // the spherical, negative-excess case
  bool large_flag = false;     // every total angle exceeds 2*pi
  CellCounts cells;
  int euler_characteristic = 0;
};

// Cone metric of a closed polyhedral surface.
ConeMetricReport surface_metric(const PolyhedralSurface& s);

// Cone metric of the quotient of a group-invariant surface.  The surface must
// carry orbit words; the quotient cell structure is read off the link of the
// base vertex (the one with the empty word), with edge classes identified by
// neighbor words up to inversion and face classes by matching supporting
// planes under the group elements enumerated up to the given depth.
ConeMetricReport quotient_metric(const PolyhedralSurface& s, const GroupSpec& spec,
                                 int depth);

// Row of the classification table matching (genus, curvature, epsilon sign),
// or 0 when no row matches.  Throws std::domain_error for mixed signs.
int classify(const ConeMetricReport& r);
std::string classify_description(int row);

}  // namespace spaceform
