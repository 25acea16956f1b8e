#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace spaceform {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Global tolerances: kEpsGeom for incidence/membership predicates,
// kEpsReport for metric assertions.
inline constexpr double kEpsGeom = 1e-9;
inline constexpr double kEpsReport = 1e-6;

// A diagonal quadratic form of signature `signature` on R^dim together with
// the pseudo-sphere level the model space sits on (0 = the flat ambient
// itself). Timelike coordinates come last; the model sheet of H^2/H^3 is the
// one with positive timelike coordinate.
struct FormSpace {
  std::string name;
  int dim = 3;
  std::vector<int> signature;  // entries +1 / -1, length == dim
  int model_constant = 0;      // -1, 0, +1
};

FormSpace euclidean3();       // R^3
FormSpace sphere3();          // S^3  = {<x,x> = +1} in R^4
FormSpace hyperbolic3();      // H^3  = {<x,x> = -1, x4 > 0} in R^{3,1}
FormSpace minkowski21();      // R^{2,1}, signature (+,+,-)
FormSpace de_sitter3();       // dS^3 = {<x,x> = +1} in R^{3,1}
FormSpace anti_de_sitter3();  // AdS^3 = {<x,x> = -1} in R^{2,2}
FormSpace hyperbolic2();      // H^2  = {<x,x> = -1, x3 > 0} in R^{2,1}

// Bilinear form value sum_i signature_i * x_i * y_i.
double form_eval(const FormSpace& space, const Vec& x, const Vec& y);

// Membership of the model pseudo-sphere (relative tolerance; checks the
// upper-sheet condition for H^2/H^3).
bool on_model(const FormSpace& space, const Vec& x, double tol = kEpsGeom);

// Space-form geodesic distance between two points of the model:
//   H^2/H^3: arcosh(-<a,b>);  S^3: arccos(<a,b>);
//   flat: space-like length of b - a;
//   dS^3: arcosh(<a,b>) for <a,b> > 1, arccos(<a,b>) for |<a,b>| <= 1.
// Throws std::domain_error for time-like/light-like separations.
double geodesic_distance(const FormSpace& space, const Vec& a, const Vec& b);

// Central projection of the hyperboloid upper sheet into the open unit ball
// (divide by the timelike last coordinate) and its inverse.
Vec klein_project(const Vec& p);
Vec klein_lift(const Vec& k);

// Hilbert distance on the open unit ball: half the |log| of the cross-ratio
// [a,x,y,b] = (|ay| |bx|) / (|ax| |by|) along the chord through x and y,
// with a on the x side. Equals the Klein-model hyperbolic distance.
double hilbert_distance(const Vec& x, const Vec& y);

// Upper half-space model (u, v, h), h > 0, into the hyperboloid of H^3 and
// the Klein ball. Normalized so the plane h = 1 maps onto the ellipsoid with
// semi-axes (1/2, 1/2, 1/4) centered at (0,0,3/4): internally tangent to the
// unit sphere at (0,0,1) and passing through the Klein origin. The map is an
// isometry onto its image; (0,0,1) -> Klein (0,0,1/2).
Vec4 halfspace_to_hyperboloid(double u, double v, double h);
Vec3 halfspace_to_klein(double u, double v, double h);

}  // namespace spaceform
