#include "spaceform/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace spaceform {

namespace {

FormSpace make(const std::string& name, std::vector<int> sig, int level) {
  FormSpace s;
  s.name = name;
  s.dim = static_cast<int>(sig.size());
  s.signature = std::move(sig);
  s.model_constant = level;
  return s;
}

bool is_lorentzian(const FormSpace& s) {
  int neg = 0;
  for (int v : s.signature) neg += (v < 0);
  return neg == 1;
}

double clamp(double x, double lo, double hi) { return x < lo ? lo : (x > hi ? hi : x); }

}  // namespace

FormSpace euclidean3() { return make("R3", {1, 1, 1}, 0); }
FormSpace sphere3() { return make("S3", {1, 1, 1, 1}, 1); }
FormSpace hyperbolic3() { return make("H3", {1, 1, 1, -1}, -1); }
FormSpace minkowski21() { return make("R2,1", {1, 1, -1}, 0); }
FormSpace de_sitter3() { return make("dS3", {1, 1, 1, -1}, 1); }
FormSpace anti_de_sitter3() { return make("AdS3", {1, 1, -1, -1}, -1); }
FormSpace hyperbolic2() { return make("H2", {1, 1, -1}, -1); }

double form_eval(const FormSpace& space, const Vec& x, const Vec& y) {
  if (x.size() != space.dim || y.size() != space.dim)
    throw std::invalid_argument("form_eval: dimension mismatch");
  double acc = 0;
  for (int i = 0; i < space.dim; ++i) acc += space.signature[i] * x[i] * y[i];
  return acc;
}

bool on_model(const FormSpace& space, const Vec& x, double tol) {
  if (x.size() != space.dim) return false;
  if (space.model_constant == 0) return true;
  const double q = form_eval(space, x, x);
  const double scale = std::max(1.0, x.squaredNorm());
  if (std::abs(q - space.model_constant) > tol * scale) return false;
  if (space.model_constant == -1 && is_lorentzian(space) && x[space.dim - 1] <= 0)
    return false;  // upper sheet only
  return true;
}

double geodesic_distance(const FormSpace& space, const Vec& a, const Vec& b) {
  if (a.size() != space.dim || b.size() != space.dim)
    throw std::invalid_argument("geodesic_distance: dimension mismatch");
  if (space.model_constant == 0) {
    const Vec d = b - a;
    const double q = form_eval(space, d, d);
    const double scale = std::max(1.0, std::max(a.squaredNorm(), b.squaredNorm()));
    if (q < -kEpsGeom * scale)
      throw std::domain_error("geodesic_distance: time-like separation in flat ambient");
    return std::sqrt(std::max(q, 0.0));
  }
  const double ip = form_eval(space, a, b);
  if (space.model_constant == -1) {
    if (!is_lorentzian(space))
      throw std::domain_error("geodesic_distance: AdS geodesics not supported");
    return std::acosh(std::max(1.0, -ip));
  }
  // model_constant == +1: sphere or de Sitter
  if (!is_lorentzian(space)) return std::acos(clamp(ip, -1.0, 1.0));
  if (ip > 1.0) return std::acosh(ip);
  if (ip >= -1.0) return std::acos(ip);
  throw std::domain_error("geodesic_distance: pair not joined by a space-like dS geodesic");
}

Vec klein_project(const Vec& p) {
  const int n = static_cast<int>(p.size());
  if (n != 3 && n != 4) throw std::invalid_argument("klein_project: expected dim 3 or 4");
  if (p[n - 1] <= 0) throw std::domain_error("klein_project: point not on the upper sheet");
  return p.head(n - 1) / p[n - 1];
}

Vec klein_lift(const Vec& k) {
  const int n = static_cast<int>(k.size());
  if (n != 2 && n != 3) throw std::invalid_argument("klein_lift: expected dim 2 or 3");
  const double r2 = k.squaredNorm();
  if (r2 >= 1.0) throw std::domain_error("klein_lift: point on or outside the unit sphere");
  const double s = 1.0 / std::sqrt(1.0 - r2);
  Vec out(n + 1);
  out.head(n) = k * s;
  out[n] = s;
  return out;
}

double hilbert_distance(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("hilbert_distance: dimension mismatch");
  if (x.squaredNorm() >= 1.0 || y.squaredNorm() >= 1.0)
    throw std::domain_error("hilbert_distance: point on or outside the unit sphere");
  const double ty = (y - x).norm();
  if (ty == 0.0) return 0.0;
  const Vec u = (y - x) / ty;
  // Chord parameters: |x + t u| = 1  <=>  t^2 + 2 (x.u) t + (|x|^2 - 1) = 0.
  const double xu = x.dot(u);
  const double disc = xu * xu - (x.squaredNorm() - 1.0);
  const double sq = std::sqrt(disc);
  const double ta = -xu - sq;  // < 0, boundary point a on the x side
  const double tb = -xu + sq;  // > ty, boundary point b on the y side
  const double cross = ((ty - ta) * tb) / ((-ta) * (tb - ty));
  return 0.5 * std::log(cross);
}

Vec4 halfspace_to_hyperboloid(double u, double v, double h) {
  if (h <= 0) throw std::domain_error("halfspace_to_hyperboloid: h <= 0");
  const double r = std::sqrt(3.0);
  const double U = r * u, V = r * v, H = r * h;
  const double S = U * U + V * V + H * H;
  return Vec4(U / H, V / H, (S - 1.0) / (2.0 * H), (S + 1.0) / (2.0 * H));
}

Vec3 halfspace_to_klein(double u, double v, double h) {
  const Vec4 x = halfspace_to_hyperboloid(u, v, h);
  return Vec3(x[0] / x[3], x[1] / x[3], x[2] / x[3]);
}

}  // namespace spaceform
