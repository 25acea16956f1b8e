#pragma once

#include "spaceform/forms.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace spaceform {

// Deterministic random source with a fully specified uint64 -> double mapping
// so that seeded runs are reproducible byte-for-byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Standard normal via Box-Muller (caches the second deviate).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  Vec3 unit_vector3() {
    while (true) {
      const Vec3 v(normal(), normal(), normal());
      const double n = v.norm();
      if (n > 1e-6) return v / n;
    }
  }

  Vec3 in_ball3(double radius) {
    while (true) {
      const Vec3 v(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      if (v.squaredNorm() < 1.0) return v * radius;
    }
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace spaceform
