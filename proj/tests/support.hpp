#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "cgadg/multivector.hpp"
#include "cgadg/vec3.hpp"

namespace cgadg::testing {

inline Multivector random_multivector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector m;
  for (int k = 0; k < Multivector::kSize; ++k) m[k] = u(rng);
  return m;
}

inline Multivector random_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return Multivector::vector(u(rng), u(rng), u(rng), u(rng), u(rng));
}

inline Vec3 random_vec3(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  return {u(rng), u(rng), u(rng)};
}

inline double max_diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

// exp(B) by its power series, 40 terms.
inline Multivector exp_series(const Multivector& b) {
  Multivector term = Multivector::scalar(1.0);
  Multivector sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

// Angle between a and b in (-pi, pi].
inline double angle_diff(double a, double b) { return std::remainder(a - b, 2.0 * std::numbers::pi); }

}  // namespace cgadg::testing
