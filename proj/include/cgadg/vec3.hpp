#pragma once

#include <cmath>

namespace cgadg {

// Euclidean 3-vector. Lengths are in angstroms wherever it matters.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double norm_sq() const { return dot(*this); }
  double norm() const { return std::sqrt(norm_sq()); }
  Vec3 normalized() const { return *this / norm(); }
  double max_abs() const { return std::fmax(std::fabs(x), std::fmax(std::fabs(y), std::fabs(z))); }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Largest per-coordinate difference.
inline double max_coord_diff(const Vec3& a, const Vec3& b) { return (a - b).max_abs(); }

}  // namespace cgadg
