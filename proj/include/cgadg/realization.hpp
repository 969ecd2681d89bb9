#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cgadg/vec3.hpp"

namespace cgadg {

// Positions x_1..x_n. Vertex indices are 1-based, as in instance files.
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<Vec3> points) : points_(std::move(points)) {}

  int size() const { return static_cast<int>(points_.size()); }
  const Vec3& at(int vertex) const { return points_.at(static_cast<std::size_t>(vertex - 1)); }
  Vec3& at(int vertex) { return points_.at(static_cast<std::size_t>(vertex - 1)); }

  const std::vector<Vec3>& points() const { return points_; }
  void push_back(const Vec3& p) { points_.push_back(p); }
  void resize(int n) { points_.resize(static_cast<std::size_t>(n)); }

 private:
  std::vector<Vec3> points_;
};

// Largest per-coordinate difference; infinity when sizes differ.
double max_coord_diff(const Realization& a, const Realization& b);

// Same realization mirrored through the z = 0 plane (the plane the solver
// anchors x_1, x_2, x_3 in).
Realization mirror_z(const Realization& r);

}  // namespace cgadg
