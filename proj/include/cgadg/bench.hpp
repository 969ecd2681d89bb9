#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cgadg/multivector.hpp"
#include "cgadg/oracle.hpp"
#include "cgadg/vec3.hpp"

namespace cgadg {

// Rigid motion stored on its 8 non-zero null-basis coefficients:
// 1, e12, e13, e23, e1inf, e2inf, e3inf, e123inf.
struct Motor {
  std::array<double, 8> c{1.0, 0, 0, 0, 0, 0, 0, 0};

  static Motor identity() { return {}; }
  static Motor translator(const Vec3& t);
  // Rotation by `angle` about the unit `axis` through the origin.
  static Motor rotor(const Vec3& axis, double angle);
  // Throws std::invalid_argument if `m` has weight outside the motor support.
  static Motor from_multivector(const Multivector& m, double tol = 1e-12);

  Multivector to_multivector() const;
  Vec3 apply(const Vec3& p) const;

  friend Motor operator*(const Motor& a, const Motor& b);
};

inline constexpr int kMotorStorage = 8;
inline constexpr int kAffineMatrixStorage = 12;

struct Timing {
  double total_seconds = 0.0;
  double seconds_per_op = 0.0;
};

struct BenchReport {
  std::string op_name;
  long iterations = 0;
  Timing versor;
  Timing matrix;
  int storage_coefficients_versor = kMotorStorage;
  int storage_coefficients_matrix = kAffineMatrixStorage;
  bool cross_check_passed = false;
  double max_deviation = 0.0;
};

// Random inputs for one placement: predecessors in [-2, 2]^3 (not nearly
// collinear), theta in (0.2, pi - 0.2), omega in (-pi, pi], d in [0.5, 2].
struct PlacementInput {
  Vec3 prev3, prev2, prev1;
  double theta = 0.0, omega = 0.0, d = 0.0;
};
PlacementInput random_placement_input(std::mt19937_64& rng);

// Motor products versus 4x4 matrix products. Throws Error if the two
// composites disagree by more than 1e-8 on sample points.
BenchReport bench_compose(long count, std::uint64_t seed);

// compute_next_points versus matrix_place_next. Throws Error if any sampled
// input gives different point pairs (1e-8).
BenchReport bench_placement(long count, std::uint64_t seed);

std::string format_report_text(const std::vector<BenchReport>& reports);
std::string format_report_kv(const std::vector<BenchReport>& reports);

}  // namespace cgadg
