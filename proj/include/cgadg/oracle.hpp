#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cgadg/instance.hpp"
#include "cgadg/realization.hpp"
#include "cgadg/vec3.hpp"

namespace cgadg {

// Coordinate-geometry reference routines, independent of the conformal code.

enum class IntersectionKind { TwoPoints, TangentPoint, Empty };

struct TrilaterationResult {
  IntersectionKind kind = IntersectionKind::Empty;
  std::vector<Vec3> points;  // 2, 1 or 0 entries
};

inline constexpr double kDiscriminantTolerance = 1e-9;

// Intersection of the spheres |x - p_k| = d_k. A discriminant between
// -kDiscriminantTolerance and 1e-12 max(1, d1^2) gives a tangent point. In
// the two-point case the point on the side of (p2 - p1) x (p3 - p1) comes
// first. Throws DegenerateGeometryError for collinear centres.
TrilaterationResult trilaterate(const Vec3& p1, const Vec3& p2, const Vec3& p3, double d1, double d2,
                                double d3);

// Angle at b between a and c.
double bond_angle(const Vec3& a, const Vec3& b, const Vec3& c);
// Signed dihedral of a-b-c-d in (-pi, pi]; 0 is cis, positive is clockwise
// when looking from b to c.
double dihedral_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Distances (d(i-3,i), d(i-2,i), d(i-1,i)) for a new point with bond angle
// theta at x_{i-1}, dihedral omega and bond length d, by the law of cosines.
std::array<double, 3> distances_from_internal(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1,
                                              double theta, double omega, double d);

// x_1 at the origin, x_2 = (-d12, 0, 0), x_3 in the upper half of the xy
// plane with angle `theta` at x_2.
std::array<Vec3, 3> anchor_first_three(double d12, double d23, double theta);

// Row-major 4x4 homogeneous transform.
struct Mat4 {
  std::array<double, 16> m{};

  static Mat4 identity();
  static Mat4 translation(const Vec3& t);
  // Rotation by `angle` about the unit `axis` through the origin.
  static Mat4 rotation(const Vec3& axis, double angle);

  double operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }

  Mat4 operator*(const Mat4& o) const;
  Vec3 apply(const Vec3& p) const;
};

// Frame at x_{i-1}: columns are the bond direction, the in-plane normal and
// the plane normal, translation x_{i-1}. Throws DegenerateGeometryError.
Mat4 torsion_frame(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1);

// (dihedral +omega point, dihedral -omega point).
std::pair<Vec3, Vec3> matrix_place_next(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1,
                                        double theta, double omega, double d);

// Per-coordinate distance between {a1, a2} and {b1, b2} as unordered pairs.
double unordered_pair_diff(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);

struct VerificationResult {
  double max_violation = 0.0;
  Edge worst_edge{};  // u = v = 0 for an edge-free instance
};

// Max over edges of | |x_u - x_v| - d_uv |. Throws std::invalid_argument on size mismatch.
VerificationResult verify_realization(const Instance& inst, const Realization& r);

}  // namespace cgadg
