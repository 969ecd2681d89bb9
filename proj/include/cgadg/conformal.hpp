#pragma once

#include <array>
#include <utility>

#include "cgadg/multivector.hpp"
#include "cgadg/vec3.hpp"

namespace cgadg {

// A Euclidean point in the conformal model: the null vector o + x + x^2/2 inf,
// scaled so that -inf . P = 1.
class ConformalPoint {
 public:
  // Origin.
  ConformalPoint();

  // Projects `value` to grade 1, rescales it to unit weight and checks the
  // null condition. Throws DegenerateGeometryError when the weight vanishes
  // or the vector is not null.
  static ConformalPoint normalize(const Multivector& value);

  const Multivector& value() const { return value_; }
  Vec3 euclidean() const { return {value_[1], value_[2], value_[3]}; }

 private:
  explicit ConformalPoint(const Multivector& value) : value_(value) {}
  Multivector value_;
};

ConformalPoint embed_point(const Vec3& x);
Vec3 extract_point(const ConformalPoint& p);
// Accepts any multivector that normalizes to a conformal point.
Vec3 extract_point(const Multivector& p);

// sqrt(-2 P.Q). Throws DegenerateGeometryError when P.Q is clearly positive.
double point_distance(const ConformalPoint& p, const ConformalPoint& q);

// a ^ b ^ c ^ inf scaled to unit weight; usable as a reflection versor.
// Throws DegenerateGeometryError for (nearly) collinear points.
Multivector carrier_plane(const ConformalPoint& a, const ConformalPoint& b, const ConformalPoint& c);

// Mirror image of `p` through the plane versor.
ConformalPoint reflect(const Multivector& plane, const ConformalPoint& p);

// 1 - (d/2)(v/|v|) inf. Throws std::invalid_argument when |v| <= 1e-12.
Multivector make_translator(const Vec3& v, double d);

// exp(-(angle/2) B/|B|) for a bivector B with negative square.
Multivector make_rotor(const Multivector& generator, double angle);

// Intermediate versors of one placement, kept for inspection.
struct PlacementStep {
  Multivector plane;           // through x_{i-3}, x_{i-2}, x_{i-1}
  Multivector bond_rotor;      // turns the bond direction by theta
  Multivector dihedral_rotor;  // turns about the x_{i-2} x_{i-1} axis by omega - pi/2
  Vec3 bond_direction;         // x_{i-2} - x_{i-1}
  double shifted_dihedral = 0.0;
  Multivector translator;
  Multivector motor;           // R2 R1 T R1^-1 R2^-1
  ConformalPoint placed;       // motor applied to x_{i-1}; dihedral +omega
  ConformalPoint mirrored;     // placed reflected in the plane; dihedral -omega
};

// Builds both candidate positions of vertex i from its three predecessors,
// the bond angle theta at x_{i-1}, the dihedral omega and the bond length d.
// Throws DegenerateGeometryError for collinear predecessors and
// std::invalid_argument for theta outside (0, pi) or d <= 0.
PlacementStep placement_step(const ConformalPoint& prev3, const ConformalPoint& prev2,
                             const ConformalPoint& prev1, double theta, double omega, double d);

std::pair<ConformalPoint, ConformalPoint> compute_next_points(const ConformalPoint& prev3,
                                                              const ConformalPoint& prev2,
                                                              const ConformalPoint& prev1,
                                                              double theta, double omega, double d);

// Null-basis slots of a rigid motion: 1, e12, e13, e23, e1inf, e2inf, e3inf, e123inf.
inline constexpr std::array<int, 8> kMotorSupport = {0, 3, 5, 6, 1 | 16, 2 | 16, 4 | 16, 7 | 16};

// Largest |coefficient| of `m` outside the motor support (null basis).
double off_motor_support(const Multivector& m);

}  // namespace cgadg
