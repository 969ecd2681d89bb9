#include "cgadg/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cgadg/errors.hpp"

namespace cgadg {
namespace {

const Multivector& infinity() {
  static const Multivector inf = Multivector::infinity();
  return inf;
}

double null_tolerance(const Vec3& x) { return 1e-10 * (1.0 + x.norm_sq()); }

}  // namespace

ConformalPoint::ConformalPoint() : value_(Multivector::origin()) {}

ConformalPoint ConformalPoint::normalize(const Multivector& value) {
  const double weight = -scalar_product(infinity(), value);
  if (!(std::fabs(weight) > 1e-12 * std::max(1.0, value.max_abs()))) {
    throw DegenerateGeometryError("conformal point has zero weight (point at infinity)");
  }
  Multivector p = grade_project(value, 1) / weight;
  const Vec3 x{p[1], p[2], p[3]};
  const double square = scalar_product(p, p);
  if (std::fabs(square) > null_tolerance(x)) {
    throw DegenerateGeometryError("not a null vector: P^2 = " + std::to_string(square));
  }
  return ConformalPoint(p);
}

ConformalPoint embed_point(const Vec3& x) {
  const auto& inf = infinity();
  Multivector p = Multivector::origin() + Multivector::vector(x.x, x.y, x.z) + inf * (0.5 * x.norm_sq());
  return ConformalPoint::normalize(p);
}

Vec3 extract_point(const ConformalPoint& p) { return p.euclidean(); }

Vec3 extract_point(const Multivector& p) { return ConformalPoint::normalize(p).euclidean(); }

double point_distance(const ConformalPoint& p, const ConformalPoint& q) {
  const double dsq = -2.0 * scalar_product(p.value(), q.value());
  const double tol = 1e-12 * (1.0 + p.euclidean().norm_sq() + q.euclidean().norm_sq());
  if (dsq < -tol) {
    throw DegenerateGeometryError("inconsistent conformal points: -2 P.Q = " + std::to_string(dsq));
  }
  return std::sqrt(std::max(dsq, 0.0));
}

Multivector carrier_plane(const ConformalPoint& a, const ConformalPoint& b, const ConformalPoint& c) {
  Multivector plane = a.value() ^ b.value() ^ c.value() ^ infinity();
  const double weight = std::sqrt(std::fabs(scalar_product(plane, reverse(plane))));
  const Vec3 xa = a.euclidean();
  const double scale = distance(xa, b.euclidean()) * distance(xa, c.euclidean());
  if (scale == 0.0 || weight < 1e-10 * scale) {
    throw DegenerateGeometryError("carrier plane of collinear points");
  }
  return plane / weight;
}

ConformalPoint reflect(const Multivector& plane, const ConformalPoint& p) {
  return ConformalPoint::normalize(versor_apply(plane, p.value()));
}

Multivector make_translator(const Vec3& v, double d) {
  const double len = v.norm();
  if (!(len > 1e-12)) throw std::invalid_argument("make_translator: zero-length direction");
  const Vec3 u = v / len;
  return Multivector::scalar(1.0) - Multivector::vector(u.x, u.y, u.z) * infinity() * (0.5 * d);
}

Multivector make_rotor(const Multivector& generator, double angle) {
  const double sq = scalar_product(generator, generator);
  if (!(sq < 0.0) || std::sqrt(-sq) < 1e-12) {
    throw DegenerateGeometryError("rotor generator does not square to a negative scalar");
  }
  return bivector_exp(generator * (-0.5 * angle / std::sqrt(-sq)));
}

PlacementStep placement_step(const ConformalPoint& prev3, const ConformalPoint& prev2,
                             const ConformalPoint& prev1, double theta, double omega, double d) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw std::invalid_argument("bond angle outside (0, pi): " + std::to_string(theta));
  }
  if (!(d > 0.0)) throw std::invalid_argument("bond length must be positive");

  const auto& inf = infinity();
  const Multivector& x2 = prev2.value();
  const Multivector& x1 = prev1.value();

  PlacementStep step;
  step.plane = carrier_plane(prev3, prev2, prev1);

  // The line in the plane, orthogonal to the bond x_{i-2} x_{i-1}; outer
  // products bind tighter than the geometric product here.
  const Multivector in_plane_axis = (step.plane * (x2 ^ x1)) ^ inf;
  step.bond_rotor = make_rotor(dual(in_plane_axis), theta);

  // Pointing back along the bond, so a zero turn folds x_i onto x_{i-2}.
  step.bond_direction = prev2.euclidean() - prev1.euclidean();
  step.shifted_dihedral = omega - std::numbers::pi / 2.0;
  step.dihedral_rotor = make_rotor(dual(x2 ^ x1 ^ inf), step.shifted_dihedral);

  step.translator = make_translator(step.bond_direction, d);
  step.motor = step.dihedral_rotor * step.bond_rotor * step.translator *
               versor_inverse(step.bond_rotor) * versor_inverse(step.dihedral_rotor);

  step.placed = ConformalPoint::normalize(versor_apply(step.motor, x1));
  step.mirrored = reflect(step.plane, step.placed);
  return step;
}

std::pair<ConformalPoint, ConformalPoint> compute_next_points(const ConformalPoint& prev3,
                                                              const ConformalPoint& prev2,
                                                              const ConformalPoint& prev1,
                                                              double theta, double omega, double d) {
  PlacementStep step = placement_step(prev3, prev2, prev1, theta, omega, d);
  return {step.placed, step.mirrored};
}

double off_motor_support(const Multivector& m) {
  auto coeffs = null_basis_coefficients(m);
  for (int slot : kMotorSupport) coeffs[slot] = 0.0;
  double worst = 0.0;
  for (double c : coeffs) worst = std::max(worst, std::fabs(c));
  return worst;
}

}  // namespace cgadg
