#include "cgadg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cgadg/errors.hpp"

namespace cgadg {

TrilaterationResult trilaterate(const Vec3& p1, const Vec3& p2, const Vec3& p3, double d1, double d2,
                                double d3) {
  // Local frame: p1 at the origin, p2 on the x axis, p3 in the xy plane.
  const Vec3 u = p2 - p1;
  const double base = u.norm();
  if (base == 0.0) throw DegenerateGeometryError("trilaterate: coincident centres");
  const Vec3 ex = u / base;
  const Vec3 w = p3 - p1;
  const double i = ex.dot(w);
  const Vec3 off_axis = w - ex * i;
  const double j = off_axis.norm();
  if (j < 1e-10 * std::max(base, w.norm())) {
    throw DegenerateGeometryError("trilaterate: collinear centres");
  }
  const Vec3 ey = off_axis / j;
  const Vec3 ez = ex.cross(ey);

  const double x = (d1 * d1 - d2 * d2 + base * base) / (2.0 * base);
  const double y = (d1 * d1 - d3 * d3 + i * i + j * j) / (2.0 * j) - (i / j) * x;
  const double disc = d1 * d1 - x * x - y * y;

  TrilaterationResult result;
  const Vec3 foot = p1 + ex * x + ey * y;
  if (disc < -kDiscriminantTolerance) {
    result.kind = IntersectionKind::Empty;
  } else if (disc <= 1e-12 * std::max(1.0, d1 * d1)) {
    result.kind = IntersectionKind::TangentPoint;
    result.points = {foot};
  } else {
    const double z = std::sqrt(disc);
    result.kind = IntersectionKind::TwoPoints;
    result.points = {foot + ez * z, foot - ez * z};
  }
  return result;
}

double bond_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 u = a - b;
  const Vec3 v = c - b;
  // atan2 form stays accurate near 0 and pi.
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

double dihedral_angle(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const Vec3 b0 = a - b;
  const Vec3 axis = (c - b).normalized();
  const Vec3 b2 = d - c;
  const Vec3 v = b0 - axis * b0.dot(axis);
  const Vec3 w = b2 - axis * b2.dot(axis);
  const double x = v.dot(w);
  const double y = axis.cross(v).dot(w);
  return std::atan2(y, x);
}

std::array<double, 3> distances_from_internal(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1,
                                              double theta, double omega, double d) {
  const double r1 = distance(prev3, prev2);
  const double r2 = distance(prev2, prev1);
  const double theta1 = bond_angle(prev3, prev2, prev1);
  const double d_prev2 = r2 * r2 + d * d - 2.0 * r2 * d * std::cos(theta);
  const double d_prev3 = r1 * r1 + r2 * r2 + d * d - 2.0 * r1 * r2 * std::cos(theta1) -
                         2.0 * r2 * d * std::cos(theta) +
                         2.0 * r1 * d *
                             (std::cos(theta1) * std::cos(theta) -
                              std::sin(theta1) * std::sin(theta) * std::cos(omega));
  return {std::sqrt(std::max(d_prev3, 0.0)), std::sqrt(std::max(d_prev2, 0.0)), d};
}

std::array<Vec3, 3> anchor_first_three(double d12, double d23, double theta) {
  const Vec3 x2{-d12, 0.0, 0.0};
  return {Vec3{}, x2, x2 + Vec3{std::cos(theta), std::sin(theta), 0.0} * d23};
}

Mat4 Mat4::identity() {
  Mat4 r;
  for (int k = 0; k < 4; ++k) r(k, k) = 1.0;
  return r;
}

Mat4 Mat4::translation(const Vec3& t) {
  Mat4 r = identity();
  r(0, 3) = t.x;
  r(1, 3) = t.y;
  r(2, 3) = t.z;
  return r;
}

Mat4 Mat4::rotation(const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  const double x = axis.x, y = axis.y, z = axis.z;
  Mat4 r = identity();
  r(0, 0) = t * x * x + c;
  r(0, 1) = t * x * y - s * z;
  r(0, 2) = t * x * z + s * y;
  r(1, 0) = t * x * y + s * z;
  r(1, 1) = t * y * y + c;
  r(1, 2) = t * y * z - s * x;
  r(2, 0) = t * x * z - s * y;
  r(2, 1) = t * y * z + s * x;
  r(2, 2) = t * z * z + c;
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

Vec3 Mat4::apply(const Vec3& p) const {
  const auto& a = *this;
  const double w = a(3, 0) * p.x + a(3, 1) * p.y + a(3, 2) * p.z + a(3, 3);
  return Vec3{a(0, 0) * p.x + a(0, 1) * p.y + a(0, 2) * p.z + a(0, 3),
              a(1, 0) * p.x + a(1, 1) * p.y + a(1, 2) * p.z + a(1, 3),
              a(2, 0) * p.x + a(2, 1) * p.y + a(2, 2) * p.z + a(2, 3)} /
         w;
}

Mat4 torsion_frame(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1) {
  const Vec3 bond = prev1 - prev2;
  const double bond_len = bond.norm();
  if (bond_len == 0.0) throw DegenerateGeometryError("torsion frame: coincident bond atoms");
  const Vec3 bc = bond / bond_len;
  const Vec3 raw_normal = (prev2 - prev3).cross(bc);
  if (raw_normal.norm() < 1e-10 * std::max(1.0, distance(prev3, prev2))) {
    throw DegenerateGeometryError("torsion frame: collinear predecessors");
  }
  const Vec3 n = raw_normal.normalized();
  const Vec3 m = n.cross(bc);
  Mat4 f = Mat4::identity();
  const std::array<Vec3, 3> cols = {bc, m, n};
  for (int c = 0; c < 3; ++c) {
    f(0, c) = cols[static_cast<std::size_t>(c)].x;
    f(1, c) = cols[static_cast<std::size_t>(c)].y;
    f(2, c) = cols[static_cast<std::size_t>(c)].z;
  }
  f(0, 3) = prev1.x;
  f(1, 3) = prev1.y;
  f(2, 3) = prev1.z;
  return f;
}

std::pair<Vec3, Vec3> matrix_place_next(const Vec3& prev3, const Vec3& prev2, const Vec3& prev1,
                                        double theta, double omega, double d) {
  const Mat4 frame = torsion_frame(prev3, prev2, prev1);
  auto local = [&](double w) {
    return Vec3{-d * std::cos(theta), d * std::sin(theta) * std::cos(w), d * std::sin(theta) * std::sin(w)};
  };
  return {frame.apply(local(omega)), frame.apply(local(-omega))};
}

double unordered_pair_diff(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
  const double same = std::max(max_coord_diff(a1, b1), max_coord_diff(a2, b2));
  const double swapped = std::max(max_coord_diff(a1, b2), max_coord_diff(a2, b1));
  return std::min(same, swapped);
}

VerificationResult verify_realization(const Instance& inst, const Realization& r) {
  if (r.size() != inst.n()) {
    throw std::invalid_argument("realization has " + std::to_string(r.size()) + " points, instance has " +
                                std::to_string(inst.n()) + " vertices");
  }
  VerificationResult result;
  for (const Edge& e : inst.edges()) {
    const double violation = std::fabs(distance(r.at(e.u), r.at(e.v)) - e.d);
    if (result.worst_edge.u == 0 || violation > result.max_violation) {
      result.max_violation = violation;
      result.worst_edge = e;
    }
  }
  return result;
}

}  // namespace cgadg
