#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cgadg {

// Dense element of Cl(4,1), the algebra behind the 3D conformal model.
//
// The orthonormal basis is (e1, e2, e3, e, ebar) with squares (+,+,+,+,-).
// A blade is identified by a 5-bit mask over that basis (bit 0 = e1,
// bit 3 = e, bit 4 = ebar). Coefficients are stored in canonical order:
// by grade, then lexicographically on the sorted basis indices, i.e.
//   1, e1, e2, e3, e, ebar, e12, e13, e1e, e1ebar, e23, ..., e123eebar.
// The null vectors inf = ebar - e and o = (ebar + e)/2 are values, not blades.
class Multivector {
 public:
  static constexpr int kSize = 32;
  static constexpr int kMaxGrade = 5;

  constexpr Multivector() = default;

  static Multivector scalar(double s);
  // Unit blade with the given basis mask.
  static Multivector blade(std::uint8_t mask, double coeff = 1.0);
  // Grade-1 element sum c_k * basis_k over (e1, e2, e3, e, ebar).
  static Multivector vector(double e1, double e2, double e3, double e = 0.0, double ebar = 0.0);

  static Multivector e1() { return blade(0b00001); }
  static Multivector e2() { return blade(0b00010); }
  static Multivector e3() { return blade(0b00100); }
  static Multivector e() { return blade(0b01000); }
  static Multivector ebar() { return blade(0b10000); }
  // inf = ebar - e, point at infinity.
  static Multivector infinity() { return vector(0, 0, 0, -1.0, 1.0); }
  // o = (ebar + e)/2, point at the origin.
  static Multivector origin() { return vector(0, 0, 0, 0.5, 0.5); }
  // I = e1 e2 e3 e ebar.
  static Multivector pseudoscalar() { return blade(0b11111); }

  // Coefficient by canonical index.
  double operator[](int index) const { return coeffs_[index]; }
  double& operator[](int index) { return coeffs_[index]; }
  // Coefficient by blade mask.
  double coeff(std::uint8_t mask) const;
  void set_coeff(std::uint8_t mask, double value);

  const std::array<double, kSize>& coeffs() const { return coeffs_; }

  double scalar_part() const { return coeffs_[0]; }
  double max_abs() const;
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  // Outer product.
  friend Multivector operator^(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::array<double, kSize> coeffs_{};
};

// Blade bookkeeping for the canonical ordering.
std::uint8_t blade_mask(int index);
int blade_index(std::uint8_t mask);
int blade_grade(int index);
// Name over the orthonormal basis, e.g. "e12", "e1e", "e3ebar", "1".
std::string blade_name(int index);

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector outer_product(const Multivector& a, const Multivector& b);
// <a b>_0
double scalar_product(const Multivector& a, const Multivector& b);
Multivector reverse(const Multivector& a);
// Grade-k part; throws std::out_of_range unless 0 <= k <= 5.
Multivector grade_project(const Multivector& a, int k);
// a I^-1 with I = e1 e2 e3 e ebar.
Multivector dual(const Multivector& a);

// True when v * reverse(v) is a nonzero scalar up to `tol` (relative to its size).
bool is_versor(const Multivector& v, double tol = 1e-10);
// reverse(v) / <v reverse(v)>_0. Throws NonInvertibleError when that scalar is below 1e-12.
Multivector versor_inverse(const Multivector& v);
// V A V^-1.
Multivector versor_apply(const Multivector& v, const Multivector& a);
// Closed-form exp(B) for a bivector whose square is a scalar (within 1e-10).
// Throws std::invalid_argument for other inputs.
Multivector bivector_exp(const Multivector& bivector);

// Coefficients re-expressed over the null basis: each of the 32 slots is
// addressed by (euclidean_mask | null_part << 3), where the Euclidean mask
// covers e1,e2,e3 and null_part is 0 (none), 1 (o), 2 (inf) or 3 (o^inf),
// always wedged to the right of the Euclidean factor.
std::array<double, 32> null_basis_coefficients(const Multivector& a);
Multivector from_null_basis(const std::array<double, 32>& coeffs);
std::string null_blade_name(int slot);

// Debug form in the null basis, e.g. "1.5 e12 - 0.5 e1∞".
std::string to_string(const Multivector& a, double tol = 1e-14);

}  // namespace cgadg
