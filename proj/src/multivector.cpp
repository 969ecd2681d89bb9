#include "cgadg/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "cgadg/errors.hpp"

namespace cgadg {
namespace {

constexpr int kBasis = 5;
constexpr std::array<int, kBasis> kMetric = {1, 1, 1, 1, -1};

struct ProductEntry {
  std::int8_t sign;  // 0 when the product vanishes under the outer product
  std::uint8_t index;
};

struct Tables {
  std::array<std::uint8_t, 32> mask_of{};
  std::array<std::uint8_t, 32> index_of{};
  std::array<std::uint8_t, 32> grade_of{};
  std::array<std::array<ProductEntry, 32>, 32> geometric{};
  std::array<std::array<ProductEntry, 32>, 32> outer{};
  std::array<double, 32> reverse_sign{};
};

// Sign from reordering the basis vectors of blade a followed by blade b into
// canonical order, times the metric contribution of shared vectors.
int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  const unsigned common = a & b;
  for (int i = 0; i < kBasis; ++i) {
    if ((common >> i) & 1u) sign *= kMetric[i];
  }
  return sign;
}

Tables build_tables() {
  Tables t;
  std::vector<unsigned> order;
  for (int grade = 0; grade <= kBasis; ++grade) {
    std::vector<unsigned> same_grade;
    for (unsigned m = 0; m < 32; ++m) {
      if (std::popcount(m) == grade) same_grade.push_back(m);
    }
    // Lexicographic on the sorted list of basis indices.
    std::sort(same_grade.begin(), same_grade.end(), [](unsigned a, unsigned b) {
      for (int i = 0; i < kBasis; ++i) {
        const bool in_a = (a >> i) & 1u;
        const bool in_b = (b >> i) & 1u;
        if (in_a != in_b) return in_a;
      }
      return false;
    });
    order.insert(order.end(), same_grade.begin(), same_grade.end());
  }
  for (int i = 0; i < 32; ++i) {
    t.mask_of[i] = static_cast<std::uint8_t>(order[i]);
    t.index_of[order[i]] = static_cast<std::uint8_t>(i);
    t.grade_of[i] = static_cast<std::uint8_t>(std::popcount(order[i]));
    const int k = t.grade_of[i];
    t.reverse_sign[i] = ((k * (k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  }
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const unsigned a = t.mask_of[i];
      const unsigned b = t.mask_of[j];
      const int sign = blade_product_sign(a, b);
      const auto target = t.index_of[a ^ b];
      t.geometric[i][j] = {static_cast<std::int8_t>(sign), target};
      t.outer[i][j] = {static_cast<std::int8_t>((a & b) ? 0 : sign), target};
    }
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

Multivector product_with(const Multivector& a, const Multivector& b,
                         const std::array<std::array<ProductEntry, 32>, 32>& table) {
  Multivector c;
  for (int i = 0; i < 32; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const auto& row = table[i];
    for (int j = 0; j < 32; ++j) {
      const double bj = b[j];
      if (bj == 0.0 || row[j].sign == 0) continue;
      c[row[j].index] += row[j].sign * ai * bj;
    }
  }
  return c;
}

}  // namespace

std::uint8_t blade_mask(int index) { return tables().mask_of.at(index); }
int blade_index(std::uint8_t mask) { return tables().index_of.at(mask & 31u); }
int blade_grade(int index) { return tables().grade_of.at(index); }

std::string blade_name(int index) {
  const unsigned mask = blade_mask(index);
  std::string s;
  if (mask & 7u) {
    s = "e";
    for (int i = 0; i < 3; ++i) {
      if ((mask >> i) & 1u) s += static_cast<char>('1' + i);
    }
  }
  if (mask & 0b01000u) s += "e";
  if (mask & 0b10000u) s += "ebar";
  return s.empty() ? "1" : s;
}

Multivector Multivector::scalar(double s) {
  Multivector m;
  m.coeffs_[0] = s;
  return m;
}

Multivector Multivector::blade(std::uint8_t mask, double coeff) {
  Multivector m;
  m.coeffs_[blade_index(mask)] = coeff;
  return m;
}

Multivector Multivector::vector(double c1, double c2, double c3, double ce, double cebar) {
  Multivector m;
  m.coeffs_[1] = c1;
  m.coeffs_[2] = c2;
  m.coeffs_[3] = c3;
  m.coeffs_[4] = ce;
  m.coeffs_[5] = cebar;
  return m;
}

double Multivector::coeff(std::uint8_t mask) const { return coeffs_[blade_index(mask)]; }
void Multivector::set_coeff(std::uint8_t mask, double value) { coeffs_[blade_index(mask)] = value; }

double Multivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::fabs(c));
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int i = 0; i < kSize; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int i = 0; i < kSize; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& c : coeffs_) c /= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return product_with(a, b, tables().geometric);
}

Multivector operator^(const Multivector& a, const Multivector& b) {
  return product_with(a, b, tables().outer);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }
Multivector outer_product(const Multivector& a, const Multivector& b) { return a ^ b; }

double scalar_product(const Multivector& a, const Multivector& b) {
  const auto& t = tables();
  double s = 0.0;
  for (int i = 0; i < 32; ++i) s += t.geometric[i][i].sign * a[i] * b[i];
  return s;
}

Multivector reverse(const Multivector& a) {
  const auto& t = tables();
  Multivector r;
  for (int i = 0; i < 32; ++i) r[i] = t.reverse_sign[i] * a[i];
  return r;
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > Multivector::kMaxGrade) {
    throw std::out_of_range("grade_project: grade " + std::to_string(k) + " outside 0..5");
  }
  const auto& t = tables();
  Multivector r;
  for (int i = 0; i < 32; ++i) {
    if (t.grade_of[i] == k) r[i] = a[i];
  }
  return r;
}

Multivector dual(const Multivector& a) {
  // I^2 = -1 in Cl(4,1), so I^-1 = -I.
  static const Multivector inverse_pseudoscalar = -Multivector::pseudoscalar();
  return a * inverse_pseudoscalar;
}

bool is_versor(const Multivector& v, double tol) {
  const Multivector n = v * reverse(v);
  const double s = n.scalar_part();
  const double scale = std::max(1.0, v.max_abs() * v.max_abs());
  if (std::fabs(s) <= 1e-12 * scale) return false;
  Multivector rest = n;
  rest[0] = 0.0;
  return rest.max_abs() <= tol * scale;
}

Multivector versor_inverse(const Multivector& v) {
  const Multivector r = reverse(v);
  const double norm = scalar_product(v, r);
  if (std::fabs(norm) < 1e-12) {
    throw NonInvertibleError("versor_inverse: v*reverse(v) = " + std::to_string(norm));
  }
  return r / norm;
}

Multivector versor_apply(const Multivector& v, const Multivector& a) {
  return v * a * versor_inverse(v);
}

Multivector bivector_exp(const Multivector& bivector) {
  const Multivector sq = bivector * bivector;
  const double scale = std::max(1.0, bivector.max_abs() * bivector.max_abs());
  Multivector rest = sq;
  rest[0] = 0.0;
  if (rest.max_abs() > 1e-10 * scale) {
    throw std::invalid_argument("bivector_exp: square of the bivector is not a scalar");
  }
  Multivector other_grades = bivector - grade_project(bivector, 2);
  if (other_grades.max_abs() > 1e-12 * std::max(1.0, bivector.max_abs())) {
    throw std::invalid_argument("bivector_exp: argument is not a bivector");
  }
  const double s2 = sq.scalar_part();
  if (std::fabs(s2) <= 1e-14 * scale) return Multivector::scalar(1.0) + bivector;
  if (s2 < 0.0) {
    const double s = std::sqrt(-s2);
    return Multivector::scalar(std::cos(s)) + bivector * (std::sin(s) / s);
  }
  const double s = std::sqrt(s2);
  return Multivector::scalar(std::cosh(s)) + bivector * (std::sinh(s) / s);
}

std::array<double, 32> null_basis_coefficients(const Multivector& a) {
  constexpr unsigned e_bit = 0b01000;
  constexpr unsigned ebar_bit = 0b10000;
  std::array<double, 32> out{};
  for (unsigned euclid = 0; euclid < 8; ++euclid) {
    const double plain = a.coeff(static_cast<std::uint8_t>(euclid));
    const double with_e = a.coeff(static_cast<std::uint8_t>(euclid | e_bit));
    const double with_ebar = a.coeff(static_cast<std::uint8_t>(euclid | ebar_bit));
    const double with_both = a.coeff(static_cast<std::uint8_t>(euclid | e_bit | ebar_bit));
    // e = o - inf/2, ebar = o + inf/2, e^ebar = o^inf.
    out[euclid] = plain;
    out[euclid | (1u << 3)] = with_e + with_ebar;
    out[euclid | (2u << 3)] = 0.5 * (with_ebar - with_e);
    out[euclid | (3u << 3)] = with_both;
  }
  return out;
}

Multivector from_null_basis(const std::array<double, 32>& coeffs) {
  constexpr unsigned e_bit = 0b01000;
  constexpr unsigned ebar_bit = 0b10000;
  Multivector m;
  for (unsigned euclid = 0; euclid < 8; ++euclid) {
    const double o_part = coeffs[euclid | (1u << 3)];
    const double inf_part = coeffs[euclid | (2u << 3)];
    m.set_coeff(static_cast<std::uint8_t>(euclid), coeffs[euclid]);
    m.set_coeff(static_cast<std::uint8_t>(euclid | e_bit), 0.5 * o_part - inf_part);
    m.set_coeff(static_cast<std::uint8_t>(euclid | ebar_bit), 0.5 * o_part + inf_part);
    m.set_coeff(static_cast<std::uint8_t>(euclid | e_bit | ebar_bit), coeffs[euclid | (3u << 3)]);
  }
  return m;
}

std::string null_blade_name(int slot) {
  const unsigned euclid = slot & 7u;
  const unsigned null_part = (slot >> 3) & 3u;
  std::string s;
  if (euclid != 0) {
    s = "e";
    for (int i = 0; i < 3; ++i) {
      if ((euclid >> i) & 1u) s += static_cast<char>('1' + i);
    }
  }
  static constexpr std::array<const char*, 4> suffix = {"", "o", "∞", "o∞"};
  s += suffix[null_part];
  return s.empty() ? "1" : s;
}

std::string to_string(const Multivector& a, double tol) {
  const auto coeffs = null_basis_coefficients(a);
  // Print by grade so the output reads like the usual blade order.
  std::array<int, 32> slots{};
  for (int i = 0; i < 32; ++i) slots[i] = i;
  auto grade_of_slot = [](int slot) {
    const unsigned null_part = (slot >> 3) & 3u;
    return std::popcount(static_cast<unsigned>(slot & 7)) + std::popcount(null_part);
  };
  std::stable_sort(slots.begin(), slots.end(),
                   [&](int x, int y) { return grade_of_slot(x) < grade_of_slot(y); });

  std::string out;
  char buf[64];
  for (int slot : slots) {
    const double c = coeffs[slot];
    if (std::fabs(c) <= tol) continue;
    if (out.empty()) {
      std::snprintf(buf, sizeof buf, "%g", c);
      out += buf;
    } else {
      std::snprintf(buf, sizeof buf, " %c %g", c < 0 ? '-' : '+', std::fabs(c));
      out += buf;
    }
    if (slot != 0) {
      out += ' ';
      out += null_blade_name(slot);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cgadg
