#include "cgadg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "cgadg/conformal.hpp"
#include "cgadg/errors.hpp"

namespace cgadg {
namespace {

enum Slot { S, E12, E13, E23, E1I, E2I, E3I, E123I };

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    v = {g(rng), g(rng), g(rng)};
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Vec3 random_point(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  return {u(rng), u(rng), u(rng)};
}

struct RigidMotion {
  Motor motor;
  Mat4 matrix;
};

RigidMotion random_motion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const Vec3 axis = random_unit(rng);
  const double phi = angle(rng);
  const Vec3 t = random_point(rng, 1.0);
  return {Motor::translator(t) * Motor::rotor(axis, phi), Mat4::translation(t) * Mat4::rotation(axis, phi)};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Timing timing(double total, long count) { return {total, total / static_cast<double>(count)}; }

}  // namespace

Motor Motor::translator(const Vec3& t) {
  Motor m;
  m.c = {1.0, 0.0, 0.0, 0.0, -0.5 * t.x, -0.5 * t.y, -0.5 * t.z, 0.0};
  return m;
}

Motor Motor::rotor(const Vec3& axis, double angle) {
  // exp(-(angle/2) axis e123): axis e123 = x e23 - y e13 + z e12.
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Motor m;
  m.c = {c, -s * axis.z, s * axis.y, -s * axis.x, 0.0, 0.0, 0.0, 0.0};
  return m;
}

Motor Motor::from_multivector(const Multivector& mv, double tol) {
  if (off_motor_support(mv) > tol * std::max(1.0, mv.max_abs())) {
    throw std::invalid_argument("multivector has components outside the motor support");
  }
  const auto coeffs = null_basis_coefficients(mv);
  Motor m;
  for (std::size_t k = 0; k < kMotorSupport.size(); ++k) m.c[k] = coeffs[static_cast<std::size_t>(kMotorSupport[k])];
  return m;
}

Multivector Motor::to_multivector() const {
  std::array<double, 32> coeffs{};
  for (std::size_t k = 0; k < kMotorSupport.size(); ++k) coeffs[static_cast<std::size_t>(kMotorSupport[k])] = c[k];
  return from_null_basis(coeffs);
}

Vec3 Motor::apply(const Vec3& p) const {
  return extract_point(versor_apply(to_multivector(), embed_point(p).value()));
}

// M = R + Q inf with R even and Q odd in Cl(3); M1 M2 = R1 R2 + (R1 Q2 + Q1 R2) inf.
Motor operator*(const Motor& x, const Motor& y) {
  const auto& a = x.c;
  const auto& b = y.c;
  Motor r;
  r.c[S] = a[S] * b[S] - a[E12] * b[E12] - a[E13] * b[E13] - a[E23] * b[E23];
  r.c[E12] = a[S] * b[E12] + a[E12] * b[S] - a[E13] * b[E23] + a[E23] * b[E13];
  r.c[E13] = a[S] * b[E13] + a[E12] * b[E23] + a[E13] * b[S] - a[E23] * b[E12];
  r.c[E23] = a[S] * b[E23] - a[E12] * b[E13] + a[E13] * b[E12] + a[E23] * b[S];
  r.c[E1I] = a[S] * b[E1I] + a[E12] * b[E2I] + a[E13] * b[E3I] - a[E23] * b[E123I] + a[E1I] * b[S] -
             a[E2I] * b[E12] - a[E3I] * b[E13] - a[E123I] * b[E23];
  r.c[E2I] = a[S] * b[E2I] - a[E12] * b[E1I] + a[E13] * b[E123I] + a[E23] * b[E3I] + a[E1I] * b[E12] +
             a[E2I] * b[S] - a[E3I] * b[E23] + a[E123I] * b[E13];
  r.c[E3I] = a[S] * b[E3I] - a[E12] * b[E123I] - a[E13] * b[E1I] - a[E23] * b[E2I] + a[E1I] * b[E13] +
             a[E2I] * b[E23] + a[E3I] * b[S] - a[E123I] * b[E12];
  r.c[E123I] = a[S] * b[E123I] + a[E12] * b[E3I] - a[E13] * b[E2I] + a[E23] * b[E1I] + a[E1I] * b[E23] -
               a[E2I] * b[E13] + a[E3I] * b[E12] + a[E123I] * b[S];
  return r;
}

PlacementInput random_placement_input(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.2, std::numbers::pi - 0.2);
  std::uniform_real_distribution<double> omega(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> length(0.5, 2.0);
  PlacementInput in;
  for (;;) {
    in.prev3 = random_point(rng, 2.0);
    in.prev2 = random_point(rng, 2.0);
    in.prev1 = random_point(rng, 2.0);
    const Vec3 a = in.prev3 - in.prev2;
    const Vec3 b = in.prev1 - in.prev2;
    // Keep bond lengths and the angle at prev2 away from degeneracy.
    if (a.norm() > 0.3 && b.norm() > 0.3 && a.cross(b).norm() > 0.1 * a.norm() * b.norm()) break;
  }
  in.theta = theta(rng);
  in.omega = -omega(rng);  // (-pi, pi]
  in.d = length(rng);
  return in;
}

BenchReport bench_compose(long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("bench_compose: count must be positive");
  std::mt19937_64 rng(seed);
  constexpr std::size_t kPool = 64;
  std::vector<RigidMotion> pool;
  for (std::size_t k = 0; k < kPool; ++k) pool.push_back(random_motion(rng));

  BenchReport report;
  report.op_name = "compose";
  report.iterations = count;

  // Cross-check on the composite of the whole pool.
  Motor motor_chain;
  Mat4 matrix_chain = Mat4::identity();
  for (const auto& m : pool) {
    motor_chain = motor_chain * m.motor;
    matrix_chain = matrix_chain * m.matrix;
  }
  for (int k = 0; k < 10; ++k) {
    const Vec3 p = random_point(rng, 5.0);
    report.max_deviation = std::max(report.max_deviation, max_coord_diff(motor_chain.apply(p), matrix_chain.apply(p)));
  }
  report.cross_check_passed = report.max_deviation <= 1e-8;
  if (!report.cross_check_passed) {
    throw Error("bench_compose: motor and matrix composites disagree by " + std::to_string(report.max_deviation));
  }

  volatile double sink = 0.0;
  auto start = Clock::now();
  for (long k = 0; k < count; ++k) {
    const Motor m = pool[static_cast<std::size_t>(k) % kPool].motor * pool[static_cast<std::size_t>(k + 1) % kPool].motor;
    sink = sink + m.c[0];
  }
  report.versor = timing(seconds_since(start), count);

  start = Clock::now();
  for (long k = 0; k < count; ++k) {
    const Mat4 m = pool[static_cast<std::size_t>(k) % kPool].matrix * pool[static_cast<std::size_t>(k + 1) % kPool].matrix;
    sink = sink + m.m[0];
  }
  report.matrix = timing(seconds_since(start), count);
  return report;
}

BenchReport bench_placement(long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("bench_placement: count must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t pool_size = static_cast<std::size_t>(std::min<long>(count, 1024));
  std::vector<PlacementInput> inputs;
  for (std::size_t k = 0; k < pool_size; ++k) inputs.push_back(random_placement_input(rng));
  std::vector<std::array<ConformalPoint, 3>> embedded;
  for (const auto& in : inputs) embedded.push_back({embed_point(in.prev3), embed_point(in.prev2), embed_point(in.prev1)});

  BenchReport report;
  report.op_name = "placement";
  report.iterations = count;

  for (std::size_t k = 0; k < pool_size; ++k) {
    const auto& in = inputs[k];
    const auto& e = embedded[k];
    const auto [plus, minus] = compute_next_points(e[0], e[1], e[2], in.theta, in.omega, in.d);
    const auto [mplus, mminus] = matrix_place_next(in.prev3, in.prev2, in.prev1, in.theta, in.omega, in.d);
    report.max_deviation =
        std::max(report.max_deviation, unordered_pair_diff(plus.euclidean(), minus.euclidean(), mplus, mminus));
  }
  report.cross_check_passed = report.max_deviation <= 1e-8;
  if (!report.cross_check_passed) {
    throw Error("bench_placement: conformal and matrix placements disagree by " +
                std::to_string(report.max_deviation));
  }

  volatile double sink = 0.0;
  auto start = Clock::now();
  for (long k = 0; k < count; ++k) {
    const std::size_t j = static_cast<std::size_t>(k) % pool_size;
    const auto& in = inputs[j];
    const auto& e = embedded[j];
    const auto pts = compute_next_points(e[0], e[1], e[2], in.theta, in.omega, in.d);
    sink = sink + pts.first.value()[1];
  }
  report.versor = timing(seconds_since(start), count);

  start = Clock::now();
  for (long k = 0; k < count; ++k) {
    const auto& in = inputs[static_cast<std::size_t>(k) % pool_size];
    const auto pts = matrix_place_next(in.prev3, in.prev2, in.prev1, in.theta, in.omega, in.d);
    sink = sink + pts.first.x;
  }
  report.matrix = timing(seconds_since(start), count);
  return report;
}

std::string format_report_text(const std::vector<BenchReport>& reports) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %12s %14s %14s %8s %8s %7s\n", "op", "iterations", "versor ns/op",
                "matrix ns/op", "versor#", "matrix#", "check");
  out += buf;
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%-10s %12ld %14.1f %14.1f %8d %8d %7s\n", r.op_name.c_str(), r.iterations,
                  r.versor.seconds_per_op * 1e9, r.matrix.seconds_per_op * 1e9, r.storage_coefficients_versor,
                  r.storage_coefficients_matrix, r.cross_check_passed ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

std::string format_report_kv(const std::vector<BenchReport>& reports) {
  std::string out;
  char buf[512];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf,
                  "op=%s iterations=%ld versor_total_s=%.6g versor_per_op_s=%.6g matrix_total_s=%.6g "
                  "matrix_per_op_s=%.6g storage_coefficients_versor=%d storage_coefficients_matrix=%d "
                  "cross_check=%s max_deviation=%.3g\n",
                  r.op_name.c_str(), r.iterations, r.versor.total_seconds, r.versor.seconds_per_op,
                  r.matrix.total_seconds, r.matrix.seconds_per_op, r.storage_coefficients_versor,
                  r.storage_coefficients_matrix, r.cross_check_passed ? "pass" : "fail", r.max_deviation);
    out += buf;
  }
  return out;
}

}  // namespace cgadg
