#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cgadg/bench.hpp"
#include "cgadg/conformal.hpp"
#include "support.hpp"

using namespace cgadg;
using cgadg::testing::max_diff;
using cgadg::testing::random_vec3;

namespace {

Motor random_motor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return Motor::translator(random_vec3(rng, 2.0)) * Motor::rotor(random_vec3(rng, 1.0).normalized(), angle(rng));
}

}  // namespace

TEST_CASE("motor building blocks") {
  const Vec3 v{0.3, -1.2, 2.0};
  const Motor t = Motor::from_multivector(make_translator(v, 2.5));
  const Motor expected = Motor::translator(v.normalized() * 2.5);
  for (int k = 0; k < 8; ++k) CHECK(t.c[static_cast<std::size_t>(k)] == doctest::Approx(expected.c[static_cast<std::size_t>(k)]));
  CHECK(max_coord_diff(t.apply({1, 1, 1}), Vec3{1, 1, 1} + v.normalized() * 2.5) <= 1e-12);
  CHECK(max_coord_diff(Motor::identity().apply({4, 5, 6}), {4, 5, 6}) <= 1e-12);

  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    const Vec3 axis = random_vec3(rng, 1.0).normalized();
    const double phi = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
    const Vec3 p = random_vec3(rng, 3.0);
    CHECK(max_coord_diff(Motor::rotor(axis, phi).apply(p), Mat4::rotation(axis, phi).apply(p)) <= 1e-12);
  }
  CHECK_THROWS_AS(Motor::from_multivector(Multivector::e1()), std::invalid_argument);
}

TEST_CASE("sparse motor product equals the full product") {
  std::mt19937_64 rng(62);
  for (int k = 0; k < 200; ++k) {
    const Motor a = random_motor(rng);
    const Motor b = random_motor(rng);
    CHECK(max_diff((a * b).to_multivector(), a.to_multivector() * b.to_multivector()) <= 1e-14);
  }
}

TEST_CASE("placement motor in sparse form") {
  std::mt19937_64 rng(63);
  for (int k = 0; k < 100; ++k) {
    const PlacementInput in = random_placement_input(rng);
    const auto step = placement_step(embed_point(in.prev3), embed_point(in.prev2), embed_point(in.prev1), in.theta,
                                     in.omega, in.d);
    const Motor m = Motor::from_multivector(step.motor);
    CHECK(max_coord_diff(m.apply(in.prev1), step.placed.euclidean()) <= 1e-10);
  }
}

TEST_CASE("random placement inputs") {
  std::mt19937_64 a(5), b(5);
  for (int k = 0; k < 50; ++k) {
    const PlacementInput x = random_placement_input(a);
    const PlacementInput y = random_placement_input(b);
    CHECK(x.prev3 == y.prev3);
    CHECK(x.omega == y.omega);
    CHECK(x.theta > 0.2);
    CHECK(x.theta < std::numbers::pi - 0.2);
    CHECK(x.omega > -std::numbers::pi);
    CHECK(x.omega <= std::numbers::pi);
    CHECK(x.d >= 0.5);
    CHECK(x.d <= 2.0);
  }
}

TEST_CASE("benchmark reports") {
  const BenchReport c = bench_compose(2000, 1);
  CHECK(c.op_name == "compose");
  CHECK(c.iterations == 2000);
  CHECK(c.cross_check_passed);
  CHECK(c.max_deviation <= 1e-8);
  CHECK(c.storage_coefficients_versor == 8);
  CHECK(c.storage_coefficients_matrix == 12);
  CHECK(c.versor.total_seconds >= 0.0);
  CHECK(c.matrix.seconds_per_op >= 0.0);

  const BenchReport p = bench_placement(300, 2);
  CHECK(p.op_name == "placement");
  CHECK(p.cross_check_passed);
  CHECK(p.versor.total_seconds > 0.0);
  CHECK(p.matrix.total_seconds > 0.0);
  CHECK(p.versor.seconds_per_op == doctest::Approx(p.versor.total_seconds / 300));

  CHECK_THROWS_AS(bench_compose(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bench_placement(-3, 1), std::invalid_argument);

  const std::string text = format_report_text({c, p});
  CHECK(text.find("compose") != std::string::npos);
  CHECK(text.find("placement") != std::string::npos);
  const std::string kv = format_report_kv({c, p});
  CHECK(kv.find("op=compose iterations=2000 ") != std::string::npos);
  CHECK(kv.find("storage_coefficients_versor=8 storage_coefficients_matrix=12 cross_check=pass") != std::string::npos);
  CHECK(std::count(kv.begin(), kv.end(), '\n') == 2);
}
