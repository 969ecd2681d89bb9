#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cgadg/errors.hpp"
#include "cgadg/instance.hpp"
#include "cgadg/io.hpp"
#include "cgadg/oracle.hpp"

using namespace cgadg;

namespace {

constexpr double kPi = std::numbers::pi;

// Consecutive 4-clique built from explicit coordinates.
Instance clique_from(const Realization& r) {
  std::vector<Edge> edges;
  for (int u = 1; u <= r.size(); ++u)
    for (int v = u + 1; v <= std::min(r.size(), u + 3); ++v) edges.push_back({u, v, distance(r.at(u), r.at(v))});
  return Instance(r.size(), edges);
}

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("instance construction") {
  const Instance inst(4, {{3, 1, 2.0}, {1, 2, 1.0}, {2, 3, 1.5}});
  REQUIRE(inst.edge_count() == 3);
  CHECK(inst.edges()[0] == Edge{1, 2, 1.0});
  CHECK(inst.edges()[1] == Edge{1, 3, 2.0});
  CHECK(inst.edges()[2] == Edge{2, 3, 1.5});
  CHECK(inst.distance(3, 1) == 2.0);
  CHECK(inst.distance(1, 3) == 2.0);
  CHECK(!inst.distance(1, 4));
  const auto lower = inst.lower_neighbors(3);
  REQUIRE(lower.size() == 2);
  CHECK(lower[0].vertex == 1);
  CHECK(lower[1].vertex == 2);
  CHECK(inst.lower_neighbors(1).empty());

  CHECK_THROWS_AS(Instance(3, {{1, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(3, {{1, 4, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(3, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(3, {{1, 2, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(3, {{1, 2, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(3, {{1, 2, 1.0}, {2, 1, 1.0}}), std::invalid_argument);
}

TEST_CASE("validation") {
  const Instance missing(4, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {1, 3, 1.5}, {2, 4, 1.5}});
  const auto report = validate_instance(missing);
  CHECK(!report.is_dmdgp);
  CHECK(report.missing_clique_edges == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(report.triangle_violations.empty());
  CHECK(report.summary().find("(1,4)") != std::string::npos);

  const Instance flat(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 2.0}});
  const auto flat_report = validate_instance(flat);
  CHECK(!flat_report.is_dmdgp);
  CHECK(flat_report.triangle_violations == std::vector<int>{1});
  CHECK(flat_report.summary().find("triangle") != std::string::npos);

  const auto ok = validate_instance(generate_instance(15, 3, 0.1).instance);
  CHECK(ok.is_dmdgp);
  CHECK(ok.missing_clique_edges.empty());
  CHECK(ok.summary() == "valid DMDGP instance");
}

TEST_CASE("internal coordinates") {
  SUBCASE("bond angles") {
    const Instance right(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, std::sqrt(2.0)}});
    CHECK(internal_coordinates(right).bond_angle(3) == doctest::Approx(kPi / 2).epsilon(1e-14));
    const Instance equilateral(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    CHECK(internal_coordinates(equilateral).bond_angle(3) == doctest::Approx(kPi / 3).epsilon(1e-14));
  }
  SUBCASE("dihedral from a known quadruplet") {
    for (double omega : {1.0, -1.0, 0.2, 2.9}) {
      const Vec3 a{0, 0, 0}, b{-1.5, 0, 0}, c{-2.1, 1.3, 0};
      const Vec3 d = matrix_place_next(a, b, c, 1.8, omega, 1.4).first;
      const auto coords = internal_coordinates(clique_from(Realization({a, b, c, d})));
      CHECK(coords.dihedral_cos(4) == doctest::Approx(std::cos(omega)).epsilon(1e-9));
      CHECK(coords.bond_length(4) == doctest::Approx(1.4).epsilon(1e-12));
      CHECK(coords.bond_angle(4) == doctest::Approx(1.8).epsilon(1e-9));
    }
  }
  SUBCASE("generated chain") {
    const auto g = generate_instance(30, 77, 0.0);
    const auto coords = internal_coordinates(g.instance);
    for (int i = 2; i <= 30; ++i) CHECK(coords.bond_length(i) == doctest::Approx(kGeneratedBondLength).epsilon(1e-9));
    for (int i = 3; i <= 30; ++i) CHECK(coords.bond_angle(i) == doctest::Approx(kGeneratedBondAngle).epsilon(1e-9));
    for (int i = 4; i <= 30; ++i) {
      const auto& t = g.truth;
      const double omega = dihedral_angle(t.at(i - 3), t.at(i - 2), t.at(i - 1), t.at(i));
      CHECK(std::acos(std::clamp(coords.dihedral_cos(i), -1.0, 1.0)) == doctest::Approx(std::fabs(omega)).epsilon(1e-9));
    }
  }
  SUBCASE("errors") {
    const Instance missing(4, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {1, 3, 1.5}, {2, 4, 1.5}});
    CHECK_THROWS_AS(internal_coordinates(missing), std::invalid_argument);
    // d(1,4) longer than the path 1-2-3-4.
    const Instance stretched(4, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {1, 3, 1.5}, {2, 4, 1.5}, {1, 4, 3.5}});
    CHECK_THROWS_AS(internal_coordinates(stretched), InfeasibleInstanceError);
    const Instance bad_triangle(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 2.5}});
    CHECK_THROWS_AS(internal_coordinates(bad_triangle), InfeasibleInstanceError);
  }
}

TEST_CASE("instance generator") {
  const auto a = generate_instance(10, 7, 0.0);
  const auto b = generate_instance(10, 7, 0.0);
  CHECK(a.instance.edges() == b.instance.edges());
  CHECK(max_coord_diff(a.truth, b.truth) == 0.0);
  CHECK(a.instance.edge_count() == 24);
  CHECK(validate_instance(a.instance).is_dmdgp);
  CHECK(verify_realization(a.instance, a.truth).max_violation <= 1e-12);

  const auto c = generate_instance(10, 8, 0.0);
  CHECK(max_coord_diff(a.truth, c.truth) > 0.0);

  const auto full = generate_instance(9, 1, 1.0);
  CHECK(full.instance.edge_count() == 36);
  const auto half = generate_instance(20, 1, 0.5);
  // 54 clique edges, 136 others.
  CHECK(half.instance.edge_count() == 54 + 68);
  CHECK(generate_instance(20, 1, 0.5).instance.edges() == half.instance.edges());

  CHECK(a.truth.at(1) == Vec3{});
  CHECK_THROWS_AS(generate_instance(3, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(10, 1, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(10, 1, 1.1), std::invalid_argument);

  // Truth survives the text format.
  const auto big = generate_instance(40, 9, 0.2);
  const Realization reread = parse_realization(format_realization(big.truth));
  CHECK(verify_realization(big.instance, reread).max_violation <= 1e-12);
  const Instance reparsed = parse_instance(format_instance(big.instance));
  CHECK(reparsed.edges() == big.instance.edges());
}

TEST_CASE("coordinate ingestion") {
  const std::string text =
      "# four points and a far one\n"
      "1 0 0 0\n2 1.5 0 0\n3 2 1.4 0\n4 3.2 1.6 1.1\n5 30 0 0\n";
  const Instance only_cliques = ingest_coordinates(text, 0.0);
  CHECK(only_cliques.edge_count() == 4 + 3 + 2);
  CHECK(validate_instance(only_cliques).is_dmdgp);
  const Instance complete = ingest_coordinates(text, std::numeric_limits<double>::infinity());
  CHECK(complete.edge_count() == 10);
  const Instance dflt = ingest_coordinates(text);
  CHECK(dflt.edge_count() == 9);
  CHECK(*dflt.distance(1, 2) == 1.5);

  CHECK_THROWS_AS(ingest_coordinates("1 0 0 0\n2 1 0 0\n3 1 1 0\n"), Error);
  CHECK_THROWS_AS(ingest_coordinates("1 0 0 0\n2 1 0 0\n3 1 1 0\n5 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(ingest_coordinates("1 0 0\n"), ParseError);
}

TEST_CASE("instance text format") {
  const std::string text =
      "# demo\n"
      "\n"
      "4 6   # header\n"
      "1 2 1.5\n"
      "1 3 2.5\n"
      "1 4 3.0\n"
      "2 3 1.5\n"
      "2 4 2.5\n"
      "3 4 1.5\n";
  const Instance inst = parse_instance(text);
  CHECK(inst.n() == 4);
  CHECK(inst.edge_count() == 6);
  CHECK(*inst.distance(1, 4) == 3.0);
  CHECK(format_instance(inst).rfind("4 6\n1 2 1.5\n", 0) == 0);
  CHECK(parse_instance(format_instance(inst)).edges() == inst.edges());

  CHECK(parse_error_line("") == 0);
  CHECK(parse_error_line("4\n") == 1);
  CHECK(parse_error_line("# c\n4 1\n1 2 x\n") == 3);
  CHECK(parse_error_line("4 1\n2 1 1.0\n") == 2);
  CHECK(parse_error_line("4 1\n1 5 1.0\n") == 2);
  CHECK(parse_error_line("4 1\n1 2 -1.0\n") == 2);
  CHECK(parse_error_line("4 1\n1 2 1.0 7\n") == 2);
  CHECK(parse_error_line("4 2\n1 2 1.0\n") == 2);
  CHECK(parse_error_line("4 1\n1 2 1.0\n2 3 1.0\n") == 3);
  CHECK(parse_error_line("4 2\n1 2 1.0\n1 2 2.0\n") == 3);
  CHECK(parse_error_line("0 0\n") == 1);
  try {
    parse_instance("3 1\n1 2 abc\n");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
}

TEST_CASE("realization text format") {
  const Realization r({{0, 0, 0}, {-1.526, 0, 0}, {1.0 / 3.0, 2.0 / 3.0, -123.456789012345}});
  const std::string text = format_realization(r, "path +-\nsecond");
  CHECK(text.rfind("# path +-\n# second\n1 0 0 0\n", 0) == 0);
  const Realization back = parse_realization(text);
  REQUIRE(back.size() == 3);
  for (int v = 1; v <= 3; ++v) {
    const Vec3 &x = r.at(v), &y = back.at(v);
    for (auto [p, q] : {std::pair{x.x, y.x}, std::pair{x.y, y.y}, std::pair{x.z, y.z}})
      CHECK(std::fabs(p - q) <= 1e-10 * std::max(1.0, std::fabs(p)));
  }
  // Lines may come in any order.
  const Realization shuffled = parse_realization("2 1 1 1\n1 0 0 0\n");
  CHECK(shuffled.at(2) == Vec3{1, 1, 1});
  CHECK_THROWS_AS(parse_realization("1 0 0 0\n1 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_realization("1 0 0 0\n3 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_realization("1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_realization("0 0 0 0\n"), ParseError);
  CHECK(parse_realization("").size() == 0);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.txt"), Error);
}

TEST_CASE("realization helpers") {
  const Realization a({{1, 2, 3}, {4, 5, 6}});
  const Realization m = mirror_z(a);
  CHECK(m.at(2) == Vec3{4, 5, -6});
  CHECK(max_coord_diff(a, m) == 12.0);
  CHECK(std::isinf(max_coord_diff(a, Realization({{1, 2, 3}}))));
}
