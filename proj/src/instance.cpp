#include "cgadg/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cgadg/errors.hpp"
#include "cgadg/io.hpp"
#include "cgadg/oracle.hpp"

namespace cgadg {

double max_coord_diff(const Realization& a, const Realization& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int v = 1; v <= a.size(); ++v) worst = std::max(worst, max_coord_diff(a.at(v), b.at(v)));
  return worst;
}

Realization mirror_z(const Realization& r) {
  Realization out = r;
  for (int v = 1; v <= out.size(); ++v) out.at(v).z = -out.at(v).z;
  return out;
}

Instance::Instance(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("instance needs at least one vertex");
  lower_.resize(static_cast<std::size_t>(n) + 1);
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw std::invalid_argument("self loop at vertex " + std::to_string(e.u));
    if (!(e.d > 0.0) || !std::isfinite(e.d)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has non-positive distance");
    }
    if (!lookup_.emplace(key(e.u, e.v), e.d).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (const Edge& e : edges_) lower_[static_cast<std::size_t>(e.v)].push_back({e.u, e.d});
}

std::uint64_t Instance::key(int u, int v) const {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::optional<double> Instance::distance(int u, int v) const {
  const auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const LowerNeighbor> Instance::lower_neighbors(int i) const {
  return lower_.at(static_cast<std::size_t>(i));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (is_dmdgp ? "valid DMDGP instance" : "not a DMDGP instance");
  if (!missing_clique_edges.empty()) {
    os << "\nmissing clique edges (" << missing_clique_edges.size() << "):";
    for (const auto& [u, v] : missing_clique_edges) os << " (" << u << "," << v << ")";
  }
  if (!triangle_violations.empty()) {
    os << "\nstrict triangle inequality violated at v =";
    for (int v : triangle_violations) os << ' ' << v;
  }
  return os.str();
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  const int n = inst.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= std::min(n, i + 3); ++j) {
      if (!inst.distance(i, j)) report.missing_clique_edges.emplace_back(i, j);
    }
  }
  for (int v = 1; v + 2 <= n; ++v) {
    const auto a = inst.distance(v, v + 1);
    const auto b = inst.distance(v + 1, v + 2);
    const auto c = inst.distance(v, v + 2);
    // Missing edges are already reported above.
    if (a && b && c && !(*c < *a + *b)) report.triangle_violations.push_back(v);
  }
  report.is_dmdgp = report.missing_clique_edges.empty() && report.triangle_violations.empty();
  return report;
}

InternalCoords::InternalCoords(int n)
    : n_(n),
      bond_lengths_(static_cast<std::size_t>(n) + 1, 0.0),
      bond_angles_(static_cast<std::size_t>(n) + 1, 0.0),
      dihedral_cos_(static_cast<std::size_t>(n) + 1, 0.0) {}

namespace {

double required_distance(const Instance& inst, int u, int v) {
  const auto d = inst.distance(u, v);
  if (!d) {
    throw std::invalid_argument("missing clique edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return *d;
}

// Angle opposite side `opposite` in the triangle with sides a, b.
double angle_from_sides(double a, double b, double opposite, int vertex) {
  double c = (a * a + b * b - opposite * opposite) / (2.0 * a * b);
  if (std::fabs(c) > 1.0 + 1e-12) {
    throw InfeasibleInstanceError("triangle inequality fails at vertex " + std::to_string(vertex));
  }
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double round_to_12_digits(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

InternalCoords internal_coordinates(const Instance& inst) {
  const int n = inst.n();
  InternalCoords ic(n);
  for (int i = 2; i <= n; ++i) ic.set_bond_length(i, required_distance(inst, i - 1, i));
  for (int i = 3; i <= n; ++i) {
    ic.set_bond_angle(i, angle_from_sides(ic.bond_length(i - 1), ic.bond_length(i),
                                          required_distance(inst, i - 2, i), i));
  }
  for (int i = 4; i <= n; ++i) {
    // Embed the 4-clique (i-3, i-2, i-1, i) and measure its dihedral.
    const auto anchors = anchor_first_three(ic.bond_length(i - 2), ic.bond_length(i - 1), ic.bond_angle(i - 1));
    TrilaterationResult tri;
    try {
      tri = trilaterate(anchors[0], anchors[1], anchors[2], required_distance(inst, i - 3, i),
                        required_distance(inst, i - 2, i), ic.bond_length(i));
    } catch (const DegenerateGeometryError&) {
      throw DegenerateGeometryError("vertex " + std::to_string(i) + ": collinear predecessors");
    }
    if (tri.kind == IntersectionKind::Empty) {
      throw InfeasibleInstanceError("4-clique ending at vertex " + std::to_string(i) + " has no embedding");
    }
    const double omega = dihedral_angle(anchors[0], anchors[1], anchors[2], tri.points.front());
    ic.set_dihedral_cos(i, std::clamp(std::cos(omega), -1.0, 1.0));
  }
  return ic;
}

GeneratedInstance generate_instance(int n, std::uint64_t seed, double extra_edge_fraction) {
  if (n < 4) throw std::invalid_argument("generate_instance: n must be at least 4");
  if (!(extra_edge_fraction >= 0.0 && extra_edge_fraction <= 1.0)) {
    throw std::invalid_argument("generate_instance: extra edge fraction outside [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dihedral(-std::numbers::pi, std::numbers::pi);

  const auto anchors = anchor_first_three(kGeneratedBondLength, kGeneratedBondLength, kGeneratedBondAngle);
  std::vector<Vec3> pts(anchors.begin(), anchors.end());
  for (int i = 4; i <= n; ++i) {
    const auto& p = pts;
    const auto placed = matrix_place_next(p[p.size() - 3], p[p.size() - 2], p[p.size() - 1],
                                          kGeneratedBondAngle, dihedral(rng), kGeneratedBondLength);
    pts.push_back(placed.first);
  }
  for (Vec3& q : pts) q = {round_to_12_digits(q.x), round_to_12_digits(q.y), round_to_12_digits(q.z)};
  Realization truth(std::move(pts));

  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> others;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (v - u <= 3) edges.push_back({u, v, 0.0});
      else others.emplace_back(u, v);
    }
  }
  std::shuffle(others.begin(), others.end(), rng);
  const auto extra = static_cast<std::size_t>(std::llround(extra_edge_fraction * static_cast<double>(others.size())));
  for (std::size_t k = 0; k < extra; ++k) edges.push_back({others[k].first, others[k].second, 0.0});
  for (Edge& e : edges) e.d = distance(truth.at(e.u), truth.at(e.v));

  return {Instance(n, std::move(edges)), std::move(truth)};
}

Instance ingest_coordinates(const std::string& text, double cutoff) {
  const Realization coords = parse_realization(text);
  const int n = coords.size();
  if (n < 4) throw Error("coordinate file needs at least 4 points, found " + std::to_string(n));
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const double d = distance(coords.at(u), coords.at(v));
      if (v - u <= 3 || d <= cutoff) edges.push_back({u, v, d});
    }
  }
  return Instance(n, std::move(edges));
}

}  // namespace cgadg
