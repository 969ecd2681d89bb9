#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgadg/realization.hpp"

namespace cgadg {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  double d = 0.0;  // angstroms

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Neighbour of a vertex that comes earlier in the vertex order.
struct LowerNeighbor {
  int vertex = 0;
  double d = 0.0;
};

// Weighted simple graph over vertices 1..n with its natural total order.
class Instance {
 public:
  Instance() = default;
  // Edges may be given in any orientation; they are stored with u < v and
  // sorted. Throws std::invalid_argument on self loops, duplicates,
  // out-of-range vertices or non-positive distances.
  Instance(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<double> distance(int u, int v) const;
  // Edges (j, i) with j < i.
  std::span<const LowerNeighbor> lower_neighbors(int i) const;

 private:
  std::uint64_t key(int u, int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, double> lookup_;
  std::vector<std::vector<LowerNeighbor>> lower_;
};

struct ValidationReport {
  bool is_dmdgp = false;
  std::vector<std::pair<int, int>> missing_clique_edges;
  // v such that d(v, v+2) >= d(v, v+1) + d(v+1, v+2).
  std::vector<int> triangle_violations;

  std::string summary() const;
};

ValidationReport validate_instance(const Instance& inst);

// Bond lengths, bond angles and |dihedral| information of the vertex chain.
class InternalCoords {
 public:
  InternalCoords() = default;
  explicit InternalCoords(int n);

  int n() const { return n_; }
  // d(i-1, i), i = 2..n.
  double bond_length(int i) const { return bond_lengths_.at(i); }
  // Angle at x_{i-1} in the triangle (i-2, i-1, i), i = 3..n.
  double bond_angle(int i) const { return bond_angles_.at(i); }
  // cos of the dihedral (i-3, i-2, i-1, i), i = 4..n. The sign of the
  // dihedral is not determined by distances.
  double dihedral_cos(int i) const { return dihedral_cos_.at(i); }

  void set_bond_length(int i, double v) { bond_lengths_.at(i) = v; }
  void set_bond_angle(int i, double v) { bond_angles_.at(i) = v; }
  void set_dihedral_cos(int i, double v) { dihedral_cos_.at(i) = v; }

 private:
  int n_ = 0;
  std::vector<double> bond_lengths_;
  std::vector<double> bond_angles_;
  std::vector<double> dihedral_cos_;
};

// Requires the consecutive cliques. Throws InfeasibleInstanceError when a
// 4-clique admits no embedding, DegenerateGeometryError when three
// consecutive vertices are collinear, std::invalid_argument when a clique
// edge is missing.
InternalCoords internal_coordinates(const Instance& inst);

// Geometry used for generated instances.
inline constexpr double kGeneratedBondLength = 1.526;
inline constexpr double kGeneratedBondAngle = 1.91;

struct GeneratedInstance {
  Instance instance;
  Realization truth;
};

// Random backbone-like chain: fixed bond length and angle, uniform dihedrals.
// Edges are all pairs with |i - j| <= 3 plus `extra_edge_fraction` of the
// remaining pairs. Coordinates are rounded to 12 significant digits before
// distances are taken, so a truth file written in the realization format
// reproduces every distance exactly. Throws std::invalid_argument for n < 4.
GeneratedInstance generate_instance(int n, std::uint64_t seed, double extra_edge_fraction);

inline constexpr double kDefaultCutoff = 5.0;

// Instance from "i x y z" lines: clique edges plus all pairs closer than
// `cutoff`. Throws ParseError on malformed input, Error for fewer than 4 points.
Instance ingest_coordinates(const std::string& text, double cutoff = kDefaultCutoff);

}  // namespace cgadg
