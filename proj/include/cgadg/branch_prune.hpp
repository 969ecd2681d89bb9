#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cgadg/instance.hpp"
#include "cgadg/realization.hpp"

namespace cgadg {

// Which of the two candidates was taken at a vertex. Plus is the point the
// placement motor produces (dihedral +|omega|), Minus its mirror image.
enum class Branch : std::uint8_t { Plus, Minus };

inline Branch flipped(Branch b) { return b == Branch::Plus ? Branch::Minus : Branch::Plus; }

// Branch choices for vertices 4..n; position k is vertex k + 4.
// Ordered the way the depth-first search visits leaves.
class BranchPath {
 public:
  BranchPath() = default;
  explicit BranchPath(std::vector<Branch> branches) : branches_(std::move(branches)) {}
  // All-Plus path for an instance with n vertices.
  static BranchPath all_plus(int n);
  // Parses "+-+..." ; throws std::invalid_argument on other characters.
  static BranchPath parse(const std::string& text);

  std::size_t size() const { return branches_.size(); }
  Branch at_vertex(int vertex) const { return branches_.at(static_cast<std::size_t>(vertex - 4)); }
  void set_vertex(int vertex, Branch b) { branches_.at(static_cast<std::size_t>(vertex - 4)) = b; }
  void push_back(Branch b) { branches_.push_back(b); }
  void pop_back() { branches_.pop_back(); }
  const std::vector<Branch>& branches() const { return branches_; }

  std::string to_string() const;

  friend bool operator==(const BranchPath&, const BranchPath&) = default;
  friend auto operator<=>(const BranchPath&, const BranchPath&) = default;

 private:
  std::vector<Branch> branches_;
};

enum class SearchMode { FirstSolution, AllSolutions };

inline constexpr double kDefaultPruneEps = 1e-4;

struct SolveOptions {
  double eps = kDefaultPruneEps;  // angstroms
  SearchMode mode = SearchMode::FirstSolution;
  std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
  // Find one solution, then rebuild the others by partial reflections.
  bool use_symmetry = false;
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Solution {
  Realization realization;
  BranchPath path;
};

// x_1 = 0, x_2 = (-d12, 0, 0), x_3 in the upper half of the xy plane.
std::array<Vec3, 3> initialize_first_three(const InternalCoords& coords);

// True iff every edge (j, i), j < i, is met within eps by the first i points
// of `partial`.
bool prune_check(const Realization& partial, int i, const Instance& inst, double eps);

// Branch & Prune over the dihedral choices. Solutions come back in
// depth-first order (Plus before Minus). Infeasible instances give an empty
// list. Throws DegenerateGeometryError naming the vertex when three
// consecutive placed points are collinear, std::invalid_argument for bad
// options or a missing clique edge.
std::vector<Solution> solve(const Instance& inst, const SolveOptions& opts = {});

// Points i..n reflected through the plane of x_{i-3}, x_{i-2}, x_{i-1}.
Realization reflect_suffix(const Realization& r, int i);

// Path of reflect_suffix(r, i) when r follows `path`: every choice from
// vertex i on changes side.
BranchPath reflect_suffix_path(const BranchPath& path, int i);

// Vertices i >= 4 where no edge (u, v) has u <= i - 4 < i <= v; a reflection
// there keeps every distance.
std::vector<int> symmetry_vertices(const Instance& inst);

// Rebuilds the realization for each target path from `base` by partial
// reflections and keeps those meeting all edges within eps.
std::vector<Solution> expand_by_symmetry(const Solution& base, const std::vector<BranchPath>& targets,
                                         const Instance& inst, double eps = kDefaultPruneEps);

// Every path reachable from `base` by reflections at symmetry vertices, in
// depth-first order, at most `limit` of them.
std::vector<BranchPath> symmetric_targets(const BranchPath& base, const std::vector<int>& vertices,
                                          std::size_t limit = std::numeric_limits<std::size_t>::max());

// All 2^(n-3) paths in depth-first order.
std::vector<BranchPath> all_paths(int n);

}  // namespace cgadg
