#include "cgadg/branch_prune.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "cgadg/conformal.hpp"
#include "cgadg/errors.hpp"
#include "cgadg/oracle.hpp"

namespace cgadg {

BranchPath BranchPath::all_plus(int n) {
  return BranchPath(std::vector<Branch>(static_cast<std::size_t>(std::max(n - 3, 0)), Branch::Plus));
}

BranchPath BranchPath::parse(const std::string& text) {
  BranchPath p;
  for (char c : text) {
    if (c == '+') p.push_back(Branch::Plus);
    else if (c == '-') p.push_back(Branch::Minus);
    else throw std::invalid_argument(std::string("branch path: unexpected character '") + c + "'");
  }
  return p;
}

std::string BranchPath::to_string() const {
  std::string s;
  s.reserve(branches_.size());
  for (Branch b : branches_) s += (b == Branch::Plus) ? '+' : '-';
  return s;
}

std::array<Vec3, 3> initialize_first_three(const InternalCoords& coords) {
  if (coords.n() < 3) throw std::invalid_argument("initialize_first_three: fewer than 3 vertices");
  return anchor_first_three(coords.bond_length(2), coords.bond_length(3), coords.bond_angle(3));
}

bool prune_check(const Realization& partial, int i, const Instance& inst, double eps) {
  const Vec3& xi = partial.at(i);
  for (const LowerNeighbor& nb : inst.lower_neighbors(i)) {
    if (std::fabs(distance(partial.at(nb.vertex), xi) - nb.d) > eps) return false;
  }
  return true;
}

namespace {

bool within_eps(const Instance& inst, const Realization& r, double eps) {
  return verify_realization(inst, r).max_violation <= eps;
}

// Partial placement: vertices 1..depth fixed.
struct SearchState {
  Realization points;
  std::vector<ConformalPoint> conformal;  // 1-based, slot 0 unused
  BranchPath path;
  int depth = 3;
};

class Searcher {
 public:
  Searcher(const Instance& inst, const InternalCoords& coords, double eps)
      : inst_(inst), coords_(coords), eps_(eps) {}

  SearchState root() const {
    SearchState s;
    const int n = inst_.n();
    s.points.resize(n);
    s.conformal.resize(static_cast<std::size_t>(n) + 1);
    const auto anchors = initialize_first_three(coords_);
    for (int v = 1; v <= 3; ++v) {
      s.points.at(v) = anchors[static_cast<std::size_t>(v - 1)];
      s.conformal[static_cast<std::size_t>(v)] = embed_point(anchors[static_cast<std::size_t>(v - 1)]);
    }
    return s;
  }

  // Surviving children of `s` in branch order.
  std::vector<SearchState> children(SearchState s) const {
    std::vector<SearchState> out;
    for_each_child(s, [&](SearchState& child) {
      out.push_back(child);
      return true;
    });
    return out;
  }

  // Depth-first enumeration below `s`; stops once `sink` holds `limit` entries.
  void run(SearchState& s, std::vector<Solution>& sink, std::size_t limit) const {
    if (sink.size() >= limit) return;
    if (s.depth == inst_.n()) {
      if (within_eps(inst_, s.points, eps_)) sink.push_back({s.points, s.path});
      return;
    }
    for_each_child(s, [&](SearchState& child) {
      run(child, sink, limit);
      return sink.size() < limit;
    });
  }

 private:
  // Places vertex depth+1 on each branch in turn, in place. `visit` returns
  // false to stop.
  template <typename Visit>
  void for_each_child(SearchState& s, Visit visit) const {
    const int i = s.depth + 1;
    const auto idx = [](int v) { return static_cast<std::size_t>(v); };
    std::pair<ConformalPoint, ConformalPoint> candidates;
    try {
      const double omega = std::acos(std::clamp(coords_.dihedral_cos(i), -1.0, 1.0));
      candidates = compute_next_points(s.conformal[idx(i - 3)], s.conformal[idx(i - 2)], s.conformal[idx(i - 1)],
                                       coords_.bond_angle(i), omega, coords_.bond_length(i));
    } catch (const DegenerateGeometryError& e) {
      throw DegenerateGeometryError("vertex " + std::to_string(i) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw DegenerateGeometryError("vertex " + std::to_string(i) + ": " + e.what());
    }
    const std::array<std::pair<Branch, const ConformalPoint*>, 2> options = {
        std::pair{Branch::Plus, &candidates.first}, std::pair{Branch::Minus, &candidates.second}};
    for (const auto& [branch, point] : options) {
      s.points.at(i) = point->euclidean();
      if (!prune_check(s.points, i, inst_, eps_)) continue;
      s.conformal[idx(i)] = *point;
      s.path.push_back(branch);
      s.depth = i;
      const bool go_on = visit(s);
      s.depth = i - 1;
      s.path.pop_back();
      if (!go_on) return;
    }
  }

  const Instance& inst_;
  const InternalCoords& coords_;
  double eps_;
};

std::vector<Solution> search_parallel(const Searcher& searcher, SearchState root, std::size_t limit,
                                      unsigned threads, int n) {
  // Breadth-first frontier keeps depth-first order level by level.
  std::vector<SearchState> frontier{std::move(root)};
  const std::size_t wanted = 4 * static_cast<std::size_t>(threads);
  while (frontier.size() < wanted && frontier.front().depth < n) {
    std::vector<SearchState> next;
    for (const SearchState& s : frontier) {
      auto kids = searcher.children(s);
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    frontier = std::move(next);
    if (frontier.empty()) return {};
  }

  std::vector<std::vector<Solution>> per_item(frontier.size());
  std::atomic<std::size_t> next_item{0};
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t k = next_item++; k < frontier.size(); k = next_item++) {
            searcher.run(frontier[k], per_item[k], limit);
          }
        } catch (...) {
          failures[t] = std::current_exception();
          next_item = frontier.size();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::vector<Solution> out;
  for (auto& part : per_item) {
    for (auto& sol : part) {
      if (out.size() >= limit) return out;
      out.push_back(std::move(sol));
    }
  }
  return out;
}

}  // namespace

std::vector<Solution> solve(const Instance& inst, const SolveOptions& opts) {
  if (!(opts.eps > 0.0)) throw std::invalid_argument("solve: eps must be positive");
  if (opts.max_solutions < 1) throw std::invalid_argument("solve: max_solutions must be at least 1");
  if (inst.n() < 4) throw std::invalid_argument("solve: instance needs at least 4 vertices");

  InternalCoords coords;
  try {
    coords = internal_coordinates(inst);
  } catch (const InfeasibleInstanceError&) {
    return {};
  }

  const std::size_t limit = opts.mode == SearchMode::FirstSolution ? 1 : opts.max_solutions;
  const Searcher searcher(inst, coords, opts.eps);

  if (opts.use_symmetry) {
    std::vector<Solution> first;
    SearchState root = searcher.root();
    searcher.run(root, first, 1);
    if (first.empty()) return {};
    const auto targets = symmetric_targets(first.front().path, symmetry_vertices(inst), limit);
    return expand_by_symmetry(first.front(), targets, inst, opts.eps);
  }

  if (opts.parallel) {
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    return search_parallel(searcher, searcher.root(), limit, threads, inst.n());
  }

  std::vector<Solution> out;
  SearchState root = searcher.root();
  searcher.run(root, out, limit);
  return out;
}

Realization reflect_suffix(const Realization& r, int i) {
  if (i < 4 || i > r.size()) {
    throw std::invalid_argument("reflect_suffix: vertex " + std::to_string(i) + " outside 4.." +
                                std::to_string(r.size()));
  }
  const Multivector plane = carrier_plane(embed_point(r.at(i - 3)), embed_point(r.at(i - 2)), embed_point(r.at(i - 1)));
  Realization out = r;
  for (int j = i; j <= r.size(); ++j) out.at(j) = reflect(plane, embed_point(r.at(j))).euclidean();
  return out;
}

BranchPath reflect_suffix_path(const BranchPath& path, int i) {
  BranchPath out = path;
  for (int v = i; v < static_cast<int>(path.size()) + 4; ++v) out.set_vertex(v, flipped(path.at_vertex(v)));
  return out;
}

std::vector<int> symmetry_vertices(const Instance& inst) {
  // lowest_from[v]: smallest u with an edge (u, w), w >= v.
  const int n = inst.n();
  std::vector<int> lowest_from(static_cast<std::size_t>(n) + 2, n + 1);
  for (int v = n; v >= 1; --v) {
    int lowest = lowest_from[static_cast<std::size_t>(v) + 1];
    for (const LowerNeighbor& nb : inst.lower_neighbors(v)) lowest = std::min(lowest, nb.vertex);
    lowest_from[static_cast<std::size_t>(v)] = lowest;
  }
  std::vector<int> out;
  for (int i = 4; i <= n; ++i) {
    if (lowest_from[static_cast<std::size_t>(i)] > i - 4) out.push_back(i);
  }
  return out;
}

std::vector<Solution> expand_by_symmetry(const Solution& base, const std::vector<BranchPath>& targets,
                                         const Instance& inst, double eps) {
  const int n = inst.n();
  if (base.realization.size() != n || static_cast<int>(base.path.size()) != n - 3) {
    throw std::invalid_argument("expand_by_symmetry: base does not match the instance");
  }
  std::vector<Solution> out;
  for (const BranchPath& target : targets) {
    if (target.size() != base.path.size()) {
      throw std::invalid_argument("expand_by_symmetry: target path of length " + std::to_string(target.size()));
    }
    Realization current = base.realization;
    BranchPath current_path = base.path;
    for (int i = 4; i <= n; ++i) {
      if (current_path.at_vertex(i) == target.at_vertex(i)) continue;
      current = reflect_suffix(current, i);
      current_path = reflect_suffix_path(current_path, i);
    }
    if (within_eps(inst, current, eps)) out.push_back({std::move(current), target});
  }
  return out;
}

std::vector<BranchPath> symmetric_targets(const BranchPath& base, const std::vector<int>& vertices,
                                          std::size_t limit) {
  std::vector<BranchPath> out;
  if (limit == 0) return out;
  BranchPath current = base;
  // Choose, vertex by vertex, whether to reflect there; the Plus option at a
  // vertex is taken first so paths come out in depth-first order.
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (out.size() >= limit) return;
    if (k == vertices.size()) {
      out.push_back(current);
      return;
    }
    const int v = vertices[k];
    const BranchPath kept = current;
    const BranchPath reflected = reflect_suffix_path(current, v);
    const bool kept_first = kept.at_vertex(v) == Branch::Plus;
    current = kept_first ? kept : reflected;
    visit(k + 1);
    current = kept_first ? reflected : kept;
    visit(k + 1);
    current = kept;
  };
  visit(0);
  return out;
}

std::vector<BranchPath> all_paths(int n) {
  const int len = std::max(n - 3, 0);
  if (len > 30) throw std::invalid_argument("all_paths: 2^" + std::to_string(len) + " paths");
  std::vector<BranchPath> out;
  out.reserve(std::size_t{1} << len);
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    std::vector<Branch> b(static_cast<std::size_t>(len));
    // Most significant bit is vertex 4, so counting order is depth-first order.
    for (int k = 0; k < len; ++k) b[static_cast<std::size_t>(k)] = ((bits >> (len - 1 - k)) & 1u) ? Branch::Minus : Branch::Plus;
    out.emplace_back(std::move(b));
  }
  return out;
}

}  // namespace cgadg
