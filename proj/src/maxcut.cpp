#include "primeiasi/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "primeiasi/error.hpp"

namespace primeiasi {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

std::vector<Side> to_sides(Mask y_side, std::size_t n) {
  std::vector<Side> out(n, Side::X);
  for (std::size_t v = 0; v < n; ++v) {
    if ((y_side >> v) & 1U) out[v] = Side::Y;
  }
  return out;
}

// Lexicographic order on side vectors (X < Y, vertex 0 most significant).
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return ((a >> std::countr_zero(diff)) & 1U) == 0;
}

int popcount(Mask m) { return std::popcount(m); }

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g)
      : n_(g.vertex_count()),
        all_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1),
        adj_(adjacency_masks(g)) {}

  MaxCut solve() {
    if (n_ == 0) return {};
    // Greedy incumbent: each vertex joins the side opposite most of its
    // already placed neighbours.
    Mask placed = 0;
    Mask y = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      const int to_x = popcount(adj_[v] & placed & ~y);
      const int to_y = popcount(adj_[v] & placed & y);
      if (to_x > to_y) y |= Mask{1} << v;
      placed |= Mask{1} << v;
    }
    best_ = cut_value(y);

    search(Mask{1}, 0, 0, false);
    const std::size_t optimum = static_cast<std::size_t>(best_);

    // Fix vertices in id order, preferring X whenever the optimum stays
    // reachable; this yields the lexicographically smallest optimum.
    Mask fixed = 1;
    Mask fixed_y = 0;
    for (std::size_t v = 1; v < n_; ++v) {
      const Mask bit = Mask{1} << v;
      best_ = static_cast<int>(optimum) - 1;
      if (!search(fixed | bit, fixed_y, cut_within(fixed | bit, fixed_y), true)) fixed_y |= bit;
      fixed |= bit;
    }
    return {optimum, to_sides(fixed_y, n_)};
  }

 private:
  int cut_value(Mask y) const {
    int crossing = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if ((y >> v) & 1U) crossing += popcount(adj_[v] & ~y & all_);
    }
    return crossing;
  }

  // Crossing edges with both ends in `assigned`.
  int cut_within(Mask assigned, Mask y) const {
    int crossing = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if ((y >> v) & 1U) crossing += popcount(adj_[v] & assigned & ~y);
    }
    return crossing;
  }

  // Explores completions of (assigned, y). Records any completion beating
  // best_; returns true as soon as one is found when stop_on_first is set.
  bool search(Mask assigned, Mask y, int crossing, bool stop_on_first) {
    const Mask free = all_ & ~assigned;
    if (free == 0) {
      if (crossing > best_) {
        best_ = crossing;
        return true;
      }
      return false;
    }

    // Admissible bound: every edge to the placed part crosses at most on the
    // better side of its free endpoint; free-free edges may all cross.
    int bound = crossing;
    int free_free = 0;
    std::size_t branch = 0;
    int branch_placed = -1;
    for (Mask rest = free; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      const int to_x = popcount(adj_[v] & assigned & ~y);
      const int to_y = popcount(adj_[v] & y);
      bound += std::max(to_x, to_y);
      free_free += popcount(adj_[v] & free);
      if (to_x + to_y > branch_placed) {
        branch_placed = to_x + to_y;
        branch = v;
      }
    }
    bound += free_free / 2;
    if (bound <= best_) return false;

    const Mask bit = Mask{1} << branch;
    const int gain_x = popcount(adj_[branch] & y);
    const int gain_y = popcount(adj_[branch] & assigned & ~y);
    bool found = false;
    for (bool to_y : {gain_y > gain_x, gain_y <= gain_x}) {
      const bool hit = to_y ? search(assigned | bit, y | bit, crossing + gain_y, stop_on_first)
                            : search(assigned | bit, y, crossing + gain_x, stop_on_first);
      found = found || hit;
      if (found && stop_on_first) return true;
    }
    return found;
  }

  std::size_t n_;
  Mask all_;
  std::vector<Mask> adj_;
  int best_ = -1;
};

}  // namespace

MaxCut brute_max_cut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteVertexLimit) {
    throw SizeLimitExceeded("exhaustive search limited to " + std::to_string(kBruteVertexLimit) +
                            " vertices, got " + std::to_string(n));
  }
  if (n == 0) return {};
  const auto adj = adjacency_masks(g);
  // Vertex 0 stays on X; bit i of the Gray code drives vertex i + 1.
  Mask y = 0;
  int crossing = 0;
  int best = 0;
  Mask best_y = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<std::size_t>(std::countr_zero(i)) + 1;
    const Mask bit = Mask{1} << v;
    const int deg = popcount(adj[v]);
    const int same = (y & bit) ? popcount(adj[v] & y) : popcount(adj[v] & ~y);
    crossing += 2 * same - deg;
    y ^= bit;
    if (crossing > best || (crossing == best && lex_less(y, best_y))) {
      best = crossing;
      best_y = y;
    }
  }
  return {static_cast<std::size_t>(best), to_sides(best_y, n)};
}

MaxCut bnb_max_cut(const Graph& g) {
  if (g.vertex_count() > kBnbVertexLimit) {
    throw SizeLimitExceeded("branch and bound limited to " + std::to_string(kBnbVertexLimit) +
                            " vertices, got " + std::to_string(g.vertex_count()));
  }
  return BranchAndBound(g).solve();
}

}  // namespace primeiasi
