#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the library: plain nested loops over std::set, plain assignment
// enumeration, plain DFS.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "primeiasi/graph.hpp"

namespace oracle {

using primeiasi::Edge;
using primeiasi::Graph;
using primeiasi::Vertex;

inline std::set<std::int64_t> sum_of(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a) {
    for (auto y : b) out.insert(x + y);
  }
  return out;
}

inline std::set<std::int64_t> progression(std::int64_t first, std::int64_t diff, std::int64_t len) {
  std::set<std::int64_t> out;
  for (std::int64_t i = 0; i < len; ++i) out.insert(first + i * diff);
  return out;
}

inline std::vector<std::int64_t> as_vector(const std::set<std::int64_t>& s) {
  return {s.begin(), s.end()};
}

// Greedy Sidon sequence by direct pairwise-sum check of every candidate.
inline std::vector<std::int64_t> greedy_sidon(std::size_t m) {
  std::vector<std::int64_t> seq;
  for (std::int64_t c = 0; seq.size() < m; ++c) {
    std::vector<std::int64_t> trial = seq;
    trial.push_back(c);
    std::set<std::int64_t> sums;
    bool ok = true;
    for (std::size_t i = 0; i < trial.size() && ok; ++i) {
      for (std::size_t j = i; j < trial.size() && ok; ++j) ok = sums.insert(trial[i] + trial[j]).second;
    }
    if (ok) seq = std::move(trial);
  }
  return seq;
}

// Maximum number of crossing edges over all 2^n side assignments.
inline std::size_t max_cut(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) crossing += ((mask >> e.u) & 1U) != ((mask >> e.v) & 1U);
    best = std::max(best, crossing);
  }
  return best;
}

inline std::size_t dispensing(const Graph& g) { return g.edge_count() - max_cut(g); }

// True when some simple cycle of odd length exists (DFS over simple paths).
inline bool has_odd_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::function<bool(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex v, std::size_t len) {
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 3 && len % 2 == 1) return true;
      if (w > start && !on_path[w]) {
        on_path[w] = true;
        if (dfs(start, w, len + 1)) return true;
        on_path[w] = false;
      }
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    if (dfs(s, s, 1)) return true;
  }
  return false;
}

inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace oracle
