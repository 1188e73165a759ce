#include "primeiasi/generators.hpp"

#include <algorithm>
#include <string>

#include "primeiasi/error.hpp"
#include "primeiasi/random.hpp"

namespace primeiasi::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.push_back(Edge::make(members[i], members[j]));
    }
  }
}

void add_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    edges.push_back(Edge::make(members[i], members[(i + 1) % members.size()]));
  }
}

std::vector<Vertex> iota_vertices(Vertex from, std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + static_cast<Vertex>(i);
  return out;
}

}  // namespace

Graph path(std::size_t n) {
  require(n >= 2, "path needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle length must be at least 3");
  std::vector<Edge> edges;
  add_cycle(edges, iota_vertices(0, n));
  return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) {
  require(n >= 2, "complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  add_clique(edges, iota_vertices(0, n));
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete bipartite sides must be non-empty");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, static_cast<Vertex>(a + y)});
  }
  return Graph(a + b, std::move(edges));
}

Graph hypercube(std::size_t d) {
  require(d >= 1 && d <= 20, "hypercube dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(Edge::make(i, (i + 1) % 5));
    edges.push_back(Edge::make(i, i + 5));
    edges.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, std::move(edges));
}

Graph bowtie() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

Graph split(std::size_t r, const std::vector<std::vector<Vertex>>& adjacency) {
  require(r >= 1, "split graph clique must be non-empty");
  std::vector<Edge> edges;
  if (r >= 2) add_clique(edges, iota_vertices(0, r));
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    require(!adjacency[i].empty(), "independent vertex would be isolated");
    const auto s = static_cast<Vertex>(r + i);
    for (Vertex c : adjacency[i]) {
      require(c < r, "independent vertex joined outside the clique");
      edges.push_back({c, s});
    }
  }
  return Graph(r + adjacency.size(), std::move(edges));
}

Graph complete_split(std::size_t r, std::size_t s) {
  return split(r, std::vector<std::vector<Vertex>>(s, iota_vertices(0, r)));
}

Graph random_split(std::size_t r, std::size_t s, std::uint64_t seed) {
  require(r >= 1, "split graph clique must be non-empty");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adjacency(s);
  for (auto& adj : adjacency) {
    while (adj.empty()) {
      for (Vertex c = 0; c < r; ++c) {
        if (rng.chance(1, 2)) adj.push_back(c);
      }
    }
  }
  return split(r, adjacency);
}

Graph subdivision(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<Edge> edges;
  Vertex mid = static_cast<Vertex>(n);
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, mid});
    edges.push_back({e.v, mid});
    ++mid;
  }
  return Graph(mid, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph edge_disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  // Graph rejects the shared edge as a parallel edge.
  return Graph(std::max(a.vertex_count(), b.vertex_count()), std::move(edges));
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(num, den)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

std::size_t CactusInstance::odd_cycle_count() const {
  return static_cast<std::size_t>(std::count_if(cycle_lengths.begin(), cycle_lengths.end(),
                                                [](std::size_t len) { return len % 2 == 1; }));
}

CactusInstance random_cactus(std::size_t max_vertices, std::uint64_t seed) {
  require(max_vertices >= 2, "cactus needs at least 2 vertices");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> lengths;
  std::size_t n = 1;
  while (n < max_vertices) {
    const auto anchor = static_cast<Vertex>(rng.below(n));
    const std::size_t room = max_vertices - n;
    if (room >= 2 && rng.chance(3, 4)) {
      const auto len = static_cast<std::size_t>(
          rng.between(3, static_cast<std::int64_t>(std::min<std::size_t>(7, room + 1))));
      std::vector<Vertex> members{anchor};
      for (std::size_t i = 1; i < len; ++i) members.push_back(static_cast<Vertex>(n++));
      add_cycle(edges, members);
      lengths.push_back(len);
    } else {
      edges.push_back({anchor, static_cast<Vertex>(n++)});
    }
  }
  return {Graph(n, std::move(edges)), std::move(lengths)};
}

BlockGraphInstance random_block_graph(std::size_t max_vertices, std::uint64_t seed) {
  require(max_vertices >= 2, "block graph needs at least 2 vertices");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> sizes;
  std::size_t n = 1;
  while (n < max_vertices) {
    const auto anchor = static_cast<Vertex>(rng.below(n));
    const std::size_t room = max_vertices - n;
    const auto size = static_cast<std::size_t>(
        rng.between(2, static_cast<std::int64_t>(std::min<std::size_t>(5, room + 1))));
    std::vector<Vertex> members{anchor};
    for (std::size_t i = 1; i < size; ++i) members.push_back(static_cast<Vertex>(n++));
    add_clique(edges, members);
    sizes.push_back(size);
  }
  return {Graph(n, std::move(edges)), std::move(sizes)};
}

}  // namespace primeiasi::gen
