#include "primeiasi/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "primeiasi/error.hpp"

namespace primeiasi {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw InvalidParams("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidParams("edge endpoint out of range");
    }
    e = Edge::make(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InvalidParams("parallel edge " + std::to_string(dup->u) + "-" +
                        std::to_string(dup->v));
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

Graph Graph::edge_subgraph(std::span<const Edge> edges) const {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges) {
    if (!has_edge(e.u, e.v)) throw InvalidParams("edge not in graph");
    kept.push_back(e);
  }
  return Graph(vertex_count(), std::move(kept));
}

Graph Graph::induced_subgraph(std::span<const Vertex> vertices) const {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](Vertex v) -> std::optional<Vertex> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) return std::nullopt;
    return static_cast<Vertex>(it - sorted.begin());
  };
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    auto a = index_of(e.u);
    auto b = index_of(e.v);
    if (a && b) out.push_back(Edge{*a, *b});
  }
  return Graph(sorted.size(), std::move(out));
}

std::vector<Vertex> Bipartition::part(Side s) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side.size(); ++v) {
    if (side[v] == s) out.push_back(v);
  }
  return out;
}

namespace {

// BFS colouring; on conflict returns the offending edge and fills parents.
struct Colouring {
  std::vector<int> colour;  // -1 unvisited, otherwise 0/1
  std::vector<Vertex> parent;
  std::vector<std::size_t> depth;
  std::optional<Edge> conflict;
};

Colouring colour_graph(const Graph& g) {
  const auto n = g.vertex_count();
  Colouring c{std::vector<int>(n, -1), std::vector<Vertex>(n), std::vector<std::size_t>(n, 0),
              std::nullopt};
  for (Vertex root = 0; root < n; ++root) {
    if (c.colour[root] != -1) continue;
    c.colour[root] = 0;
    c.parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (c.colour[w] == -1) {
          c.colour[w] = 1 - c.colour[v];
          c.parent[w] = v;
          c.depth[w] = c.depth[v] + 1;
          queue.push_back(w);
        } else if (c.colour[w] == c.colour[v]) {
          c.conflict = Edge::make(v, w);
          return c;
        }
      }
    }
  }
  return c;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  auto c = colour_graph(g);
  if (c.conflict) return std::nullopt;
  Bipartition b;
  b.side.reserve(g.vertex_count());
  for (int col : c.colour) b.side.push_back(col == 0 ? Side::X : Side::Y);
  return b;
}

std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g) {
  auto c = colour_graph(g);
  if (!c.conflict) return std::nullopt;
  Vertex a = c.conflict->u;
  Vertex b = c.conflict->v;
  std::vector<Vertex> from_a;
  std::vector<Vertex> from_b;
  while (c.depth[a] > c.depth[b]) { from_a.push_back(a); a = c.parent[a]; }
  while (c.depth[b] > c.depth[a]) { from_b.push_back(b); b = c.parent[b]; }
  while (a != b) {
    from_a.push_back(a);
    from_b.push_back(b);
    a = c.parent[a];
    b = c.parent[b];
  }
  from_a.push_back(a);  // common ancestor
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Edge>> blocks(const Graph& g) {
  const auto n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> out;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // index into neighbours
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited || g.degree(root) == 0) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const Vertex w = adj[f.next++];
        if (disc[w] == kUnvisited) {
          edge_stack.push_back(Edge::make(f.v, w));
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.push_back(Edge::make(f.v, w));
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        const Edge tree_edge = Edge::make(p, v);
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::size_t CycleDecomposition::odd_cycle_count() const {
  return static_cast<std::size_t>(std::count_if(
      cycles.begin(), cycles.end(), [](const auto& c) { return c.size() % 2 == 1; }));
}

CycleDecomposition euler_cycle_decomposition(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::set<Vertex>> remaining(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 != 0) {
      throw InvalidParams("vertex " + std::to_string(v) + " has odd degree " +
                          std::to_string(g.degree(v)));
    }
    remaining[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }

  constexpr std::size_t kOffPath = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(n, kOffPath);
  CycleDecomposition out;
  Vertex start = 0;
  while (true) {
    while (start < n && remaining[start].empty()) ++start;
    if (start == n) break;
    std::vector<Vertex> path{start};
    pos[start] = 0;
    while (!remaining[path.back()].empty()) {
      const Vertex cur = path.back();
      const Vertex next = *remaining[cur].begin();
      remaining[cur].erase(next);
      remaining[next].erase(cur);
      if (pos[next] == kOffPath) {
        pos[next] = path.size();
        path.push_back(next);
        continue;
      }
      const std::size_t at = pos[next];
      std::vector<Vertex> cycle(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
      for (std::size_t i = at + 1; i < path.size(); ++i) pos[path[i]] = kOffPath;
      path.resize(at + 1);
      out.cycles.push_back(std::move(cycle));
    }
    if (path.size() != 1) throw std::logic_error("cycle peeling stranded on an open walk");
    pos[start] = kOffPath;
  }
  return out;
}

}  // namespace primeiasi
