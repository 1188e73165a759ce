#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "primeiasi/types.hpp"

namespace primeiasi {

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over vertices 0..vertex_count-1. Edges are kept
/// sorted; adjacency lists are sorted ascending. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidParams on self-loops, parallel edges or ids out of range.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Same vertex set, restricted to `edges` (each must belong to this graph).
  Graph edge_subgraph(std::span<const Edge> edges) const;

  /// Graph on `vertices` (renumbered in ascending order) with every edge of
  /// this graph between them.
  Graph induced_subgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class Side : unsigned char { X = 0, Y = 1 };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// Two-sided vertex assignment. For a bipartition of G every edge crosses.
struct Bipartition {
  std::vector<Side> side;

  std::vector<Vertex> part(Side s) const;
  bool separates(const Edge& e) const { return side.at(e.u) != side.at(e.v); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// 2-colouring with the lowest id of each component on X, or nothing when
/// the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Some odd cycle of `g` as a vertex sequence (closing edge implied), or
/// nothing when g is bipartite.
std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex. Isolated
/// vertices form singleton components.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Biconnected components as edge sets; bridges are single-edge blocks.
/// Each block is sorted and blocks are ordered by their first edge.
std::vector<std::vector<Edge>> blocks(const Graph& g);

struct CycleDecomposition {
  // Each cycle is a vertex sequence v0 v1 ... vk-1 with edges vi-vi+1 and
  // vk-1-v0.
  std::vector<std::vector<Vertex>> cycles;

  std::size_t odd_cycle_count() const;
};

/// Splits an even-degree graph into edge-disjoint simple cycles by repeated
/// peeling: each walk starts at the lowest vertex with unused edges and
/// always moves to the lowest unused neighbour. Throws InvalidParams when a
/// vertex has odd degree.
CycleDecomposition euler_cycle_decomposition(const Graph& g);

}  // namespace primeiasi
