#pragma once

#include <cstdint>
#include <vector>

#include "primeiasi/graph.hpp"

namespace primeiasi::gen {

// Vertex numbering is part of each generator's contract so labelings and
// reports are reproducible. All generators throw InvalidParams on bad sizes.

/// 0-1-...-(n-1); n >= 2.
Graph path(std::size_t n);
/// 0-1-...-(n-1)-0; n >= 3.
Graph cycle(std::size_t n);
/// K_n on 0..n-1; n >= 2.
Graph complete(std::size_t n);
/// Sides 0..a-1 and a..a+b-1; a, b >= 1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Q_d: vertex ids are bit strings, edges join ids differing in one bit;
/// d >= 1.
Graph hypercube(std::size_t d);
/// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram (5+i)-(5+(i+2)%5).
Graph petersen();
/// Two triangles 0-1-2 and 0-3-4 sharing vertex 0.
Graph bowtie();

/// Clique 0..r-1 plus independent vertices r..r+s-1; `adjacency[i]` lists
/// the clique vertices joined to independent vertex r+i (non-empty).
Graph split(std::size_t r, const std::vector<std::vector<Vertex>>& adjacency);
/// Split graph where every independent vertex sees the whole clique.
Graph complete_split(std::size_t r, std::size_t s);
/// Split graph where each independent vertex sees a random non-empty subset
/// of the clique.
Graph random_split(std::size_t r, std::size_t s, std::uint64_t seed);

/// Original vertices keep their ids; the i-th edge (sorted order) is
/// replaced by a path through new vertex n+i.
Graph subdivision(const Graph& g);
/// Vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Union over a shared vertex set (ids are taken as-is); throws when the
/// graphs have a common edge.
Graph edge_disjoint_union(const Graph& a, const Graph& b);

/// Erdos-Renyi G(n, num/den).
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

struct CactusInstance {
  Graph graph;
  std::vector<std::size_t> cycle_lengths;

  std::size_t odd_cycle_count() const;
};

/// Connected cactus on at most `max_vertices` (>= 2) vertices, grown from
/// vertex 0 by hanging cycles (length 3..7) or pendant edges on random
/// existing vertices.
CactusInstance random_cactus(std::size_t max_vertices, std::uint64_t seed);

struct BlockGraphInstance {
  Graph graph;
  std::vector<std::size_t> clique_sizes;
};

/// Connected block graph on at most `max_vertices` (>= 2) vertices, grown
/// from vertex 0 by hanging cliques K_2..K_5 on random existing vertices.
BlockGraphInstance random_block_graph(std::size_t max_vertices, std::uint64_t seed);

}  // namespace primeiasi::gen
