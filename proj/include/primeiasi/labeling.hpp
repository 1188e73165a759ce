#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "primeiasi/graph.hpp"
#include "primeiasi/setalg.hpp"

namespace primeiasi {

/// Vertex -> AP-set label. The deterministic index of a vertex is the common
/// difference of its label.
struct Labeling {
  std::map<Vertex, APSet> assignment;

  /// Throws MissingVertexLabel.
  const APSet& at(Vertex v) const;
  Value deterministic_index(Vertex v) const { return at(v).diff; }

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

enum class EdgeKind { Prime, NonPrimeIntegral, NonIntegral };

std::string_view to_string(EdgeKind kind);

/// Deterministic-ratio classification of one edge.
struct EdgeClass {
  Edge edge;
  // Larger difference over smaller one, when that is an integer.
  std::optional<Value> ratio;
  EdgeKind kind = EdgeKind::NonIntegral;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

bool is_prime(Value n);

struct LabelParams {
  Value base_diff = 1;
  // Length of every vertex label; must be a prime >= 3 and doubles as the
  // deterministic ratio across the bipartition.
  Value label_len = 3;
};

/// Prime AIASI of a bipartite graph. X-side vertices get difference
/// base_diff, Y-side vertices p*base_diff with p = label_len. Vertex v starts
/// at sidon[v] * base_diff * p * p, which keeps all vertex and edge labels
/// distinct. Throws NonBipartite (with an odd cycle) or InvalidParams.
Labeling construct_prime_aiasi(const Graph& g, const LabelParams& params = {});

struct MinDeficiencyLabeling {
  Labeling labeling;
  std::vector<EdgeClass> edge_classes;

  std::vector<Edge> non_prime_edges() const;
};

/// Same construction driven by an arbitrary two-sided vertex assignment:
/// edges across the witness get prime ratio p, edges inside a side ratio 1.
/// Throws InvalidWitness when the witness does not cover every vertex.
MinDeficiencyLabeling construct_min_deficiency_aiasi(const Graph& g, const Bipartition& witness,
                                                     const LabelParams& params = {});

/// Throws MissingVertexLabel.
std::vector<EdgeClass> classify_edges(const Graph& g, const Labeling& labeling);

}  // namespace primeiasi
