#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "primeiasi/graph.hpp"
#include "primeiasi/labeling.hpp"

namespace primeiasi {

// Levels are cumulative: prime implies arithmetic implies iasi.
enum class Level { Iasi, Arithmetic, Prime };

std::string_view to_string(Level level);
std::optional<Level> parse_level(std::string_view name);

enum class ViolationKind {
  DuplicateVertexLabel,
  DuplicateEdgeLabel,
  LabelTooSmall,
  NonApEdgeLabel,
  RatioExceedsSize,
  NonIntegralRatio,
  NonPrimeRatio,
};

std::string_view to_string(ViolationKind kind);

using Element = std::variant<Vertex, Edge>;

std::string element_name(const Element& element);

struct Violation {
  ViolationKind kind;
  Element element;
  std::string detail;
};

struct VerificationReport {
  Level level_requested = Level::Iasi;
  bool passed = true;
  // Sorted by element (vertices first), then kind.
  std::vector<Violation> violations;
  std::vector<EdgeClass> edge_classes;
  std::map<Edge, Value> edge_label_sizes;
};

/// Checks `labeling` against the requested level. Every label is expanded
/// and every edge label is computed by enumerating the sumset; the closed-form
/// progression sum is never used here. Throws MissingVertexLabel.
VerificationReport verify(const Graph& g, const Labeling& labeling, Level level);

struct SetIndexingNumbers {
  std::map<Vertex, Value> vertices;
  std::map<Edge, Value> edges;
};

/// Cardinalities of every vertex label and every (enumerated) edge label.
SetIndexingNumbers set_indexing_numbers(const Graph& g, const Labeling& labeling);

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace primeiasi
