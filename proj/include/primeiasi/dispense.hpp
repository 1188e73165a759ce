#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primeiasi/graph.hpp"

namespace primeiasi {

enum class Method { Auto, Brute, BranchAndBound };

std::optional<Method> parse_method(std::string_view name);

// Largest search instance (a block, or the whole graph without
// decomposition) accepted by default.
inline constexpr std::size_t kDefaultCeiling = 40;
// Under Method::Auto, instances up to this size are searched exhaustively.
inline constexpr std::size_t kAutoBruteLimit = 20;

struct DispenseOptions {
  Method method = Method::Auto;
  std::size_t ceiling = kDefaultCeiling;
  // Solve each block separately and glue the witnesses at cut vertices.
  bool decompose = true;
};

/// Minimum number of edges without a prime deterministic ratio, together
/// with a witness side assignment whose crossing edges are kept.
struct DispensingResult {
  std::size_t theta = 0;
  Bipartition witness;
  std::vector<Edge> kept_edges;
  std::vector<Edge> removed_edges;
  // "brute", "branch_and_bound" or "formula(<name>)".
  std::string method;
};

/// theta = |E| - max cut. Each search instance returns its lexicographically
/// smallest optimal assignment with its lowest vertex on X; block witnesses
/// are flipped to agree at cut vertices, walking out from the lowest vertex
/// of each component. Throws SizeLimitExceeded past the ceiling.
DispensingResult dispensing_exact(const Graph& g, const DispenseOptions& options = {});

/// Evaluates the closed-form value claimed for a graph family, whether or
/// not the claim holds. Families and their parameters:
///   odd_cycle [n], even_cycle [n]      -> 1, 0
///   complete n, split r                -> n(n-2)/4 for even n, (n-1)^2/4 for odd n
///   cactus c, eulerian c               -> c (number of odd cycles)
///   block_graph k1 k2 ...              -> sum of complete(ki)
///   union t1 t2 t12                    -> t1 + t2 - t12
/// Throws UnknownFamily or InvalidParams.
std::int64_t dispensing_formula(std::string_view family, std::span<const std::int64_t> params);

std::vector<std::string> audit_families();

struct AuditSpec {
  // Empty selects every family in audit_families().
  std::vector<std::string> families;
  std::size_t max_n = 10;
  std::uint64_t seed = 1;
  // Seeded instances per random family (split, cactus, block_graph, union).
  std::size_t random_instances = 5;
  DispenseOptions solver;
};

struct AuditRow {
  std::string family;
  std::string params;
  std::int64_t formula = 0;
  // Empty when the exact solver refused the instance.
  std::optional<std::int64_t> exact;
  bool match = false;
  std::string error;
};

struct AuditReport {
  std::vector<AuditRow> rows;

  std::size_t matches() const;
  std::size_t mismatches() const;
  std::size_t errors() const;
};

/// Builds every instance of the selected families, solves it exactly and
/// compares with dispensing_formula. Solver failures are recorded per row.
/// Throws UnknownFamily for an unrecognised family name.
AuditReport audit(const AuditSpec& spec);

nlohmann::json to_json(const DispensingResult& result);
nlohmann::json to_json(const AuditReport& report);
std::string to_csv(const AuditReport& report);
std::string to_text(const AuditReport& report);

}  // namespace primeiasi
