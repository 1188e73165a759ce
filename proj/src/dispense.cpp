#include "primeiasi/dispense.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "primeiasi/error.hpp"
#include "primeiasi/maxcut.hpp"

namespace primeiasi {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "auto") return Method::Auto;
  if (name == "brute") return Method::Brute;
  if (name == "bnb" || name == "branch_and_bound") return Method::BranchAndBound;
  return std::nullopt;
}

namespace {

struct Solved {
  MaxCut cut;
  bool used_bnb = false;
};

Solved solve_instance(const Graph& g, const DispenseOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.ceiling) {
    throw SizeLimitExceeded("search instance has " + std::to_string(n) +
                            " vertices, ceiling is " + std::to_string(options.ceiling));
  }
  switch (options.method) {
    case Method::Brute:
      return {brute_max_cut(g), false};
    case Method::BranchAndBound:
      return {bnb_max_cut(g), true};
    case Method::Auto:
      break;
  }
  if (n <= kAutoBruteLimit) return {brute_max_cut(g), false};
  return {bnb_max_cut(g), true};
}

}  // namespace

DispensingResult dispensing_exact(const Graph& g, const DispenseOptions& options) {
  const std::size_t n = g.vertex_count();
  DispensingResult result;
  bool used_bnb = false;
  std::vector<Side> sides(n, Side::X);

  if (!options.decompose) {
    auto solved = solve_instance(g, options);
    used_bnb = solved.used_bnb;
    if (n > 0) sides = std::move(solved.cut.sides);
  } else {
    // Per-block optimal assignments in local (ascending id) numbering.
    const auto block_edges = blocks(g);
    std::vector<std::vector<Vertex>> block_vertices;
    std::vector<std::vector<Side>> block_sides;
    std::vector<std::vector<std::size_t>> blocks_at(n);
    for (std::size_t b = 0; b < block_edges.size(); ++b) {
      std::vector<Vertex> vs;
      for (const auto& e : block_edges[b]) {
        vs.push_back(e.u);
        vs.push_back(e.v);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      for (Vertex v : vs) blocks_at[v].push_back(b);
      auto solved = solve_instance(g.induced_subgraph(vs), options);
      used_bnb = used_bnb || solved.used_bnb;
      block_vertices.push_back(std::move(vs));
      block_sides.push_back(std::move(solved.cut.sides));
    }

    // Glue along the block-cut tree: each block meets the placed part of
    // its component in exactly one cut vertex.
    std::vector<bool> placed_vertex(n, false);
    std::vector<bool> placed_block(block_edges.size(), false);
    for (Vertex root = 0; root < n; ++root) {
      if (placed_vertex[root]) continue;
      placed_vertex[root] = true;
      std::deque<Vertex> queue{root};
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (std::size_t b : blocks_at[v]) {
          if (placed_block[b]) continue;
          placed_block[b] = true;
          const auto& vs = block_vertices[b];
          const auto local = static_cast<std::size_t>(
              std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
          const bool flip = block_sides[b][local] != sides[v];
          for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] == v) continue;
            sides[vs[i]] = flip ? opposite(block_sides[b][i]) : block_sides[b][i];
            placed_vertex[vs[i]] = true;
            queue.push_back(vs[i]);
          }
        }
      }
    }
  }

  result.witness.side = std::move(sides);
  for (const auto& e : g.edges()) {
    (result.witness.separates(e) ? result.kept_edges : result.removed_edges).push_back(e);
  }
  result.theta = result.removed_edges.size();
  result.method = used_bnb ? "branch_and_bound" : "brute";
  return result;
}

namespace {

std::int64_t complete_value(std::int64_t n) {
  if (n < 1) throw InvalidParams("clique order must be positive");
  return n % 2 == 0 ? n * (n - 2) / 4 : (n - 1) * (n - 1) / 4;
}

void expect_arity(std::string_view family, std::span<const std::int64_t> params, std::size_t lo,
                  std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    throw InvalidParams(std::string(family) + " formula takes " + std::to_string(lo) +
                        (hi == lo ? "" : ".." + std::to_string(hi)) + " parameters, got " +
                        std::to_string(params.size()));
  }
}

}  // namespace

std::int64_t dispensing_formula(std::string_view family, std::span<const std::int64_t> params) {
  if (family == "odd_cycle" || family == "even_cycle") {
    expect_arity(family, params, 0, 1);
    const bool odd = family == "odd_cycle";
    if (!params.empty() && (params[0] < 3 || (params[0] % 2 == 1) != odd)) {
      throw InvalidParams("cycle length does not fit " + std::string(family));
    }
    return odd ? 1 : 0;
  }
  if (family == "complete" || family == "split") {
    expect_arity(family, params, 1, 1);
    return complete_value(params[0]);
  }
  if (family == "cactus" || family == "eulerian") {
    expect_arity(family, params, 1, 1);
    if (params[0] < 0) throw InvalidParams("odd cycle count must be non-negative");
    return params[0];
  }
  if (family == "block_graph") {
    std::int64_t total = 0;
    for (auto k : params) total += complete_value(k);
    return total;
  }
  if (family == "union") {
    expect_arity(family, params, 3, 3);
    return params[0] + params[1] - params[2];
  }
  throw UnknownFamily("no formula for family '" + std::string(family) + "'");
}

nlohmann::json to_json(const DispensingResult& result) {
  auto edges = [](const std::vector<Edge>& es) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : es) out.push_back({e.u, e.v});
    return out;
  };
  nlohmann::json witness = nlohmann::json::array();
  for (Side s : result.witness.side) witness.push_back(s == Side::X ? "X" : "Y");
  return {{"theta", result.theta},
          {"witness", witness},
          {"kept_edges", edges(result.kept_edges)},
          {"removed_edges", edges(result.removed_edges)},
          {"method", result.method}};
}

}  // namespace primeiasi
