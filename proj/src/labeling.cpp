#include "primeiasi/labeling.hpp"

#include <string>

#include "primeiasi/error.hpp"

namespace primeiasi {

const APSet& Labeling::at(Vertex v) const {
  auto it = assignment.find(v);
  if (it == assignment.end()) throw MissingVertexLabel(v);
  return it->second;
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Prime:
      return "prime";
    case EdgeKind::NonPrimeIntegral:
      return "non-prime-integral";
    case EdgeKind::NonIntegral:
      return "non-integral";
  }
  return "unknown";
}

bool is_prime(Value n) {
  if (n < 2) return false;
  for (Value d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

Labeling label_sides(std::span<const Side> sides, const LabelParams& params) {
  if (params.base_diff < 1) throw InvalidParams("base difference must be positive");
  if (params.label_len < kMinLabelLen || !is_prime(params.label_len)) {
    throw InvalidParams("label length must be a prime >= 3, got " +
                        std::to_string(params.label_len));
  }
  const Value p = params.label_len;
  const Value stride = params.base_diff * params.label_len * p;
  const auto firsts = sidon_prefix(sides.size());
  Labeling out;
  for (Vertex v = 0; v < sides.size(); ++v) {
    const Value diff = sides[v] == Side::X ? params.base_diff : p * params.base_diff;
    out.assignment.emplace(v, APSet{firsts[v] * stride, diff, params.label_len});
  }
  return out;
}

}  // namespace

Labeling construct_prime_aiasi(const Graph& g, const LabelParams& params) {
  auto sides = bipartition(g);
  if (!sides) throw NonBipartite(*find_odd_cycle(g));
  return label_sides(sides->side, params);
}

std::vector<Edge> MinDeficiencyLabeling::non_prime_edges() const {
  std::vector<Edge> out;
  for (const auto& c : edge_classes) {
    if (c.kind != EdgeKind::Prime) out.push_back(c.edge);
  }
  return out;
}

MinDeficiencyLabeling construct_min_deficiency_aiasi(const Graph& g, const Bipartition& witness,
                                                     const LabelParams& params) {
  if (witness.side.size() != g.vertex_count()) {
    throw InvalidWitness("witness assigns " + std::to_string(witness.side.size()) +
                         " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  MinDeficiencyLabeling out;
  out.labeling = label_sides(witness.side, params);
  out.edge_classes = classify_edges(g, out.labeling);
  return out;
}

std::vector<EdgeClass> classify_edges(const Graph& g, const Labeling& labeling) {
  std::vector<EdgeClass> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const APSet& a = labeling.at(e.u);
    const APSet& b = labeling.at(e.v);
    // On equal differences the shorter label bounds the ratio.
    const bool a_small = a.diff < b.diff || (a.diff == b.diff && a.len <= b.len);
    const APSet& small = a_small ? a : b;
    const APSet& big = a_small ? b : a;
    EdgeClass c{e, std::nullopt, EdgeKind::NonIntegral};
    if (big.diff % small.diff == 0) {
      const Value k = big.diff / small.diff;
      c.ratio = k;
      c.kind = (is_prime(k) && k <= small.len) ? EdgeKind::Prime : EdgeKind::NonPrimeIntegral;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace primeiasi
