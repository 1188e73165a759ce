#include "primeiasi/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "primeiasi/error.hpp"

namespace primeiasi {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Iasi:
      return "iasi";
    case Level::Arithmetic:
      return "arithmetic";
    case Level::Prime:
      return "prime";
  }
  return "unknown";
}

std::optional<Level> parse_level(std::string_view name) {
  for (Level l : {Level::Iasi, Level::Arithmetic, Level::Prime}) {
    if (to_string(l) == name) return l;
  }
  return std::nullopt;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateVertexLabel:
      return "duplicate-vertex-label";
    case ViolationKind::DuplicateEdgeLabel:
      return "duplicate-edge-label";
    case ViolationKind::LabelTooSmall:
      return "label-too-small";
    case ViolationKind::NonApEdgeLabel:
      return "non-AP-edge-label";
    case ViolationKind::RatioExceedsSize:
      return "ratio-exceeds-size";
    case ViolationKind::NonIntegralRatio:
      return "non-integral-ratio";
    case ViolationKind::NonPrimeRatio:
      return "non-prime-ratio";
  }
  return "unknown";
}

namespace {

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

std::string element_name(const Element& element) {
  if (const auto* v = std::get_if<Vertex>(&element)) return "v" + std::to_string(*v);
  return "e" + edge_key(std::get<Edge>(element));
}

VerificationReport verify(const Graph& g, const Labeling& labeling, Level level) {
  VerificationReport report;
  report.level_requested = level;
  auto& out = report.violations;

  std::vector<IntSet> vertex_sets;
  vertex_sets.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertex_sets.push_back(expand(labeling.at(v)));

  std::map<IntSet, Vertex> seen_vertex;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& set = vertex_sets[v];
    if (static_cast<Value>(set.size()) < kMinLabelLen) {
      out.push_back({ViolationKind::LabelTooSmall, v,
                     "vertex label has " + std::to_string(set.size()) + " elements"});
    }
    auto [it, fresh] = seen_vertex.emplace(set, v);
    if (!fresh) {
      out.push_back({ViolationKind::DuplicateVertexLabel, v,
                     "same label as vertex " + std::to_string(it->second)});
    }
  }

  std::map<IntSet, Edge> seen_edge;
  for (const auto& e : g.edges()) {
    const IntSet edge_set = sumset(vertex_sets[e.u], vertex_sets[e.v]);
    report.edge_label_sizes[e] = static_cast<Value>(edge_set.size());
    if (static_cast<Value>(edge_set.size()) < kMinLabelLen) {
      out.push_back({ViolationKind::LabelTooSmall, e,
                     "edge label has " + std::to_string(edge_set.size()) + " elements"});
    }
    auto [it, fresh] = seen_edge.emplace(edge_set, e);
    if (!fresh) {
      out.push_back({ViolationKind::DuplicateEdgeLabel, e, "same label as edge " + edge_key(it->second)});
    }
    if (level == Level::Iasi) continue;

    if (!ap_recognize(edge_set)) {
      out.push_back({ViolationKind::NonApEdgeLabel, e, "edge label is not an arithmetic progression"});
    }
    const APSet& a = labeling.at(e.u);
    const APSet& b = labeling.at(e.v);
    const Value d_small = std::min(a.diff, b.diff);
    const Value d_big = std::max(a.diff, b.diff);
    if (d_big % d_small != 0) {
      out.push_back({ViolationKind::NonIntegralRatio, e,
                     std::to_string(d_big) + "/" + std::to_string(d_small) + " is not an integer"});
      continue;
    }
    const Value k = d_big / d_small;
    // With equal differences either endpoint may play the smaller role.
    Value bound = 0;
    if (a.diff == d_small) bound = std::max(bound, a.len);
    if (b.diff == d_small) bound = std::max(bound, b.len);
    if (k > bound) {
      out.push_back({ViolationKind::RatioExceedsSize, e,
                     "ratio " + std::to_string(k) + " exceeds set-indexing number " +
                         std::to_string(bound)});
    }
    if (level == Level::Prime && !is_prime(k)) {
      out.push_back({ViolationKind::NonPrimeRatio, e, "ratio " + std::to_string(k) + " is not prime"});
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.element, x.kind) < std::tie(y.element, y.kind);
  });
  report.edge_classes = classify_edges(g, labeling);
  report.passed = out.empty();
  return report;
}

SetIndexingNumbers set_indexing_numbers(const Graph& g, const Labeling& labeling) {
  SetIndexingNumbers out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.vertices[v] = labeling.at(v).len;
  for (const auto& e : g.edges()) {
    out.edges[e] = static_cast<Value>(sumset(expand(labeling.at(e.u)), expand(labeling.at(e.v))).size());
  }
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", to_string(v.kind)},
                          {"element", element_name(v.element)},
                          {"detail", v.detail}});
  }
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : report.edge_classes) {
    classes.push_back({{"edge", {c.edge.u, c.edge.v}},
                       {"ratio", c.ratio ? nlohmann::json(*c.ratio) : nlohmann::json(nullptr)},
                       {"kind", to_string(c.kind)}});
  }
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [e, size] : report.edge_label_sizes) sizes[edge_key(e)] = size;
  return {{"level_requested", to_string(report.level_requested)},
          {"passed", report.passed},
          {"violations", violations},
          {"edge_classes", classes},
          {"edge_label_sizes", sizes}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "level=" << to_string(report.level_requested) << " "
     << (report.passed ? "passed" : "FAILED") << "\n";
  for (const auto& v : report.violations) {
    os << "  " << to_string(v.kind) << " " << element_name(v.element) << ": " << v.detail << "\n";
  }
  std::size_t prime = 0;
  for (const auto& c : report.edge_classes) prime += c.kind == EdgeKind::Prime ? 1 : 0;
  os << "edges=" << report.edge_classes.size() << " prime-ratio=" << prime << "\n";
  return os.str();
}

}  // namespace primeiasi
