#include "primeiasi/dispense.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "primeiasi/error.hpp"
#include "primeiasi/generators.hpp"
#include "primeiasi/random.hpp"

namespace primeiasi {

std::vector<std::string> audit_families() {
  return {"odd_cycle", "even_cycle", "complete", "split",   "complete_split",
          "cactus",    "block_graph", "union",   "eulerian"};
}

std::size_t AuditReport::matches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.match; }));
}

std::size_t AuditReport::errors() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.exact; }));
}

std::size_t AuditReport::mismatches() const { return rows.size() - matches() - errors(); }

namespace {

// Params column uses ';' so CSV rows never need quoting.
std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

template <typename T>
std::string kv(std::string_view key, const T& value) {
  std::ostringstream os;
  os << key << '=' << value;
  return os.str();
}

std::string plus_list(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : "+") + std::to_string(v);
  return out.empty() ? "none" : out;
}

class Auditor {
 public:
  explicit Auditor(const AuditSpec& spec) : spec_(spec) {}

  // Lazily evaluates the instance so solver failures land in the row.
  void row(std::string family, std::string params, const std::function<Graph()>& build,
           const std::function<std::int64_t()>& formula) {
    AuditRow r;
    r.family = std::move(family);
    r.params = std::move(params);
    try {
      r.formula = formula();
      r.exact = static_cast<std::int64_t>(dispensing_exact(build(), spec_.solver).theta);
      r.match = *r.exact == r.formula;
    } catch (const SizeLimitExceeded& e) {
      r.error = e.what();
    }
    report_.rows.push_back(std::move(r));
  }

  std::int64_t exact(const Graph& g) {
    return static_cast<std::int64_t>(dispensing_exact(g, spec_.solver).theta);
  }

  void run(const std::string& family) {
    const std::size_t max_n = spec_.max_n;
    const std::int64_t none[1] = {0};
    auto no_params = std::span<const std::int64_t>(none, 0);
    if (family == "odd_cycle" || family == "even_cycle") {
      const std::size_t start = family == "odd_cycle" ? 3 : 4;
      for (std::size_t n = start; n <= max_n; n += 2) {
        row(family, kv("n", n), [n] { return gen::cycle(n); },
            [&] { return dispensing_formula(family, no_params); });
      }
    } else if (family == "complete") {
      for (std::size_t n = 3; n <= max_n; ++n) {
        const std::int64_t p[] = {static_cast<std::int64_t>(n)};
        row(family, kv("n", n), [n] { return gen::complete(n); },
            [&] { return dispensing_formula("complete", p); });
      }
    } else if (family == "complete_split") {
      for (std::size_t r = 2; r < max_n; ++r) {
        for (std::size_t s = 1; r + s <= max_n; ++s) {
          const std::int64_t p[] = {static_cast<std::int64_t>(r)};
          row(family, join({kv("r", r), kv("s", s)}), [r, s] { return gen::complete_split(r, s); },
              [&] { return dispensing_formula("split", p); });
        }
      }
    } else if (family == "split") {
      for (std::size_t i = 0; i < spec_.random_instances && max_n >= 3; ++i) {
        const std::uint64_t seed = spec_.seed + i;
        Rng rng(seed);
        const auto r = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(max_n) - 1));
        const auto s = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_n - r)));
        const std::int64_t p[] = {static_cast<std::int64_t>(r)};
        row(family, join({kv("r", r), kv("s", s), kv("seed", seed)}),
            [=] { return gen::random_split(r, s, seed); },
            [&] { return dispensing_formula("split", p); });
      }
    } else if (family == "cactus") {
      for (std::size_t i = 0; i < spec_.random_instances && max_n >= 2; ++i) {
        const std::uint64_t seed = spec_.seed + i;
        auto cactus = gen::random_cactus(max_n, seed);
        const std::int64_t p[] = {static_cast<std::int64_t>(cactus.odd_cycle_count())};
        row(family,
            join({kv("vertices", max_n), kv("seed", seed), kv("cycles", plus_list(cactus.cycle_lengths))}),
            [&] { return cactus.graph; }, [&] { return dispensing_formula("cactus", p); });
      }
    } else if (family == "block_graph") {
      for (std::size_t i = 0; i < spec_.random_instances && max_n >= 2; ++i) {
        const std::uint64_t seed = spec_.seed + i;
        auto bg = gen::random_block_graph(max_n, seed);
        std::vector<std::int64_t> p(bg.clique_sizes.begin(), bg.clique_sizes.end());
        row(family,
            join({kv("vertices", max_n), kv("seed", seed), kv("cliques", plus_list(bg.clique_sizes))}),
            [&] { return bg.graph; }, [&] { return dispensing_formula("block_graph", p); });
      }
    } else if (family == "union") {
      for (std::size_t i = 0; i < spec_.random_instances && max_n >= 4; ++i) {
        const std::uint64_t seed = spec_.seed + i;
        Rng rng(seed);
        const auto half = static_cast<std::int64_t>(max_n / 2);
        const auto n1 = static_cast<std::size_t>(rng.between(2, half));
        const auto n2 = static_cast<std::size_t>(rng.between(2, half));
        const Graph a = gen::random_graph(n1, 1, 2, seed * 2 + 1);
        const Graph b = gen::random_graph(n2, 1, 2, seed * 2 + 2);
        row(family, join({"disjoint", kv("n1", n1), kv("n2", n2), kv("seed", seed)}),
            [&] { return gen::disjoint_union(a, b); },
            [&] {
              const std::int64_t p[] = {exact(a), exact(b), 0};
              return dispensing_formula("union", p);
            });
      }
      if (max_n >= 5) {
        // K_5 as a 5-cycle and a pentagram sharing all vertices but no edge.
        const Graph outer = gen::cycle(5);
        const Graph star(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
        row(family, "edge_disjoint;K5=C5+C5", [&] { return gen::edge_disjoint_union(outer, star); },
            [&] {
              const std::int64_t p[] = {exact(outer), exact(star), 0};
              return dispensing_formula("union", p);
            });
      }
    } else if (family == "eulerian") {
      auto add = [&](const std::string& name, const Graph& g) {
        const auto odd = static_cast<std::int64_t>(euler_cycle_decomposition(g).odd_cycle_count());
        const std::int64_t p[] = {odd};
        row(family, join({kv("graph", name), kv("odd_cycles", odd)}), [&] { return g; },
            [&] { return dispensing_formula("eulerian", p); });
      };
      for (std::size_t n = 3; n <= max_n; n += 2) add("K" + std::to_string(n), gen::complete(n));
      if (max_n >= 5) add("bowtie", gen::bowtie());
      if (max_n >= 8) add("K4,4", gen::complete_bipartite(4, 4));
    } else {
      throw UnknownFamily("unknown audit family '" + family + "'");
    }
  }

  AuditReport take() { return std::move(report_); }

 private:
  const AuditSpec& spec_;
  AuditReport report_;
};

std::string exact_cell(const AuditRow& r) { return r.exact ? std::to_string(*r.exact) : "error"; }

}  // namespace

AuditReport audit(const AuditSpec& spec) {
  const auto known = audit_families();
  const auto& families = spec.families.empty() ? known : spec.families;
  for (const auto& f : families) {
    if (std::find(known.begin(), known.end(), f) == known.end()) {
      throw UnknownFamily("unknown audit family '" + f + "'");
    }
  }
  Auditor auditor(spec);
  for (const auto& f : families) auditor.run(f);
  return auditor.take();
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"family", r.family},
                          {"params", r.params},
                          {"formula", r.formula},
                          {"exact", r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr)},
                          {"match", r.match}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return {{"rows", rows},
          {"summary",
           {{"rows", report.rows.size()},
            {"matches", report.matches()},
            {"mismatches", report.mismatches()},
            {"errors", report.errors()}}}};
}

std::string to_csv(const AuditReport& report) {
  std::ostringstream os;
  os << "family,params,formula,exact,match\n";
  for (const auto& r : report.rows) {
    os << r.family << ',' << r.params << ',' << r.formula << ',' << exact_cell(r) << ','
       << (r.match ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_text(const AuditReport& report) {
  std::ostringstream os;
  for (const auto& r : report.rows) {
    os << std::left << std::setw(15) << r.family << ' ' << std::setw(40) << r.params
       << " formula=" << std::setw(4) << r.formula << " exact=" << std::setw(5) << exact_cell(r)
       << (r.match ? " ok" : (r.exact ? " MISMATCH" : " ERROR")) << '\n';
  }
  os << report.rows.size() << " rows, " << report.matches() << " match, " << report.mismatches()
     << " mismatch, " << report.errors() << " error\n";
  return os.str();
}

}  // namespace primeiasi
