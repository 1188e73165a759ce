#include "primeiasi/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "primeiasi/dispense.hpp"
#include "primeiasi/error.hpp"
#include "primeiasi/generators.hpp"
#include "primeiasi/io.hpp"
#include "primeiasi/verify.hpp"

namespace primeiasi::cli {

namespace {

enum class Format { Text, Json, Csv };

std::size_t to_size(const std::string& s, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidParams(what + " must be a non-negative integer, got '" + s + "'");
  }
  return value;
}

std::string edge_str(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::size_t default_ceiling() {
  if (const char* env = std::getenv(kCeilingEnv); env != nullptr && *env != '\0') {
    return to_size(env, kCeilingEnv);
  }
  return kDefaultCeiling;
}

struct GenOutput {
  Graph graph;
  nlohmann::json structure = nlohmann::json::object();
};

GenOutput generate(const std::string& family, const std::vector<std::string>& params,
                   std::uint64_t seed) {
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidParams(family + " takes " + std::to_string(count) + " parameter(s), got " +
                          std::to_string(params.size()));
    }
  };
  auto num = [&](std::size_t i) { return to_size(params[i], family + " parameter"); };

  if (family == "path") { want(1); return {gen::path(num(0))}; }
  if (family == "cycle") { want(1); return {gen::cycle(num(0))}; }
  if (family == "complete") { want(1); return {gen::complete(num(0))}; }
  if (family == "complete_bipartite") { want(2); return {gen::complete_bipartite(num(0), num(1))}; }
  if (family == "hypercube") { want(1); return {gen::hypercube(num(0))}; }
  if (family == "petersen") { want(0); return {gen::petersen()}; }
  if (family == "bowtie") { want(0); return {gen::bowtie()}; }
  if (family == "complete_split") { want(2); return {gen::complete_split(num(0), num(1))}; }
  if (family == "split") { want(2); return {gen::random_split(num(0), num(1), seed)}; }
  if (family == "random") { want(1); return {gen::random_graph(num(0), 1, 2, seed)}; }
  if (family == "subdivision") { want(1); return {gen::subdivision(load_edge_list(params[0]))}; }
  if (family == "union") {
    want(2);
    return {gen::disjoint_union(load_edge_list(params[0]), load_edge_list(params[1]))};
  }
  if (family == "cactus") {
    want(1);
    auto c = gen::random_cactus(num(0), seed);
    return {c.graph, {{"cycle_lengths", c.cycle_lengths}, {"odd_cycles", c.odd_cycle_count()}}};
  }
  if (family == "block_graph") {
    want(1);
    auto b = gen::random_block_graph(num(0), seed);
    return {b.graph, {{"clique_sizes", b.clique_sizes}}};
  }
  throw UnknownFamily("unknown graph family '" + family + "'");
}

void print_dispense(std::ostream& out, Format format, const DispensingResult& r) {
  if (format == Format::Json) {
    out << to_json(r).dump() << '\n';
    return;
  }
  std::string removed;
  for (const auto& e : r.removed_edges) removed += (removed.empty() ? "" : ";") + edge_str(e);
  if (format == Format::Csv) {
    out << "theta,method,removed_edges\n" << r.theta << ',' << r.method << ',' << removed << '\n';
    return;
  }
  out << "theta=" << r.theta << '\n' << "method=" << r.method << '\n';
  for (Side s : {Side::X, Side::Y}) {
    out << (s == Side::X ? "X:" : "Y:");
    for (Vertex v : r.witness.part(s)) out << ' ' << v;
    out << '\n';
  }
  out << "removed:";
  for (const auto& e : r.removed_edges) out << ' ' << edge_str(e);
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime arithmetic IASI construction, verification and dispensing numbers",
               "primeiasi"};
  app.require_subcommand(1);
  app.fallthrough();
  Format format = Format::Text;
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}))
      ->option_text("text|json|csv");

  std::string out_file;
  std::uint64_t seed = 1;
  std::optional<std::size_t> ceiling_flag;

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family as an edge list");
  std::string family;
  std::vector<std::string> params;
  gen_cmd->add_option("family", family, "path|cycle|complete|complete_bipartite|hypercube|petersen|"
                                        "bowtie|split|complete_split|random|subdivision|union|"
                                        "cactus|block_graph")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters (sizes or input files)");
  gen_cmd->add_option("-o,--output", out_file, "Edge-list file to write (default stdout)");
  gen_cmd->add_option("--seed", seed, "Seed for random families");

  auto* label_cmd = app.add_subcommand("label", "Construct a prime AIASI (or a minimum-deficiency one)");
  std::string graph_file;
  LabelParams label_params;
  label_cmd->add_option("graph", graph_file, "Edge-list file")->required();
  label_cmd->add_option("-o,--output", out_file, "Labeling file to write (default stdout)");
  label_cmd->add_option("--diff", label_params.base_diff, "Common difference of X-side labels");
  label_cmd->add_option("--len", label_params.label_len, "Label length (prime >= 3)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling against the IASI definitions");
  std::string label_file;
  std::string level_name = "prime";
  verify_cmd->add_option("graph", graph_file, "Edge-list file")->required();
  verify_cmd->add_option("labeling", label_file, "Labeling file")->required();
  verify_cmd->add_option("--level", level_name, "iasi|arithmetic|prime")
      ->check(CLI::IsMember({"iasi", "arithmetic", "prime"}));

  auto* dispense_cmd = app.add_subcommand("dispense", "Compute the dispensing number exactly");
  std::string method_name = "auto";
  dispense_cmd->add_option("graph", graph_file, "Edge-list file")->required();
  dispense_cmd->add_option("--method", method_name, "auto|brute|bnb")
      ->check(CLI::IsMember({"auto", "brute", "bnb"}));
  dispense_cmd->add_option("--ceiling", ceiling_flag, "Largest search instance (vertices)");

  auto* audit_cmd = app.add_subcommand("audit", "Compare closed-form values with exact ones");
  std::vector<std::string> families;
  AuditSpec spec;
  audit_cmd->add_option("--families", families, "Comma-separated family list")->delimiter(',');
  audit_cmd->add_option("--max-n", spec.max_n, "Largest instance size");
  audit_cmd->add_option("--seed", spec.seed, "Base seed for random families");
  audit_cmd->add_option("--instances", spec.random_instances, "Instances per random family");
  audit_cmd->add_option("--method", method_name, "auto|brute|bnb")
      ->check(CLI::IsMember({"auto", "brute", "bnb"}));
  audit_cmd->add_option("--ceiling", ceiling_flag, "Largest search instance (vertices)");

  std::vector<std::string> argv_store{"primeiasi"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::size_t ceiling = ceiling_flag ? *ceiling_flag : default_ceiling();
    if (gen_cmd->parsed()) {
      auto g = generate(family, params, seed);
      if (out_file.empty()) {
        write_edge_list(out, g.graph);
        return kOk;
      }
      save_edge_list(out_file, g.graph);
      nlohmann::json info = {{"file", out_file},
                             {"vertices", g.graph.vertex_count()},
                             {"edges", g.graph.edge_count()}};
      info.update(g.structure);
      if (format == Format::Json) {
        out << info.dump() << '\n';
      } else {
        out << "wrote " << out_file << ": vertices=" << g.graph.vertex_count()
            << " edges=" << g.graph.edge_count() << '\n';
      }
      return kOk;
    }

    if (label_cmd->parsed()) {
      const Graph g = load_edge_list(graph_file);
      Labeling labeling;
      std::vector<Edge> non_prime;
      bool bipartite = true;
      try {
        labeling = construct_prime_aiasi(g, label_params);
      } catch (const NonBipartite&) {
        bipartite = false;
        DispenseOptions options;
        options.ceiling = ceiling;
        const auto best = dispensing_exact(g, options);
        auto md = construct_min_deficiency_aiasi(g, best.witness, label_params);
        labeling = std::move(md.labeling);
        non_prime = md.non_prime_edges();
        err << "warning: graph is not bipartite; emitted a minimum-deficiency arithmetic labeling with "
            << non_prime.size() << " non-prime edge(s):";
        for (const auto& e : non_prime) err << ' ' << edge_str(e);
        err << '\n';
      }
      if (out_file.empty()) {
        write_labeling(out, labeling);
        return kOk;
      }
      save_labeling(out_file, labeling);
      if (format == Format::Json) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : non_prime) edges.push_back({e.u, e.v});
        out << nlohmann::json{{"file", out_file},
                              {"bipartite", bipartite},
                              {"level", bipartite ? "prime" : "arithmetic"},
                              {"non_prime_edges", edges}}
                   .dump()
            << '\n';
      } else {
        out << "wrote " << out_file << ": level=" << (bipartite ? "prime" : "arithmetic")
            << " non_prime=" << non_prime.size() << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const Graph g = load_edge_list(graph_file);
      const Labeling labeling = load_labeling(label_file);
      const auto report = verify(g, labeling, *parse_level(level_name));
      if (format == Format::Json) {
        out << to_json(report).dump() << '\n';
      } else if (format == Format::Csv) {
        out << "kind,element,detail\n";
        for (const auto& v : report.violations) {
          out << to_string(v.kind) << ',' << element_name(v.element) << ',' << v.detail << '\n';
        }
      } else {
        out << to_text(report);
      }
      return report.passed ? kOk : kCheckFailed;
    }

    if (dispense_cmd->parsed()) {
      const Graph g = load_edge_list(graph_file);
      DispenseOptions options;
      options.method = *parse_method(method_name);
      options.ceiling = ceiling;
      print_dispense(out, format, dispensing_exact(g, options));
      return kOk;
    }

    if (audit_cmd->parsed()) {
      spec.families = families;
      spec.solver.method = *parse_method(method_name);
      spec.solver.ceiling = ceiling;
      const auto report = audit(spec);
      if (format == Format::Json) {
        out << to_json(report).dump() << '\n';
      } else if (format == Format::Csv) {
        out << to_csv(report);
      } else {
        out << to_text(report);
      }
      if (report.mismatches() > 0) return kCheckFailed;
      return report.errors() > 0 ? kSizeLimit : kOk;
    }
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace primeiasi::cli
