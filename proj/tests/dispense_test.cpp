#include "primeiasi/dispense.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "primeiasi/error.hpp"
#include "primeiasi/generators.hpp"
#include "primeiasi/maxcut.hpp"
#include "primeiasi/random.hpp"

using namespace primeiasi;

namespace {

DispenseOptions with(Method method, bool decompose = true) {
  DispenseOptions o;
  o.method = method;
  o.decompose = decompose;
  return o;
}

// Lexicographically smallest optimal assignment by plain enumeration in
// lexicographic order (vertex 0 most significant).
std::vector<Side> lexmin_optimum(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t best = oracle::max_cut(g);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::vector<Side> sides(n);
    for (std::size_t v = 0; v < n; ++v) sides[v] = ((code >> (n - 1 - v)) & 1U) ? Side::Y : Side::X;
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) crossing += sides[e.u] != sides[e.v];
    if (crossing == best) return sides;
  }
  return {};
}

void check_result(const Graph& g, const DispensingResult& r) {
  ASSERT_EQ(r.witness.side.size(), g.vertex_count());
  EXPECT_EQ(r.theta, r.removed_edges.size());
  EXPECT_EQ(r.kept_edges.size() + r.removed_edges.size(), g.edge_count());
  for (const auto& e : r.kept_edges) EXPECT_TRUE(r.witness.separates(e));
  for (const auto& e : r.removed_edges) EXPECT_FALSE(r.witness.separates(e));
  EXPECT_TRUE(bipartition(g.edge_subgraph(r.kept_edges)));
}

}  // namespace

TEST(MaxCut, SolversMatchOracleAndEachOther) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(1, 11));
    const Graph g = gen::random_graph(n, rng.between(1, 4), 5, seed);
    const auto brute = brute_max_cut(g);
    const auto bnb = bnb_max_cut(g);
    EXPECT_EQ(brute.value, oracle::max_cut(g)) << seed;
    EXPECT_EQ(bnb.value, brute.value) << seed;
    const auto lex = lexmin_optimum(g);
    EXPECT_EQ(brute.sides, lex) << seed;
    EXPECT_EQ(bnb.sides, lex) << seed;
  }
}

TEST(MaxCut, SizeLimits) {
  EXPECT_THROW(brute_max_cut(gen::path(31)), SizeLimitExceeded);
  EXPECT_THROW(bnb_max_cut(gen::path(65)), SizeLimitExceeded);
  EXPECT_EQ(brute_max_cut(Graph()).value, 0u);
  EXPECT_EQ(bnb_max_cut(Graph(1, {})).value, 0u);
}

TEST(DispensingExact, Examples) {
  EXPECT_EQ(dispensing_exact(gen::cycle(7)).theta, 1u);
  EXPECT_EQ(dispensing_exact(gen::complete(6)).theta, 6u);
  // Frozen from the exhaustive oracle over 2^9 assignments.
  const Graph p = gen::petersen();
  EXPECT_EQ(oracle::dispensing(p), 3u);
  for (Method m : {Method::Auto, Method::Brute, Method::BranchAndBound}) {
    const auto r = dispensing_exact(p, with(m));
    EXPECT_EQ(r.theta, 3u);
    check_result(p, r);
  }
}

TEST(DispensingExact, MethodNames) {
  EXPECT_EQ(dispensing_exact(gen::cycle(5)).method, "brute");
  EXPECT_EQ(dispensing_exact(gen::cycle(5), with(Method::BranchAndBound)).method, "branch_and_bound");
  EXPECT_EQ(dispensing_exact(gen::complete(22)).method, "branch_and_bound");
  EXPECT_EQ(parse_method("bnb"), Method::BranchAndBound);
  EXPECT_FALSE(parse_method("sdp"));
}

TEST(DispensingExact, ZeroIffBipartite) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      EXPECT_EQ(dispensing_exact(g).theta == 0, bipartition(g).has_value());
    }
  }
}

TEST(DispensingExact, DecompositionAgreesWithMonolithicSearch) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(2, 14));
    const Graph g = gen::random_graph(n, 1, static_cast<std::uint64_t>(rng.between(3, 8)), seed);
    const auto split = dispensing_exact(g);
    const auto whole = dispensing_exact(g, with(Method::Brute, false));
    EXPECT_EQ(split.theta, whole.theta) << seed;
    EXPECT_EQ(whole.theta, oracle::dispensing(g)) << seed;
    check_result(g, split);
    check_result(g, whole);
    // Without decomposition the witness is the global lexicographic optimum.
    EXPECT_EQ(whole.witness.side, lexmin_optimum(g)) << seed;
  }
}

TEST(DispensingExact, WitnessIndependentOfMethod) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen::random_graph(12, 1, 2, seed);
    const auto a = dispensing_exact(g, with(Method::Brute));
    const auto b = dispensing_exact(g, with(Method::BranchAndBound));
    EXPECT_EQ(a.theta, b.theta);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(DispensingExact, AdditiveOverUnionsAndBlocks) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph a = gen::random_graph(6, 1, 2, seed);
    const Graph b = gen::random_graph(7, 2, 3, seed + 100);
    const Graph u = gen::disjoint_union(a, b);
    EXPECT_EQ(dispensing_exact(u).theta, dispensing_exact(a).theta + dispensing_exact(b).theta);
    EXPECT_EQ(dispensing_exact(u).theta, oracle::dispensing(u));

    std::size_t by_blocks = 0;
    for (const auto& blk : blocks(b)) by_blocks += oracle::dispensing(b.edge_subgraph(blk));
    EXPECT_EQ(by_blocks, oracle::dispensing(b));
  }
}

TEST(DispensingExact, CeilingAndSizeLimits) {
  DispenseOptions tight;
  tight.ceiling = 5;
  EXPECT_THROW(dispensing_exact(gen::complete(6), tight), SizeLimitExceeded);
  // Blocks of a long cycle chain are small, so a tight ceiling still works.
  EXPECT_EQ(dispensing_exact(gen::path(40), tight).theta, 0u);
  EXPECT_THROW(dispensing_exact(gen::path(41), [] {
                 DispenseOptions o;
                 o.decompose = false;
                 return o;
               }()),
               SizeLimitExceeded);
  DispenseOptions brute = with(Method::Brute, false);
  brute.ceiling = 100;
  EXPECT_THROW(dispensing_exact(gen::cycle(32), brute), SizeLimitExceeded);
}

TEST(DispensingExact, LargerInstancesViaBranchAndBound) {
  EXPECT_EQ(dispensing_exact(gen::complete(12), with(Method::BranchAndBound)).theta, 30u);
  // Cactus of 40 vertices decomposes into small blocks.
  const auto c = gen::random_cactus(40, 7);
  EXPECT_EQ(dispensing_exact(c.graph).theta, c.odd_cycle_count());
  EXPECT_EQ(dispensing_exact(gen::hypercube(5), with(Method::BranchAndBound)).theta, 0u);
}

TEST(DispensingFormula, Examples) {
  const std::int64_t seven[] = {7};
  const std::int64_t three[] = {3};
  EXPECT_EQ(dispensing_formula("complete", seven), 9);
  EXPECT_EQ(dispensing_formula("cactus", three), 3);
  EXPECT_EQ(dispensing_formula("even_cycle", {}), 0);
  EXPECT_EQ(dispensing_formula("odd_cycle", seven), 1);
  const std::int64_t cliques[] = {4, 3, 2};
  EXPECT_EQ(dispensing_formula("block_graph", cliques), 2 + 1 + 0);
  const std::int64_t parts[] = {3, 4, 1};
  EXPECT_EQ(dispensing_formula("union", parts), 6);
  EXPECT_EQ(dispensing_formula("split", three), 1);
  EXPECT_EQ(dispensing_formula("eulerian", three), 3);
}

TEST(DispensingFormula, Errors) {
  const std::int64_t four[] = {4};
  EXPECT_THROW(dispensing_formula("outerplanar", four), UnknownFamily);
  EXPECT_THROW(dispensing_formula("complete", {}), InvalidParams);
  EXPECT_THROW(dispensing_formula("odd_cycle", four), InvalidParams);
  EXPECT_THROW(dispensing_formula("union", four), InvalidParams);
}

TEST(DispensingFormula, CompleteGraphsAgreeWithOracle) {
  for (std::int64_t n = 3; n <= 10; ++n) {
    const std::int64_t p[] = {n};
    EXPECT_EQ(dispensing_formula("complete", p),
              static_cast<std::int64_t>(oracle::dispensing(gen::complete(static_cast<std::size_t>(n)))));
  }
}

TEST(Audit, CompleteFamilyMatches) {
  AuditSpec spec;
  spec.families = {"complete"};
  spec.max_n = 10;
  const auto report = audit(spec);
  ASSERT_EQ(report.rows.size(), 8u);
  EXPECT_EQ(report.matches(), 8u);
  EXPECT_EQ(report.rows.front().params, "n=3");
}

TEST(Audit, FlagsKnownCounterexamples) {
  AuditSpec spec;
  spec.families = {"complete_split", "eulerian", "union"};
  spec.max_n = 5;
  const auto report = audit(spec);
  auto find = [&](const std::string& family, const std::string& params) -> const AuditRow& {
    for (const auto& r : report.rows) {
      if (r.family == family && r.params == params) return r;
    }
    throw std::runtime_error("row missing: " + family + " " + params);
  };
  const auto& split = find("complete_split", "r=3;s=1");
  EXPECT_EQ(split.formula, 1);
  EXPECT_EQ(split.exact, 2);
  EXPECT_FALSE(split.match);

  const auto& k5 = find("eulerian", "graph=K5;odd_cycles=2");
  EXPECT_EQ(k5.formula, 2);
  EXPECT_EQ(k5.exact, 4);
  EXPECT_FALSE(k5.match);

  const auto& union_k5 = find("union", "edge_disjoint;K5=C5+C5");
  EXPECT_EQ(union_k5.formula, 2);
  EXPECT_EQ(union_k5.exact, 4);
}

TEST(Audit, RecordsSizeLimitPerRow) {
  AuditSpec spec;
  spec.families = {"complete"};
  spec.max_n = 8;
  spec.solver.ceiling = 6;
  const auto report = audit(spec);
  ASSERT_EQ(report.rows.size(), 6u);
  EXPECT_EQ(report.errors(), 2u);
  EXPECT_FALSE(report.rows.back().exact);
  EXPECT_FALSE(report.rows.back().error.empty());
  EXPECT_EQ(report.matches(), 4u);
}

TEST(Audit, UnknownFamily) {
  AuditSpec spec;
  spec.families = {"sun"};
  EXPECT_THROW(audit(spec), UnknownFamily);
}

TEST(Audit, CsvAndJson) {
  AuditSpec spec;
  spec.families = {"odd_cycle"};
  spec.max_n = 5;
  const auto report = audit(spec);
  EXPECT_EQ(to_csv(report), "family,params,formula,exact,match\nodd_cycle,n=3,1,1,true\nodd_cycle,n=5,1,1,true\n");
  const auto j = to_json(report);
  EXPECT_EQ(j["summary"]["matches"], 2);
  EXPECT_EQ(j["rows"][1]["params"], "n=5");
}
