#include "primeiasi/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "primeiasi/error.hpp"
#include "primeiasi/generators.hpp"
#include "primeiasi/random.hpp"

using namespace primeiasi;

namespace {

Labeling labels(std::initializer_list<APSet> sets) {
  Labeling l;
  Vertex v = 0;
  for (const auto& s : sets) l.assignment.emplace(v++, s);
  return l;
}

std::vector<std::string> kinds(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.violations) out.emplace_back(to_string(v.kind));
  std::sort(out.begin(), out.end());
  return out;
}

Labeling random_labeling(std::size_t n, Rng& rng) {
  Labeling l;
  for (Vertex v = 0; v < n; ++v) {
    const Value diffs[] = {1, 2, 3, 4, 6, 9};
    l.assignment.emplace(v, APSet{rng.between(0, 6), diffs[rng.below(6)], rng.between(2, 5)});
  }
  return l;
}

}  // namespace

TEST(Verify, ConstructedC4PassesPrime) {
  const Graph c4 = gen::cycle(4);
  const auto r = verify(c4, construct_prime_aiasi(c4), Level::Prime);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.edge_classes.size(), 4u);
}

TEST(Verify, DuplicateVertexLabel) {
  const auto r = verify(gen::path(2), labels({{0, 1, 3}, {0, 1, 3}}), Level::Iasi);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(kinds(r), (std::vector<std::string>{"duplicate-vertex-label"}));
  EXPECT_EQ(element_name(r.violations[0].element), "v1");
}

TEST(Verify, CompositeRatioFailsOnlyAtPrimeLevel) {
  const Graph k2 = gen::path(2);
  const Labeling l = labels({{0, 1, 5}, {1, 4, 3}});
  const auto prime = verify(k2, l, Level::Prime);
  EXPECT_FALSE(prime.passed);
  EXPECT_EQ(kinds(prime), (std::vector<std::string>{"non-prime-ratio"}));
  EXPECT_TRUE(verify(k2, l, Level::Arithmetic).passed);
  EXPECT_TRUE(verify(k2, l, Level::Iasi).passed);
}

TEST(Verify, ArithmeticViolations) {
  const Graph k2 = gen::path(2);
  const auto frac = verify(k2, labels({{0, 2, 3}, {1, 3, 3}}), Level::Arithmetic);
  EXPECT_EQ(kinds(frac), (std::vector<std::string>{"non-AP-edge-label", "non-integral-ratio"}));

  const auto exceeds = verify(k2, labels({{0, 1, 3}, {1, 5, 3}}), Level::Arithmetic);
  EXPECT_EQ(kinds(exceeds), (std::vector<std::string>{"non-AP-edge-label", "ratio-exceeds-size"}));
}

TEST(Verify, SmallLabelsAndDuplicateEdges) {
  const auto small = verify(gen::path(2), labels({{0, 1, 2}, {10, 1, 3}}), Level::Iasi);
  EXPECT_EQ(kinds(small), (std::vector<std::string>{"label-too-small"}));

  // Equal leaf labels on a star give equal edge labels too.
  const Graph star(3, {{0, 1}, {0, 2}});
  const auto dup = verify(star, labels({{0, 1, 3}, {0, 1, 3}, {0, 1, 3}}), Level::Iasi);
  EXPECT_EQ(kinds(dup), (std::vector<std::string>{"duplicate-edge-label", "duplicate-vertex-label",
                                                  "duplicate-vertex-label"}));
}

TEST(Verify, MissingLabel) {
  EXPECT_THROW(verify(gen::path(3), labels({{0, 1, 3}, {5, 1, 3}}), Level::Iasi), MissingVertexLabel);
  EXPECT_THROW(set_indexing_numbers(gen::path(3), labels({{0, 1, 3}})), MissingVertexLabel);
}

TEST(SetIndexingNumbers, Examples) {
  const Graph k2 = gen::path(2);
  const auto a = set_indexing_numbers(k2, labels({{0, 2, 3}, {0, 6, 3}}));
  EXPECT_EQ(a.vertices.at(0), 3);
  EXPECT_EQ(a.edges.at(Edge{0, 1}), 9);
  // {0,2,4} + {0,3,6} = {0,2,3,4,5,6,7,8,10}.
  const auto b = set_indexing_numbers(k2, labels({{0, 2, 3}, {0, 3, 3}}));
  EXPECT_EQ(b.edges.at(Edge{0, 1}), 9);
}

TEST(Verify, LevelsAreMonotone) {
  Rng rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = gen::random_graph(6, 1, 2, static_cast<std::uint64_t>(trial));
    const Labeling l = random_labeling(g.vertex_count(), rng);
    const bool prime = verify(g, l, Level::Prime).passed;
    const bool arith = verify(g, l, Level::Arithmetic).passed;
    const bool iasi = verify(g, l, Level::Iasi).passed;
    if (prime) EXPECT_TRUE(arith);
    if (arith) EXPECT_TRUE(iasi);
  }
}

TEST(Verify, InvariantUnderVertexRenaming) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 7;
    const Graph g = gen::random_graph(n, 1, 2, static_cast<std::uint64_t>(trial) + 500);
    const Labeling l = trial % 2 == 0 ? random_labeling(n, rng)
                                      : construct_min_deficiency_aiasi(
                                            g, Bipartition{std::vector<Side>(n, Side::X)})
                                            .labeling;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back(Edge::make(perm[e.u], perm[e.v]));
    const Graph pg(n, edges);
    Labeling pl;
    for (const auto& [v, ap] : l.assignment) pl.assignment.emplace(perm[v], ap);
    for (Level level : {Level::Iasi, Level::Arithmetic, Level::Prime}) {
      const auto a = verify(g, l, level);
      const auto b = verify(pg, pl, level);
      EXPECT_EQ(a.passed, b.passed);
      EXPECT_EQ(kinds(a), kinds(b));
    }
  }
}

TEST(Verify, JsonFieldNames) {
  const Graph k2 = gen::path(2);
  const auto j = to_json(verify(k2, labels({{0, 1, 5}, {1, 4, 3}}), Level::Prime));
  EXPECT_EQ(j["level_requested"], "prime");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["violations"][0]["kind"], "non-prime-ratio");
  EXPECT_EQ(j["violations"][0]["element"], "e0-1");
  EXPECT_EQ(j["edge_classes"][0]["ratio"], 4);
  EXPECT_EQ(j["edge_classes"][0]["kind"], "non-prime-integral");
  EXPECT_EQ(j["edge_label_sizes"]["0-1"], 5 + 4 * 2);
}

TEST(Level, Parse) {
  EXPECT_EQ(parse_level("arithmetic"), Level::Arithmetic);
  EXPECT_FALSE(parse_level("bogus"));
}
