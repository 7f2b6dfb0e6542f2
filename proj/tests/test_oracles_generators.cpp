#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"
#include "twinless/digraph.hpp"
#include "twinless/errors.hpp"
#include "twinless/oracles.hpp"
#include "twinless/twinless.hpp"

using namespace twinless;
using namespace twinless::testing;

TEST(Oracles, CycleCounts) {
  const auto g = gen_cycle(5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(oracle_count_v(g, v), 3);
  for (EdgeId e = 0; e < 5; ++e) EXPECT_EQ(oracle_count_e(g, e), 4);
  EXPECT_EQ(oracle_cut_edges(g, 2), (std::vector<EdgeId>{0, 3, 4}));
}

TEST(Oracles, CliqueCounts) {
  const auto g = gen_clique(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(oracle_count_v(g, v), 0);
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(oracle_count_e(g, e), 0);
}

TEST(Oracles, ThetaCounts) {
  const auto g = gen_theta({2, 2, 2});
  EXPECT_EQ(oracle_count_v(g, 0), 3);
  EXPECT_EQ(oracle_count_v(g, 1), 3);
  for (Vertex x = 2; x < 5; ++x) EXPECT_EQ(oracle_count_v(g, x), 0);
}

TEST(Oracles, DirectedExamples) {
  const auto c4 = bidirected(gen_cycle(4));
  EXPECT_EQ(oracle_tsap(c4), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(oracle_tsb(c4).empty());
  const auto c3 = directed_cycle(3);
  EXPECT_EQ(oracle_tsap(c3), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(oracle_tsb(c3), (std::vector<EdgeId>{0, 1, 2}));
  const auto k4 = bidirected(gen_clique(4));
  EXPECT_TRUE(oracle_tsap(k4).empty());
  EXPECT_TRUE(oracle_tsb(k4).empty());
  EXPECT_EQ(oracle_sccs(make_digraph(2, {{0, 1}})).num_classes, 2);
  EXPECT_EQ(oracle_tsccs(make_digraph(2, {{0, 1}, {1, 0}})).num_classes, 2);
}

TEST(Oracles, NaiveHighOnSmallShapes) {
  const auto c5 = build_dfs_structure(gen_cycle(5));
  EXPECT_EQ(naive_high(c5), (std::vector<Vertex>{kAbsent, 0, 0, 0, 0}));
  const auto tri = build_dfs_structure(gen_cycle(3));
  EXPECT_EQ(naive_high(tri), (std::vector<Vertex>{kAbsent, 0, 0}));
}

TEST(Generators, FixedFamilies) {
  const auto c5 = gen_cycle(5);
  EXPECT_EQ(c5.num_edges(), 5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.incident(v).size(), 2u);
  EXPECT_EQ(gen_clique(4).num_edges(), 6);
  const auto theta = gen_theta({1, 3, 4});
  EXPECT_EQ(theta.num_vertices(), 2 + 0 + 2 + 3);
  EXPECT_EQ(theta.num_edges(), 8);
  EXPECT_FALSE(biconnectivity_violation(theta));
  EXPECT_EQ(directed_cycle(4).num_edges(), 4);
  EXPECT_EQ(bidirected(gen_cycle(4)).num_edges(), 8);
  EXPECT_THROW(gen_cycle(2), std::invalid_argument);
  EXPECT_THROW(gen_theta({1, 1}), std::invalid_argument);
}

TEST(Generators, RandomFamiliesSatisfyTheirProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 30);
    const EdgeId m = std::min<EdgeId>(n * (n - 1) / 2, 2 * n);
    const auto a = gen_random_2vc(n, m, seed);
    EXPECT_EQ(a.num_edges(), m);
    EXPECT_FALSE(biconnectivity_violation(a));
    const auto b = gen_random_2vc_ears(n, m, seed);
    EXPECT_EQ(b.num_edges(), m);
    EXPECT_FALSE(biconnectivity_violation(b));
    const auto c = gen_random_2ec(n, m, seed);
    EXPECT_EQ(c.num_edges(), m);
    EXPECT_FALSE(two_edge_connectivity_violation(c));
    const auto d = gen_random_sc(n, 2 * m, seed);
    EXPECT_EQ(d.num_edges(), 2 * m);
    EXPECT_TRUE(is_strongly_connected(d));
    const auto t = gen_random_twinless_sc(n, m + 2, seed);
    EXPECT_EQ(t.num_edges(), m + 2);
    EXPECT_TRUE(is_twinless_strongly_connected(t));
  }
}

TEST(Generators, SpecExampleInstance) {
  EXPECT_FALSE(biconnectivity_violation(gen_random_2vc(30, 60, 7)));
  EXPECT_TRUE(oracle_articulation_points(gen_random_2vc(30, 60, 7)).empty());
}

TEST(Generators, SeedDeterministic) {
  EXPECT_EQ(gen_random_2vc(20, 40, 3), gen_random_2vc(20, 40, 3));
  EXPECT_EQ(gen_random_2vc_ears(20, 40, 3), gen_random_2vc_ears(20, 40, 3));
  EXPECT_EQ(gen_random_2ec(20, 40, 3), gen_random_2ec(20, 40, 3));
  EXPECT_EQ(gen_random_sc(20, 40, 3), gen_random_sc(20, 40, 3));
  EXPECT_EQ(gen_random_twinless_sc(20, 40, 3), gen_random_twinless_sc(20, 40, 3));
  EXPECT_NE(gen_random_2vc(20, 40, 3), gen_random_2vc(20, 40, 4));
}

TEST(Generators, RejectInfeasibleParameters) {
  EXPECT_THROW(gen_random_2vc(5, 4, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_2vc(5, 11, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_2ec(2, 1, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_sc(4, 3, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_twinless_sc(2, 2, 1), std::invalid_argument);
}

TEST(Generators, AllGraphsEnumeration) {
  int count = 0;
  for_each_graph(4, [&](const UnGraph& g) {
    EXPECT_EQ(g.num_vertices(), 4);
    ++count;
  });
  EXPECT_EQ(count, 64);
  // Labelled 2-vertex-connected graphs on 4 vertices: 3 four-cycles, 6 with one chord, 1 clique.
  EXPECT_EQ(all_graphs(4, [](const UnGraph& g) { return !biconnectivity_violation(g); }).size(), 10u);
}

TEST(Corpus, ManifestRoundTrip) {
  Corpus c;
  c.entries = {{"cycle", 0, 5, 5}, {"2vc", 7, 30, 60}, {"twinless-sc", 3, 10, 20}};
  const auto text = c.manifest();
  EXPECT_EQ(Corpus::parse(text).entries, c.entries);
  EXPECT_EQ(std::get<UnGraph>(generate(c.entries[0])), gen_cycle(5));
  EXPECT_EQ(std::get<UnGraph>(generate(c.entries[1])), gen_random_2vc(30, 60, 7));
  EXPECT_EQ(std::get<Digraph>(generate(c.entries[2])), gen_random_twinless_sc(10, 20, 3));
}

TEST(Corpus, ParseErrors) {
  EXPECT_THROW(Corpus::parse("# header\ncycle 0 5\n"), GraphError);
  EXPECT_THROW(Corpus::parse("unknown 0 5 5\n"), GraphError);
  try {
    Corpus::parse("cycle 0 5 5\n\nclique x 4 6\n");
    FAIL() << "expected a parse error";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}
