#include <gtest/gtest.h>

#include "support.hpp"
#include "twinless/oracles.hpp"
#include "twinless/undirected.hpp"

using namespace twinless;
using namespace twinless::testing;

TEST(Components, Basics) {
  EXPECT_EQ(components(gen_cycle(3)).num_classes, 1);
  EXPECT_EQ(components(make_graph(4, {{0, 1}, {2, 3}})).num_classes, 2);
  const auto s = without(gen_cycle(5), {{2}, {4}});
  EXPECT_EQ(components(s.graph).num_classes, 2);
  EXPECT_EQ(components(UnGraph(0, {})).num_classes, 0);
}

TEST(BridgesAndCuts, Path) {
  const auto r = bridges_and_articulation_points(make_graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(r.bridges, (std::vector<EdgeId>{0, 1}));
  EXPECT_EQ(r.articulation_points, (std::vector<Vertex>{1}));
}

TEST(BridgesAndCuts, CycleHasNeither) {
  const auto r = bridges_and_articulation_points(gen_cycle(7));
  EXPECT_TRUE(r.bridges.empty());
  EXPECT_TRUE(r.articulation_points.empty());
}

TEST(BridgesAndCuts, Bowtie) {
  const auto r = bridges_and_articulation_points(bowtie());
  EXPECT_TRUE(r.bridges.empty());
  EXPECT_EQ(r.articulation_points, (std::vector<Vertex>{2}));
}

TEST(BridgesAndCuts, MatchesBruteForceOnAllSmallGraphs) {
  for (Vertex n = 1; n <= 5; ++n) {
    for_each_graph(n, [](const UnGraph& g) {
      const auto r = bridges_and_articulation_points(g);
      ASSERT_EQ(r.bridges, oracle_bridges(g)) << serialize(g);
      ASSERT_EQ(r.articulation_points, oracle_articulation_points(g)) << serialize(g);
    });
  }
}

TEST(BridgesAndCuts, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    // Sparse random graphs, possibly disconnected.
    const auto g = gen_random_2ec(12, 14, seed);
    const auto h = without(g, {{static_cast<Vertex>(seed % 12)}, {static_cast<EdgeId>(seed % 5)}}).graph;
    const auto r = bridges_and_articulation_points(h);
    EXPECT_EQ(r.bridges, oracle_bridges(h));
    EXPECT_EQ(r.articulation_points, oracle_articulation_points(h));
  }
}

TEST(TwoEdgeComponents, Examples) {
  EXPECT_EQ(two_edge_connected_components(make_graph(3, {{0, 1}, {1, 2}})).num_classes, 3);
  EXPECT_EQ(two_edge_connected_components(gen_cycle(5)).num_classes, 1);
  const auto p = two_edge_connected_components(barbell());
  EXPECT_EQ(p.num_classes, 2);
  EXPECT_EQ(p.classes(), (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(TwoEdgeComponents, ClassCountIsBridgesPlusOne) {
  for (Vertex n = 2; n <= 5; ++n) {
    for_each_graph(n, [](const UnGraph& g) {
      if (components(g).num_classes != 1) return;
      const auto p = two_edge_connected_components(g);
      EXPECT_EQ(p.num_classes, static_cast<std::int32_t>(bridges_and_articulation_points(g).bridges.size()) + 1);
      EXPECT_EQ(p, oracle_two_edge_connected_components(g));
    });
  }
}

TEST(BlockForest, Triangle) {
  const auto f = block_forest(gen_cycle(3));
  ASSERT_EQ(f.blocks.size(), 1u);
  EXPECT_EQ(f.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(f.articulation_points.empty());
  EXPECT_TRUE(f.tree_edges.empty());
}

TEST(BlockForest, Bowtie) {
  const auto f = block_forest(bowtie());
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(f.blocks[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(f.articulation_points, (std::vector<Vertex>{2}));
  EXPECT_EQ(f.tree_edges.size(), 2u);
}

TEST(BlockForest, Path) {
  const auto f = block_forest(make_graph(3, {{0, 1}, {1, 2}}));
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(f.blocks[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(f.articulation_points, (std::vector<Vertex>{1}));
}

TEST(BlockForest, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_random_2ec(15, 22, seed);
    const auto f = block_forest(g);
    const auto bridges = bridges_and_articulation_points(g).bridges;
    std::vector<int> edge_hits(g.num_edges(), 0), vertex_blocks(g.num_vertices(), 0);
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
      for (auto e : f.block_edges[b]) ++edge_hits[e];
      for (auto v : f.blocks[b]) ++vertex_blocks[v];
      if (f.blocks[b].size() >= 3) {
        for (auto e : f.block_edges[b]) {
          EXPECT_FALSE(std::binary_search(bridges.begin(), bridges.end(), e));
        }
      }
    }
    for (auto h : edge_hits) EXPECT_EQ(h, 1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const bool cut = std::binary_search(f.articulation_points.begin(), f.articulation_points.end(), v);
      EXPECT_EQ(vertex_blocks[v] >= 2, cut);
    }
    // Connected input: the block tree has #blocks + #cuts - 1 edges.
    EXPECT_EQ(f.tree_edges.size(), f.blocks.size() + f.articulation_points.size() - 1);
  }
}

TEST(Violations, Witnesses) {
  EXPECT_FALSE(biconnectivity_violation(gen_cycle(3)));
  EXPECT_EQ(biconnectivity_violation(bowtie())->kind, Witness::Kind::kArticulationPoint);
  EXPECT_EQ(biconnectivity_violation(make_graph(2, {{0, 1}}))->kind, Witness::Kind::kTooFewVertices);
  const auto w = biconnectivity_violation(make_graph(4, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(w->kind, Witness::Kind::kUnreachedVertex);
  EXPECT_EQ(w->a, 3);
  EXPECT_FALSE(two_edge_connectivity_violation(bowtie()));
  EXPECT_EQ(two_edge_connectivity_violation(barbell())->kind, Witness::Kind::kBridge);
}
