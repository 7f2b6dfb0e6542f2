#include <gtest/gtest.h>

#include "support.hpp"
#include "twinless/errors.hpp"
#include "twinless/graph.hpp"
#include "twinless/oracles.hpp"

using namespace twinless;
using namespace twinless::testing;

TEST(Underlying, TwinPairCollapses) {
  const auto u = underlying(make_digraph(2, {{0, 1}, {1, 0}}));
  ASSERT_EQ(u.graph.num_edges(), 1);
  EXPECT_EQ(u.sources[0][0], 0);
  EXPECT_EQ(u.sources[0][1], 1);
  EXPECT_EQ(u.undirected_of, (std::vector<EdgeId>{0, 0}));
}

TEST(Underlying, DirectedTriangleBecomesTriangle) {
  const auto u = underlying(directed_cycle(3));
  EXPECT_EQ(u.graph.num_vertices(), 3);
  EXPECT_EQ(u.graph.num_edges(), 3);
  for (const auto& s : u.sources) EXPECT_EQ(s[1], kAbsent);
}

TEST(Underlying, OneTwinnedSide) {
  const auto u = underlying(make_digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}));
  EXPECT_EQ(u.graph.num_edges(), 3);
  const EdgeId ac = u.undirected_of[2];
  EXPECT_EQ(u.undirected_of[3], ac);
  EXPECT_EQ(u.sources[ac][0], 2);
  EXPECT_EQ(u.sources[ac][1], 3);
}

TEST(Induced, KeepsEdgesInsideTheSet) {
  const auto tri = gen_cycle(3);
  const std::vector<Vertex> keep{0, 1};
  const auto s = induced(tri, keep);
  EXPECT_EQ(s.graph.num_vertices(), 2);
  EXPECT_EQ(s.graph.num_edges(), 1);

  const auto c5 = gen_cycle(5);
  const std::vector<Vertex> some{0, 1, 3};  // 1-based {1,2,4}
  const auto t = induced(c5, some);
  ASSERT_EQ(t.graph.num_edges(), 1);
  EXPECT_EQ(t.parent_edge[0], 0);
  EXPECT_EQ(t.parent_vertex, some);
}

TEST(Induced, FullSetIsIdentity) {
  const auto g = gen_random_2vc(9, 15, 3);
  std::vector<Vertex> all(9);
  for (Vertex v = 0; v < 9; ++v) all[v] = v;
  const auto s = induced(g, all);
  EXPECT_EQ(s.graph, g);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(s.local_vertex[v], v);
}

TEST(Without, CycleMinusEdgeOrVertexIsPath) {
  const auto c4 = gen_cycle(4);
  const auto e = without(c4, {{}, {0}});
  EXPECT_EQ(e.graph.num_vertices(), 4);
  EXPECT_EQ(e.graph.num_edges(), 3);
  const auto v = without(c4, {{0}, {}});
  EXPECT_EQ(v.graph.num_vertices(), 3);
  EXPECT_EQ(v.graph.num_edges(), 2);
  EXPECT_EQ(v.local_vertex[0], kAbsent);
}

TEST(Without, VertexAndEdgeSplitCycle) {
  // C_5 without vertex 2 and edge {4,0}: components {0,1} and {3,4}.
  const auto c5 = gen_cycle(5);
  const auto s = without(c5, {{2}, {4}});
  EXPECT_EQ(oracle_component_count(s.graph, {}, {}), 2);
}

TEST(Without, RejectsUnknownItems) {
  const auto c4 = gen_cycle(4);
  EXPECT_THROW(without(c4, {{4}, {}}), GraphError);
  EXPECT_THROW(without(c4, {{}, {7}}), GraphError);
  EXPECT_THROW(without(directed_cycle(3), {{}, {3}}), GraphError);
}

TEST(Without, AgreesWithInducedOnComplement) {
  const auto g = gen_random_2vc(10, 20, 8);
  const auto a = without(g, {{2, 7}, {}});
  const std::vector<Vertex> rest{0, 1, 3, 4, 5, 6, 8, 9};
  EXPECT_EQ(a.graph, induced(g, rest).graph);
}

TEST(Construction, RejectsBadEdges) {
  EXPECT_THROW(make_graph(3, {{0, 0}}), GraphError);
  EXPECT_THROW(make_graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(make_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(make_digraph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(make_digraph(3, {{0, 1}, {0, 1}}), GraphError);
  EXPECT_NO_THROW(make_digraph(2, {{0, 1}, {1, 0}}));
}

TEST(Construction, IncidenceFollowsInsertionOrder) {
  const auto g = make_graph(4, {{0, 2}, {0, 1}, {3, 0}});
  const auto inc = g.incident(0);
  ASSERT_EQ(inc.size(), 3u);
  EXPECT_EQ(inc[0].to, 2);
  EXPECT_EQ(inc[1].to, 1);
  EXPECT_EQ(inc[2].to, 3);
  EXPECT_EQ(g.find_edge(3, 0), std::optional<EdgeId>(2));
  EXPECT_FALSE(g.find_edge(1, 2));
}

TEST(Parse, Triangle) {
  const auto g = parse_undirected("p u 3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g, gen_cycle(3));
}

TEST(Parse, TwinPairDigraph) {
  const auto g = parse_directed("p d 2 2\n0 1\n1 0\n");
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(1), (Edge{1, 0}));
}

TEST(Parse, CommentsBlankLinesAndCrlf) {
  const auto g = parse_undirected("# a comment\r\n\r\np u 3 2\r\n# inside\r\n0 1\r\n1 2\r\n");
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const GraphError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p u 3 3\n0 1\n0 1\n1 2\n"), 3);  // duplicate
  EXPECT_EQ(line_of("p u 3 1\n1 1\n"), 2);            // self-loop
  EXPECT_EQ(line_of("p u 3 1\n0 5\n"), 2);            // out of range
  EXPECT_EQ(line_of("q u 3 1\n0 1\n"), 1);            // header
  EXPECT_EQ(line_of("p x 3 1\n0 1\n"), 1);            // kind
  EXPECT_EQ(line_of("p u 3 1\n0 x\n"), 2);            // malformed edge
  EXPECT_GT(line_of("p u 3 2\n0 1\n"), 0);            // too few edges
  EXPECT_EQ(line_of("p u 3 1\n0 1\n1 2\n"), 3);       // too many edges
  EXPECT_EQ(line_of("p d 2 2\n0 1\n0 1\n"), 3);       // duplicate arc
}

TEST(Parse, SerializeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_2ec(12, 20, seed);
    EXPECT_EQ(parse_undirected(serialize(g)), g);
    const auto d = gen_random_twinless_sc(10, 25, seed);
    EXPECT_EQ(parse_directed(serialize(d)), d);
  }
  EXPECT_EQ(parse_undirected(serialize(UnGraph(0, {}))), UnGraph(0, {}));
}

TEST(Parse, KindMismatchIsRejected) {
  EXPECT_THROW(parse_directed("p u 2 1\n0 1\n"), GraphError);
  EXPECT_THROW(parse_undirected("p d 2 1\n0 1\n"), GraphError);
}
