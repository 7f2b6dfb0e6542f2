#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "twinless/dfs.hpp"
#include "twinless/errors.hpp"
#include "twinless/oracles.hpp"

using namespace twinless;
using namespace twinless::testing;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Vertex> span_vec(std::span<const std::int32_t> s) { return {s.begin(), s.end()}; }

std::vector<UnGraph> small_biconnected() {
  std::vector<UnGraph> out;
  for (Vertex n = 3; n <= 6; ++n) {
    for (auto& g : all_graphs(n, [](const UnGraph& h) { return !biconnectivity_violation(h); })) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Dfs, CycleLabelsMatchGoldenDump) {
  const auto g = read_graph_file(std::string(TWINLESS_TEST_DATA) + "/c5.txt");
  const auto d = build_dfs_structure(std::get<UnGraph>(g));
  EXPECT_EQ(dump_labels(d), read_file(std::string(TWINLESS_TEST_DATA) + "/c5_labels.txt"));
}

TEST(Dfs, CycleSinglePassLabels) {
  const auto d = run_dfs(gen_cycle(5));
  EXPECT_EQ(d.parent, (std::vector<Vertex>{kAbsent, 0, 1, 2, 3}));
  ASSERT_EQ(d.back_edges.size(), 1u);
  EXPECT_EQ(d.back_edges[0].from, 4);
  EXPECT_EQ(d.back_edges[0].to, 0);
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(d.low[v], 0);
  EXPECT_EQ(d.l, (std::vector<Vertex>{0, 1, 2, 3, 0}));
  EXPECT_EQ(d.up, (std::vector<std::int32_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(d.down_from[1], 1);
}

TEST(Dfs, CycleDerivedLabels) {
  const auto d = build_dfs_structure(gen_cycle(5));
  EXPECT_EQ(d.high, (std::vector<Vertex>{kAbsent, 0, 0, 0, 0}));
  EXPECT_EQ(d.high_p, (std::vector<Vertex>{kAbsent, kAbsent, 0, 0, 0}));
  EXPECT_EQ(d.m, (std::vector<Vertex>{kAbsent, 4, 4, 4, 4}));
  EXPECT_EQ(d.m_p, (std::vector<Vertex>{kAbsent, kAbsent, 4, 4, 4}));
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(d.b_count[v], 1);
  const auto inv = build_inverse_lists(d);
  EXPECT_EQ(span_vec(inv.m_inv[4]), (std::vector<Vertex>{4, 3, 2, 1}));
  EXPECT_EQ(span_vec(inv.high_inv[0]), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_TRUE(inv.m_inv[2].empty());
}

TEST(Dfs, Triangle) {
  const auto d = build_dfs_structure(gen_cycle(3));
  EXPECT_EQ(d.parent, (std::vector<Vertex>{kAbsent, 0, 1}));
  ASSERT_EQ(d.back_edges.size(), 1u);
  EXPECT_EQ(d.back_edges[0].to, 0);
  EXPECT_EQ(d.low[1], 0);
  EXPECT_EQ(d.low[2], 0);
  EXPECT_EQ(d.high_p, (std::vector<Vertex>{kAbsent, kAbsent, 0}));
}

TEST(Dfs, CliqueFromEveryRoot) {
  const auto g = gen_clique(4);
  for (Vertex root = 0; root < 4; ++root) {
    const auto d = build_dfs_structure(g, root);
    EXPECT_EQ(d.vertex_of[0], root);
    EXPECT_EQ(d.back_edges.size(), 3u);
    for (Vertex v = 1; v < 4; ++v) EXPECT_EQ(d.low[v], 0);
    // The deepest vertex has no back edge to its parent, so its high point is 1.
    EXPECT_EQ(d.high, (std::vector<Vertex>{kAbsent, 0, 1, 1}));
    EXPECT_EQ(d.high, naive_high(d));
    const auto naive = naive_labels(d);
    EXPECT_EQ(d.b_count, naive.b_count);
    EXPECT_EQ(d.b_count_parent, naive.b_count_parent);
    // The deepest vertex sends back edges to both proper ancestors of its parent.
    EXPECT_EQ(d.b_count[3], 2);
  }
}

TEST(Dfs, RejectsDisconnectedInput) {
  try {
    run_dfs(make_graph(4, {{0, 1}, {1, 2}, {2, 0}}));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness().kind, Witness::Kind::kUnreachedVertex);
    EXPECT_EQ(e.witness().a, 3);
  }
}

TEST(Dfs, PreorderNumbering) {
  for (const auto& g : random_biconnected(20, 30, 80, 41)) {
    const auto d = run_dfs(g, 2);
    EXPECT_EQ(d.vertex_of[0], 2);
    for (Vertex v = 0; v < d.n; ++v) {
      EXPECT_EQ(d.number_of[d.vertex_of[v]], v);
      if (v > 0) EXPECT_LT(d.parent[v], v);
    }
    for (const auto& b : d.back_edges) {
      EXPECT_LT(b.to, b.from);
      EXPECT_TRUE(d.is_ancestor(b.to, b.from));
    }
    EXPECT_EQ(static_cast<EdgeId>(d.back_edges.size()) + d.n - 1, g.num_edges());
  }
}

TEST(Dfs, HighMatchesNaiveOnSmallGraphs) {
  for (const auto& g : small_biconnected()) {
    const auto d = build_dfs_structure(g);
    ASSERT_EQ(d.high, naive_high(d)) << serialize(g);
  }
}

TEST(Dfs, AllLabelsMatchDefinitions) {
  auto corpus = small_biconnected();
  for (auto& g : random_biconnected(200, 60, 240, 43)) corpus.push_back(std::move(g));
  for (const auto& g : corpus) {
    const auto d = build_dfs_structure(g);
    const auto naive = naive_labels(d);
    ASSERT_EQ(d.low, naive.low) << serialize(g);
    ASSERT_EQ(d.high, naive.high) << serialize(g);
    ASSERT_EQ(d.high, naive_high(d)) << serialize(g);
    ASSERT_EQ(d.high_p, naive.high_p) << serialize(g);
    ASSERT_EQ(d.m, naive.m) << serialize(g);
    ASSERT_EQ(d.m_p, naive.m_p) << serialize(g);
    ASSERT_EQ(d.b_count, naive.b_count) << serialize(g);
    ASSERT_EQ(d.b_count_parent, naive.b_count_parent) << serialize(g);
  }
}

TEST(Dfs, LabelOrdering) {
  for (const auto& g : random_biconnected(50, 40, 150, 47)) {
    const auto d = build_dfs_structure(g);
    for (Vertex v = 1; v < d.n; ++v) {
      EXPECT_LT(d.high[v], v);
      EXPECT_TRUE(d.is_ancestor(v, d.m[v]));
      if (d.l[v] < v) EXPECT_EQ(d.m[v], v);
      if (d.high_p[v] != kAbsent) EXPECT_LE(d.high_p[v], d.high[v]);
    }
  }
}

TEST(Dfs, LinkCountIsOneLessThanVertexCount) {
  for (const auto& g : random_biconnected(40, 60, 240, 53)) {
    const auto a = build_dfs_structure(g);
    EXPECT_EQ(a.stats.high_links, a.n - 1);
    const auto b = build_dfs_structure(g);
    EXPECT_EQ(a.stats.high_finds, b.stats.high_finds);
    EXPECT_EQ(a.stats.high_p_finds, b.stats.high_p_finds);
  }
}

TEST(Dfs, FindMIsAmortizedLinear) {
  for (const auto& g : random_biconnected(60, 60, 240, 59)) {
    const auto d = build_dfs_structure(g);
    EXPECT_LE(d.stats.m_visits, 2 * static_cast<std::int64_t>(d.n));
    EXPECT_LE(d.stats.m_pointer_moves, d.n - 1);
    EXPECT_LE(d.stats.m_p_visits, 2 * static_cast<std::int64_t>(d.n));
    EXPECT_LE(d.stats.m_p_pointer_moves, d.n - 1);
  }
}

// If v is an ancestor of u and M(v) lies in T(u), then M(v) lies in T(M(u)).
TEST(Dfs, NestedMLabels) {
  for (const auto& g : random_biconnected(40, 40, 160, 61)) {
    const auto d = build_dfs_structure(g);
    for (Vertex u = 1; u < d.n; ++u) {
      for (Vertex v = 1; v <= u; ++v) {
        if (!d.is_ancestor(v, u)) continue;
        if (d.is_ancestor(u, d.m[v])) EXPECT_TRUE(d.is_ancestor(d.m[u], d.m[v]));
        if (d.m_p[v] != kAbsent && d.m_p[u] != kAbsent && d.is_ancestor(u, d.m_p[v])) {
          EXPECT_TRUE(d.is_ancestor(d.m_p[u], d.m_p[v]));
        }
      }
    }
  }
}

TEST(Dfs, InverseListsAreConsistent) {
  for (const auto& g : random_biconnected(30, 40, 160, 67)) {
    const auto d = build_dfs_structure(g);
    const auto inv = build_inverse_lists(d);
    auto check = [&](const Buckets& b, const std::vector<Vertex>& label, bool decreasing) {
      std::int64_t total = 0;
      for (Vertex x = 0; x < d.n; ++x) {
        const auto list = b[x];
        total += static_cast<std::int64_t>(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
          EXPECT_EQ(label[list[i]], x);
          if (i > 0) EXPECT_EQ(list[i - 1] > list[i], decreasing);
        }
      }
      std::int64_t defined = 0;
      for (auto x : label) defined += x != kAbsent;
      EXPECT_EQ(total, defined);
    };
    check(inv.m_inv, d.m, true);
    check(inv.m_p_inv, d.m_p, true);
    check(inv.high_inv, d.high, false);
    for (Vertex u = 0; u < d.n; ++u) {
      if (inv.m_inv_pos[u] >= 0) EXPECT_EQ(inv.m_inv.items[inv.m_inv_pos[u]], u);
    }
    for (Vertex x = 0; x < d.n; ++x) {
      const auto kids = inv.children_by_high_p[x];
      EXPECT_EQ(kids.size(), d.children[x].size());
      for (std::size_t i = 1; i < kids.size(); ++i) {
        const Vertex a = d.high_p[kids[i - 1]], b = d.high_p[kids[i]];
        if (b != kAbsent) EXPECT_GE(a, b);
      }
    }
  }
}
