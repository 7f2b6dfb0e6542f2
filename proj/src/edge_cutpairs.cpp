#include "twinless/edge_cutpairs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twinless/errors.hpp"

namespace twinless {
namespace {

std::size_t edge_total(const DfsStructure& d) {
  return static_cast<std::size_t>(d.n - 1) + d.back_edges.size();
}

}  // namespace

EdgeCounts count_backedge_tree_pairs(const DfsStructure& d, Buckets* b_cut) {
  EdgeCounts count(edge_total(d), 0);
  std::vector<Vertex> key(d.n, kAbsent);
  for (Vertex u = 1; u < d.n; ++u) {
    if (d.b_count[u] != 1) continue;
    const Vertex m = d.m[u];
    if (m == kAbsent || d.l_edge[m] == kAbsent) throw std::logic_error("escaping back edge not found");
    ++count[d.parent_edge[u]];
    ++count[d.l_edge[m]];
    key[u] = m;
  }
  if (b_cut) {
    std::vector<std::int32_t> order(d.n);
    std::iota(order.begin(), order.end(), 0);
    *b_cut = bucket_by_key(key, order, static_cast<std::size_t>(d.n));
  }
  return count;
}

EdgeCounts count_tree_tree_pairs(const DfsStructure& d, const InverseLists& inv,
                                 std::vector<Vertex>* max_anchor) {
  EdgeCounts count(edge_total(d), 0);
  if (max_anchor) max_anchor->assign(d.n, kAbsent);
  for (Vertex m = 0; m < d.n; ++m) {
    const auto us = inv.m_inv[m];
    std::size_t i = 0;
    while (i < us.size()) {
      const Vertex u = us[i];
      const Vertex h = d.high[u];
      std::size_t j = i + 1;
      while (j < us.size() && h < us[j]) ++j;
      const auto n_edges = static_cast<std::int64_t>(j - i - 1);
      for (std::size_t k = i; k < j; ++k) {
        count[d.parent_edge[us[k]]] += n_edges;
        if (max_anchor) (*max_anchor)[us[k]] = u;
      }
      i = j;
    }
  }
  return count;
}

EdgeCutPairReport count_edge_cutpairs(const UnGraph& g, Vertex root) {
  constexpr const char* kWhat = "graph is not 2-edge-connected";
  EdgeCutPairReport report;
  try {
    report.dfs = run_dfs(g, root);
  } catch (const PreconditionError& e) {
    throw PreconditionError(kWhat, e.witness());
  }
  if (auto w = bridge_witness(report.dfs, g)) throw PreconditionError(kWhat, *w);
  compute_labels(report.dfs);
  report.inv = build_inverse_lists(report.dfs);
  const auto& d = report.dfs;

  report.count = count_backedge_tree_pairs(d, &report.b_cut);
  const auto tree = count_tree_tree_pairs(d, report.inv, &report.max_anchor);
  for (std::size_t e = 0; e < tree.size(); ++e) report.count[e] += tree[e];

  report.tree_child.assign(g.num_edges(), kAbsent);
  report.back_index.assign(g.num_edges(), -1);
  for (Vertex u = 1; u < d.n; ++u) report.tree_child[d.parent_edge[u]] = u;
  for (std::size_t i = 0; i < d.back_edges.size(); ++i) {
    report.back_index[d.back_edges[i].id] = static_cast<std::int32_t>(i);
  }
  return report;
}

std::vector<EdgeId> query_cut_edges_for_edge(const EdgeCutPairReport& report, EdgeId e) {
  if (e < 0 || e >= static_cast<EdgeId>(report.count.size())) {
    throw GraphError("unknown edge " + std::to_string(e));
  }
  const auto& d = report.dfs;
  std::vector<EdgeId> out;
  if (const Vertex u = report.tree_child[e]; u != kAbsent) {
    if (d.b_count[u] == 1) out.push_back(d.l_edge[d.m[u]]);
    const Vertex top = report.max_anchor[u];
    if (top != kAbsent) {
      const auto& items = report.inv.m_inv.items;
      const auto end = report.inv.m_inv.offsets[d.m[u] + 1];
      const Vertex h = d.high[top];
      for (auto i = report.inv.m_inv_pos[top]; i < end && items[i] > h; ++i) {
        if (items[i] != u) out.push_back(d.parent_edge[items[i]]);
      }
    }
  } else {
    const auto& b = d.back_edges[report.back_index[e]];
    if (b.to == d.low[b.from]) {
      for (const Vertex w : report.b_cut[b.from]) out.push_back(d.parent_edge[w]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twinless
