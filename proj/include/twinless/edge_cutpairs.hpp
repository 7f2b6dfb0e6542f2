#pragma once

#include <cstdint>
#include <vector>

#include "twinless/dfs.hpp"
#include "twinless/graph.hpp"

namespace twinless {

/// Per-edge contribution, indexed by EdgeId.
using EdgeCounts = std::vector<std::int64_t>;

/// Pairs {back edge, tree edge}: every u with b_count(u) = 1 pairs (u, p(u))
/// with the lone back edge leaving T(u) upwards. `b_cut`, if given, receives
/// those u bucketed by M(u).
EdgeCounts count_backedge_tree_pairs(const DfsStructure& d, Buckets* b_cut = nullptr);

/// Pairs of tree edges, counted group by group along each M^-1(m). `max_anchor`,
/// if given, receives for every u the greatest member of u's group.
EdgeCounts count_tree_tree_pairs(const DfsStructure& d, const InverseLists& inv,
                                 std::vector<Vertex>* max_anchor = nullptr);

/// count(e) = #{e' : G \ {e, e'} is disconnected} for every edge of a
/// 2-edge-connected graph, with the data needed to list the partners of e.
struct EdgeCutPairReport {
  std::vector<std::int64_t> count;  // by EdgeId

  // Query support; preorder-indexed.
  DfsStructure dfs;
  InverseLists inv;
  Buckets b_cut;
  std::vector<Vertex> max_anchor;
  std::vector<Vertex> tree_child;  // by EdgeId: u for the tree edge (u, p(u)), else kAbsent
  std::vector<std::int32_t> back_index;  // by EdgeId: index into dfs.back_edges, else -1
};

/// Throws PreconditionError (bridge or unreached vertex) unless g is
/// 2-edge-connected.
EdgeCutPairReport count_edge_cutpairs(const UnGraph& g, Vertex root = 0);

/// Every e' with {e, e'} a cut-pair, ascending by edge id. Throws GraphError
/// for an unknown edge id.
std::vector<EdgeId> query_cut_edges_for_edge(const EdgeCutPairReport& report, EdgeId e);

}  // namespace twinless
