#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinless/errors.hpp"
#include "twinless/graph.hpp"
#include "twinless/types.hpp"

namespace twinless {

/// A non-tree edge, oriented from the descendant end to the ancestor end.
/// Endpoints are preorder numbers, so `to < from`.
struct BackEdge {
  Vertex from;
  Vertex to;
  EdgeId id;
};

/// Operation counters from the label computations.
struct LabelStats {
  std::int64_t high_links = 0;
  std::int64_t high_finds = 0;
  std::int64_t high_p_links = 0;
  std::int64_t high_p_finds = 0;
  // FindM: vertices visited (calls plus descents) and L/R pointer moves.
  std::int64_t m_visits = 0;
  std::int64_t m_pointer_moves = 0;
  std::int64_t m_p_visits = 0;
  std::int64_t m_p_pointer_moves = 0;
};

/// DFS tree of a connected undirected graph with the per-vertex labels used
/// by the cut-pair algorithms.
///
/// Every array is indexed by preorder number (the root is 0) and every stored
/// vertex is a preorder number; `vertex_of` / `number_of` translate to and
/// from the graph's own ids. Labels that are undefined at a vertex hold
/// kAbsent.
///
///   low(v)    minimum vertex hit by a back edge leaving T(v) (v if none)
///   l(v)      minimum vertex hit by a back edge leaving v itself (v if none)
///   high(v)   maximum proper ancestor of v hit by a back edge from T(v)
///   high_p(v) same, restricted to proper ancestors of p(v)
///   M(v)      nearest common ancestor of the sources of back edges leaving
///             T(v) for proper ancestors of v
///   M_p(v)    same, for back edges reaching proper ancestors of p(v)
///   up(v)     back edges leaving v upwards
///   down(v)   back edges from T(v) that end in v
///   b_count(v)        back edges from T(v) to proper ancestors of v
///   b_count_parent(v) back edges from T(v) to proper ancestors of p(v)
struct DfsStructure {
  Vertex n = 0;
  Vertex root_vertex = 0;
  std::vector<Vertex> vertex_of;
  std::vector<Vertex> number_of;

  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<std::int32_t> subtree_size;
  Buckets children;  // increasing preorder
  std::vector<BackEdge> back_edges;

  std::vector<Vertex> low;
  std::vector<Vertex> l;
  std::vector<EdgeId> l_edge;  // back edge realising l(v), kAbsent if l(v) = v
  std::vector<std::int32_t> up;
  std::vector<std::int32_t> down;
  std::vector<std::int32_t> down_from;  // down(p(c), c): back edges from T(c) ending in p(c)

  std::vector<Vertex> high;
  std::vector<Vertex> high_p;
  std::vector<Vertex> m;
  std::vector<Vertex> m_p;
  std::vector<std::int32_t> b_count;
  std::vector<std::int32_t> b_count_parent;

  LabelStats stats;

  bool is_ancestor(Vertex a, Vertex d) const { return a <= d && d < a + subtree_size[a]; }
};

/// Iterative DFS from `root`: tree, preorder numbering, back edges, low, l,
/// up and down. Throws PreconditionError naming an unreached vertex when g is
/// disconnected.
DfsStructure run_dfs(const UnGraph& g, Vertex root = 0);

/// Fills `high` with the link/find sweep over back edges taken in decreasing
/// order of their lower end.
void compute_high(DfsStructure& d);
/// As compute_high, but a vertex u is labelled only while p(u) lies strictly
/// below the back edge's lower end.
void compute_high_p(DfsStructure& d);
/// Fills `m` bottom-up with FindM. Requires low and l.
void compute_m(DfsStructure& d);
/// Fills `m_p`; requires `m`.
void compute_m_p(DfsStructure& d);
void compute_b_count(DfsStructure& d);

/// Smallest-id articulation point of the searched graph, from low.
std::optional<Witness> articulation_point_witness(const DfsStructure& d);
/// Smallest-id bridge of the searched graph, from low.
std::optional<Witness> bridge_witness(const DfsStructure& d, const UnGraph& g);

/// Every label computation on the result of run_dfs.
void compute_labels(DfsStructure& d);

/// run_dfs followed by every label computation.
DfsStructure build_dfs_structure(const UnGraph& g, Vertex root = 0);

/// Bucket-sorted inverse label lists.
struct InverseLists {
  Buckets m_inv;               // M^-1(x), decreasing
  Buckets m_p_inv;             // M_p^-1(x), decreasing
  Buckets high_inv;            // high^-1(x), increasing
  Buckets children_by_high_p;  // children of x by decreasing high_p; undefined high_p last
  std::vector<std::int32_t> m_inv_pos;  // index of u in m_inv.items, -1 if M(u) undefined
};

InverseLists build_inverse_lists(const DfsStructure& d);

/// One line per vertex in preorder: "v p low l high high_p M M_p" using the
/// graph's own vertex ids, '-' for undefined.
std::string dump_labels(const DfsStructure& d);

}  // namespace twinless
