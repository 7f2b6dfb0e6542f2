#pragma once

// Brute-force reference implementations. They rely only on the graph types
// and plain breadth-first search, never on the fast paths they check.

#include <array>
#include <cstdint>
#include <vector>

#include "twinless/dfs.hpp"
#include "twinless/graph.hpp"
#include "twinless/vertex_cutpairs.hpp"

namespace twinless {

// ---- undirected ----

/// Number of connected components after deleting the flagged vertices and
/// edges (either mask may be empty).
std::int32_t oracle_component_count(const UnGraph& g, const std::vector<char>& dead_vertex,
                                    const std::vector<char>& dead_edge);

/// Bridges by deleting each edge in turn.
std::vector<EdgeId> oracle_bridges(const UnGraph& g);
std::vector<Vertex> oracle_articulation_points(const UnGraph& g);
/// Partition of V by the equivalence "connected after deleting any single edge".
Partition oracle_two_edge_connected_components(const UnGraph& g);

/// Edges e not incident to v with G \ {v, e} disconnected, ascending.
std::vector<EdgeId> oracle_cut_edges(const UnGraph& g, Vertex v);
std::int64_t oracle_count_v(const UnGraph& g, Vertex v);
/// Edges e' != e with G \ {e, e'} disconnected, ascending.
std::vector<EdgeId> oracle_edge_partners(const UnGraph& g, EdgeId e);
std::int64_t oracle_count_e(const UnGraph& g, EdgeId e);

// ---- DFS labels by definition, on the tree of a given structure ----

/// Labels straight from their definitions; preorder-indexed like DfsStructure.
struct NaiveLabels {
  std::vector<Vertex> low, high, high_p, m, m_p;
  std::vector<std::int32_t> b_count, b_count_parent;
};

/// Uses only d.parent and d.back_edges.
NaiveLabels naive_labels(const DfsStructure& d);
/// The simple high-point computation: back edges by decreasing lower end,
/// each labelling the unlabelled vertices on its tree path.
std::vector<Vertex> naive_high(const DfsStructure& d);

/// Tallies of the oracle's cut-pairs {v, e} by the case they fall into,
/// classified from NaiveLabels. Indexed [case][graph vertex id].
std::array<std::vector<std::int64_t>, kVertexCutCases> oracle_case_counts(const UnGraph& g,
                                                                          const DfsStructure& d);

// ---- directed ----

/// SCCs by mutual reachability.
Partition oracle_sccs(const Digraph& g);
std::vector<Vertex> brute_force_strong_articulation_points(const Digraph& g);
std::vector<EdgeId> brute_force_strong_bridges(const Digraph& g);

/// Twinless strongly connected components: SCC classes split by the bridges
/// of the underlying graph of intra-SCC edges.
Partition oracle_tsccs(const Digraph& g);
/// Vertices v whose deletion splits some TSCC of g between two surviving
/// vertices (for twinless strongly connected g: G \ v has more than one TSCC).
std::vector<Vertex> oracle_tsap(const Digraph& g);
/// Edges whose deletion increases the number of TSCCs.
std::vector<EdgeId> oracle_tsb(const Digraph& g);
std::int32_t oracle_tscc_count_without_vertex(const Digraph& g, Vertex v);
std::int32_t oracle_tscc_count_without_edge(const Digraph& g, EdgeId e);

}  // namespace twinless
