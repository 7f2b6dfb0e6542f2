#pragma once

#include <optional>
#include <vector>

#include "twinless/errors.hpp"
#include "twinless/graph.hpp"

namespace twinless {

/// Strongly connected components (iterative Tarjan).
Partition sccs(const Digraph& g);

/// nullopt iff g is strongly connected; otherwise names a vertex that is not
/// mutually reachable with vertex 0.
std::optional<Witness> strong_connectivity_violation(const Digraph& g);
inline bool is_strongly_connected(const Digraph& g) { return !strong_connectivity_violation(g); }

/// Immediate dominators of the flow graph (g, start). idom[start] and
/// idom[x] for x unreachable from start are kAbsent.
struct DominatorTree {
  Vertex start = 0;
  std::vector<Vertex> idom;
  std::vector<Vertex> preorder;  // of the dominator tree, reachable vertices only
  std::vector<std::int32_t> number;  // position in `preorder`, -1 if unreachable
  std::vector<std::int32_t> subtree_size;  // indexed by vertex

  /// a dominates b (reflexive).
  bool dominates(Vertex a, Vertex b) const {
    return number[a] >= 0 && number[b] >= number[a] && number[b] < number[a] + subtree_size[a];
  }
};

/// Lengauer-Tarjan with path compression.
DominatorTree dominators(const Digraph& g, Vertex start);

enum class Method {
  kDominators,  // near-linear, via dominator trees of g and its reverse
  kBruteForce,  // delete each item and recount components
};

/// Both require g strongly connected and throw PreconditionError otherwise.
std::vector<Vertex> strong_articulation_points(const Digraph& g, Method method = Method::kDominators);
std::vector<EdgeId> strong_bridges(const Digraph& g, Method method = Method::kDominators);

struct StrongConnectivityReport {
  Partition sccs;
  std::vector<EdgeId> strong_bridges;            // ascending
  std::vector<Vertex> strong_articulation_points; // ascending
};

StrongConnectivityReport analyze_strong_connectivity(const Digraph& g,
                                                     Method method = Method::kDominators);

}  // namespace twinless
