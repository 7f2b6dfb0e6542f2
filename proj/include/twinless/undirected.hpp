#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twinless/errors.hpp"
#include "twinless/graph.hpp"

namespace twinless {

Partition components(const UnGraph& g);

struct BridgesAndCutVertices {
  std::vector<EdgeId> bridges;               // ascending
  std::vector<Vertex> articulation_points;   // ascending
};

BridgesAndCutVertices bridges_and_articulation_points(const UnGraph& g);

/// Classes of the "no bridge separates them" relation; in a connected graph
/// there are exactly #bridges + 1 of them.
Partition two_edge_connected_components(const UnGraph& g);

/// Blocks (maximal biconnected subgraphs, isolated vertices included as
/// single-vertex blocks) and the bipartite block/articulation-point tree.
struct BlockForest {
  std::vector<std::vector<Vertex>> blocks;      // DFS discovery order, members ascending
  std::vector<std::vector<EdgeId>> block_edges; // parallel to `blocks`
  std::vector<Vertex> articulation_points;      // ascending
  std::vector<std::pair<std::int32_t, Vertex>> tree_edges;  // (block index, articulation point)
};

BlockForest block_forest(const UnGraph& g);

/// nullopt iff g is connected and bridgeless.
std::optional<Witness> two_edge_connectivity_violation(const UnGraph& g);
/// nullopt iff g has >= 3 vertices, is connected and has no articulation point.
std::optional<Witness> biconnectivity_violation(const UnGraph& g);

}  // namespace twinless
