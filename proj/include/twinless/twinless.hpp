#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twinless/digraph.hpp"
#include "twinless/graph.hpp"

namespace twinless {

/// nullopt iff g is strongly connected and its underlying graph is
/// 2-edge-connected (the twinless strong connectivity test).
std::optional<Witness> twinless_connectivity_violation(const Digraph& g);
inline bool is_twinless_strongly_connected(const Digraph& g) {
  return !twinless_connectivity_violation(g);
}

/// Twinless strongly connected components: each SCC split by the bridges of
/// the underlying graph of its internal edges.
Partition tsccs(const Digraph& g);

enum class TwinlessKind : std::uint8_t {
  kStrong,        // already a strong bridge / strong articulation point
  kTwinlessOnly,  // only breaks twinless strong connectivity
};

struct FlaggedVertex {
  Vertex vertex;
  TwinlessKind kind;
  /// #TSCCs of G \ v, predicted for twinless-only vertices.
  std::optional<std::int64_t> tscc_after;
};

struct FlaggedEdge {
  EdgeId edge;
  TwinlessKind kind;
  /// #TSCCs of G \ e, predicted for twinless-only edges.
  std::optional<std::int64_t> tscc_after;
};

struct TwinlessReport {
  Partition tsccs;
  std::vector<FlaggedEdge> bridges;              // ascending edge id
  std::vector<FlaggedVertex> articulation_points; // ascending vertex id
};

// The following require g twinless strongly connected and throw
// PreconditionError otherwise.

std::vector<FlaggedEdge> twinless_strong_bridges(const Digraph& g, Method method = Method::kDominators);
std::vector<FlaggedVertex> twinless_strong_articulation_points(const Digraph& g,
                                                               Method method = Method::kDominators);
TwinlessReport analyze_twinless(const Digraph& g, Method method = Method::kDominators);

/// count(v) + 1 for v not a strong articulation point, where count(v) is
/// taken in v's block of the underlying graph. Throws PreconditionError for
/// strong articulation points.
std::int64_t tscc_count_after_vertex(const Digraph& g, Vertex v);
/// count(e~) + 1 for an edge without twin that is not a strong bridge, e~
/// being its underlying edge. Throws PreconditionError otherwise.
std::int64_t tscc_count_after_edge(const Digraph& g, EdgeId e);

/// {"tsccs": [[...], ...], "bridges": [...], "articulation_points": [...]}
std::string to_json(const TwinlessReport& report, const Digraph& g);

}  // namespace twinless
