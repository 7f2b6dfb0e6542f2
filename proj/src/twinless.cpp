#include "twinless/twinless.hpp"

#include <stdexcept>

#include <json.hpp>

#include "twinless/edge_cutpairs.hpp"
#include "twinless/undirected.hpp"
#include "twinless/vertex_cutpairs.hpp"

namespace twinless {
namespace {

void require_twinless(const Digraph& g) {
  if (auto w = twinless_connectivity_violation(g)) {
    throw PreconditionError("graph is not twinless strongly connected", *w);
  }
}

// count(v) inside v's block of the underlying graph; kAbsent (-1) for
// articulation points, which lie in several blocks.
std::vector<std::int64_t> block_vertex_counts(const UnGraph& gu) {
  const Vertex n = gu.num_vertices();
  const BlockForest forest = block_forest(gu);
  std::vector<std::int64_t> count(n, 0);
  for (const Vertex a : forest.articulation_points) count[a] = kAbsent;

  std::vector<Vertex> local(n, kAbsent);
  for (std::size_t b = 0; b < forest.blocks.size(); ++b) {
    const auto& members = forest.blocks[b];
    if (members.size() < 3) continue;
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(forest.block_edges[b].size());
    for (const EdgeId e : forest.block_edges[b]) {
      edges.push_back({local[gu.edge(e).u], local[gu.edge(e).v]});
    }
    const auto report = count_vertex_cutpairs(UnGraph(static_cast<Vertex>(members.size()), std::move(edges)));
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (count[members[i]] != kAbsent) count[members[i]] = report.count[i];
    }
  }
  return count;
}

std::vector<FlaggedEdge> flag_bridges(const Digraph& g, const Underlying& u,
                                      const std::vector<EdgeId>& strong) {
  const auto edge_count = count_edge_cutpairs(u.graph).count;
  std::vector<char> is_strong(g.num_edges(), 0);
  for (const EdgeId e : strong) is_strong[e] = 1;
  std::vector<FlaggedEdge> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EdgeId ue = u.undirected_of[e];
    if (is_strong[e]) {
      out.push_back({e, TwinlessKind::kStrong, std::nullopt});
    } else if (u.sources[ue][1] == kAbsent && edge_count[ue] >= 1) {
      out.push_back({e, TwinlessKind::kTwinlessOnly, edge_count[ue] + 1});
    }
  }
  return out;
}

std::vector<FlaggedVertex> flag_articulation_points(const Digraph& g, const Underlying& u,
                                                    const std::vector<Vertex>& strong) {
  const auto count = block_vertex_counts(u.graph);
  std::vector<char> is_strong(g.num_vertices(), 0);
  for (const Vertex v : strong) is_strong[v] = 1;
  std::vector<FlaggedVertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (is_strong[v]) {
      out.push_back({v, TwinlessKind::kStrong, std::nullopt});
    } else if (count[v] == kAbsent) {
      throw std::logic_error("articulation point of the underlying graph is not a strong articulation point");
    } else if (count[v] >= 1) {
      out.push_back({v, TwinlessKind::kTwinlessOnly, count[v] + 1});
    }
  }
  return out;
}

}  // namespace

std::optional<Witness> twinless_connectivity_violation(const Digraph& g) {
  if (auto w = strong_connectivity_violation(g)) return w;
  return two_edge_connectivity_violation(underlying(g).graph);
}

Partition tsccs(const Digraph& g) {
  const auto scc = sccs(g);
  const Underlying u = underlying(g);
  std::vector<Edge> inner;
  for (const auto& e : u.graph.edges()) {
    if (scc.class_of[e.u] == scc.class_of[e.v]) inner.push_back(e);
  }
  return two_edge_connected_components(UnGraph(g.num_vertices(), std::move(inner)));
}

std::vector<FlaggedEdge> twinless_strong_bridges(const Digraph& g, Method method) {
  require_twinless(g);
  return flag_bridges(g, underlying(g), strong_bridges(g, method));
}

std::vector<FlaggedVertex> twinless_strong_articulation_points(const Digraph& g, Method method) {
  require_twinless(g);
  return flag_articulation_points(g, underlying(g), strong_articulation_points(g, method));
}

TwinlessReport analyze_twinless(const Digraph& g, Method method) {
  require_twinless(g);
  const Underlying u = underlying(g);
  TwinlessReport report;
  report.tsccs = tsccs(g);
  report.bridges = flag_bridges(g, u, strong_bridges(g, method));
  report.articulation_points = flag_articulation_points(g, u, strong_articulation_points(g, method));
  return report;
}

std::int64_t tscc_count_after_vertex(const Digraph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex " + std::to_string(v));
  require_twinless(g);
  for (const Vertex s : strong_articulation_points(g)) {
    if (s == v) {
      throw PreconditionError("vertex is a strong articulation point",
                              {Witness::Kind::kStrongArticulationPoint, v});
    }
  }
  return block_vertex_counts(underlying(g).graph)[v] + 1;
}

std::int64_t tscc_count_after_edge(const Digraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge " + std::to_string(e));
  require_twinless(g);
  const auto [tail, head] = g.edge(e);
  if (g.find_edge(head, tail)) {
    throw PreconditionError("edge has a twin", {Witness::Kind::kTwinPresent, tail, head, e});
  }
  for (const EdgeId s : strong_bridges(g)) {
    if (s == e) throw PreconditionError("edge is a strong bridge", {Witness::Kind::kStrongBridge, tail, head, e});
  }
  const Underlying u = underlying(g);
  return count_edge_cutpairs(u.graph).count[u.undirected_of[e]] + 1;
}

std::string to_json(const TwinlessReport& report, const Digraph& g) {
  auto kind = [](TwinlessKind k) {
    return k == TwinlessKind::kStrong ? "strong" : "twinless-only";
  };
  nlohmann::json out;
  out["tsccs"] = report.tsccs.classes();
  out["bridges"] = nlohmann::json::array();
  for (const auto& b : report.bridges) {
    nlohmann::json item{{"edge", b.edge}, {"tail", g.edge(b.edge).u}, {"head", g.edge(b.edge).v},
                        {"kind", kind(b.kind)}};
    if (b.tscc_after) item["tscc_after"] = *b.tscc_after;
    out["bridges"].push_back(std::move(item));
  }
  out["articulation_points"] = nlohmann::json::array();
  for (const auto& a : report.articulation_points) {
    nlohmann::json item{{"vertex", a.vertex}, {"kind", kind(a.kind)}};
    if (a.tscc_after) item["tscc_after"] = *a.tscc_after;
    out["articulation_points"].push_back(std::move(item));
  }
  return out.dump(2);
}

}  // namespace twinless
