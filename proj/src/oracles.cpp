#include "twinless/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace twinless {
namespace {

std::int32_t count_components(const UnGraph& g, const std::vector<char>& dead_vertex,
                              const std::vector<char>& dead_edge) {
  const Vertex n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue;
  std::int32_t comps = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || (!dead_vertex.empty() && dead_vertex[s])) continue;
    ++comps;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (!dead_edge.empty() && dead_edge[inc.edge]) continue;
        if (!dead_vertex.empty() && dead_vertex[inc.to]) continue;
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          queue.push_back(inc.to);
        }
      }
    }
  }
  return comps;
}

// Vertices reachable from s following edges forwards (or backwards).
std::vector<char> reach(const Digraph& g, Vertex s, bool backwards) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<Vertex> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const auto& inc : backwards ? g.in(v) : g.out(v)) {
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        queue.push_back(inc.to);
      }
    }
  }
  return seen;
}

bool in_subtree(const DfsStructure& d, Vertex v, Vertex x) {
  while (x > v) x = d.parent[x];
  return x == v;
}

Vertex naive_nca(const DfsStructure& d, Vertex a, Vertex b) {
  while (a != b) {
    if (a > b) {
      a = d.parent[a];
    } else {
      b = d.parent[b];
    }
  }
  return a;
}

}  // namespace

std::int32_t oracle_component_count(const UnGraph& g, const std::vector<char>& dead_vertex,
                                    const std::vector<char>& dead_edge) {
  return count_components(g, dead_vertex, dead_edge);
}

std::vector<EdgeId> oracle_bridges(const UnGraph& g) {
  const std::int32_t base = count_components(g, {}, {});
  std::vector<EdgeId> out;
  std::vector<char> dead(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    dead[e] = 1;
    if (count_components(g, {}, dead) > base) out.push_back(e);
    dead[e] = 0;
  }
  return out;
}

std::vector<Vertex> oracle_articulation_points(const UnGraph& g) {
  const std::int32_t base = count_components(g, {}, {});
  std::vector<Vertex> out;
  std::vector<char> dead(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    // An isolated vertex vanishing lowers the count; it is never a cut vertex.
    const std::int32_t expected = g.degree(v) == 0 ? base - 1 : base;
    dead[v] = 1;
    if (count_components(g, dead, {}) > expected) out.push_back(v);
    dead[v] = 0;
  }
  return out;
}

Partition oracle_two_edge_connected_components(const UnGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> label(n, -1);
  std::vector<char> dead(g.num_edges(), 0);
  // x and y share a class iff no single edge deletion separates them.
  auto reachable_from = [&](Vertex s) {
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(v)) {
        if (!dead[inc.edge] && !seen[inc.to]) {
          seen[inc.to] = 1;
          queue.push_back(inc.to);
        }
      }
    }
    return seen;
  };
  std::int32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<char> together = reachable_from(s);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      dead[e] = 1;
      const auto r = reachable_from(s);
      dead[e] = 0;
      for (Vertex x = 0; x < n; ++x) together[x] = together[x] && r[x];
    }
    for (Vertex x = 0; x < n; ++x) {
      if (together[x]) label[x] = next;
    }
    ++next;
  }
  return normalize_partition(label);
}

std::vector<EdgeId> oracle_cut_edges(const UnGraph& g, Vertex v) {
  std::vector<char> dead_v(g.num_vertices(), 0), dead_e(g.num_edges(), 0);
  dead_v[v] = 1;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).u == v || g.edge(e).v == v) continue;
    dead_e[e] = 1;
    if (count_components(g, dead_v, dead_e) > 1) out.push_back(e);
    dead_e[e] = 0;
  }
  return out;
}

std::int64_t oracle_count_v(const UnGraph& g, Vertex v) {
  return static_cast<std::int64_t>(oracle_cut_edges(g, v).size());
}

std::vector<EdgeId> oracle_edge_partners(const UnGraph& g, EdgeId e) {
  std::vector<char> dead(g.num_edges(), 0);
  dead[e] = 1;
  std::vector<EdgeId> out;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    dead[f] = 1;
    if (count_components(g, {}, dead) > 1) out.push_back(f);
    dead[f] = 0;
  }
  return out;
}

std::int64_t oracle_count_e(const UnGraph& g, EdgeId e) {
  return static_cast<std::int64_t>(oracle_edge_partners(g, e).size());
}

NaiveLabels naive_labels(const DfsStructure& d) {
  const Vertex n = d.n;
  NaiveLabels out;
  out.low.assign(n, kAbsent);
  out.high.assign(n, kAbsent);
  out.high_p.assign(n, kAbsent);
  out.m.assign(n, kAbsent);
  out.m_p.assign(n, kAbsent);
  out.b_count.assign(n, 0);
  out.b_count_parent.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = d.parent[v];
    Vertex low = v;
    for (const auto& b : d.back_edges) {
      if (!in_subtree(d, v, b.from)) continue;
      low = std::min(low, b.to);
      if (b.to < v) {
        ++out.b_count[v];
        out.high[v] = std::max(out.high[v], b.to);
        out.m[v] = out.m[v] == kAbsent ? b.from : naive_nca(d, out.m[v], b.from);
      }
      if (p != kAbsent && b.to < p) {
        ++out.b_count_parent[v];
        out.high_p[v] = std::max(out.high_p[v], b.to);
        out.m_p[v] = out.m_p[v] == kAbsent ? b.from : naive_nca(d, out.m_p[v], b.from);
      }
    }
    out.low[v] = low;
  }
  return out;
}

std::vector<Vertex> naive_high(const DfsStructure& d) {
  std::vector<Vertex> high(d.n, kAbsent);
  std::vector<BackEdge> edges = d.back_edges;
  std::stable_sort(edges.begin(), edges.end(), [](const BackEdge& a, const BackEdge& b) { return a.to > b.to; });
  for (const auto& b : edges) {
    for (Vertex u = b.from; u > b.to; u = d.parent[u]) {
      if (high[u] == kAbsent) high[u] = b.to;
    }
  }
  return high;
}

std::array<std::vector<std::int64_t>, kVertexCutCases> oracle_case_counts(const UnGraph& g,
                                                                          const DfsStructure& d) {
  const auto labels = naive_labels(d);
  std::vector<Vertex> tree_child(g.num_edges(), kAbsent);
  for (Vertex u = 1; u < d.n; ++u) tree_child[d.parent_edge[u]] = u;

  std::array<std::vector<std::int64_t>, kVertexCutCases> out;
  for (auto& c : out) c.assign(g.num_vertices(), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const Vertex v = d.number_of[x];
    for (const EdgeId e : oracle_cut_edges(g, x)) {
      const Vertex u = tree_child[e];
      VertexCutCase kind;
      if (u == kAbsent) {
        kind = VertexCutCase::kBackEdge;
      } else if (u < v) {
        kind = labels.m[u] == v ? VertexCutCase::kAboveMEqualsV : VertexCutCase::kAboveMDescendant;
      } else {
        kind = labels.high[u] == v ? VertexCutCase::kBelowHighEqualsV : VertexCutCase::kBelowHighBelowV;
      }
      ++out[static_cast<std::size_t>(kind)][x];
    }
  }
  return out;
}

Partition oracle_sccs(const Digraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> label(n, -1);
  std::int32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const auto fwd = reach(g, s, false);
    const auto bwd = reach(g, s, true);
    for (Vertex x = 0; x < n; ++x) {
      if (fwd[x] && bwd[x]) label[x] = next;
    }
    ++next;
  }
  return normalize_partition(label);
}

std::vector<Vertex> brute_force_strong_articulation_points(const Digraph& g) {
  const std::int32_t base = oracle_sccs(g).num_classes;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::vector<Vertex> gone{v};
    if (oracle_sccs(without(g, {gone, {}}).graph).num_classes > base) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> brute_force_strong_bridges(const Digraph& g) {
  const std::int32_t base = oracle_sccs(g).num_classes;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const std::vector<EdgeId> gone{e};
    if (oracle_sccs(without(g, {{}, gone}).graph).num_classes > base) out.push_back(e);
  }
  return out;
}

Partition oracle_tsccs(const Digraph& g) {
  const Vertex n = g.num_vertices();
  const auto scc = oracle_sccs(g);
  // Undirected graph on the intra-SCC edges, twins merged.
  std::vector<Edge> edges;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    if (scc.class_of[e.u] != scc.class_of[e.v]) continue;
    const Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    if (have[a][b]) continue;
    have[a][b] = 1;
    edges.push_back({a, b});
  }
  return oracle_two_edge_connected_components(UnGraph(n, std::move(edges)));
}

std::int32_t oracle_tscc_count_without_vertex(const Digraph& g, Vertex v) {
  const std::vector<Vertex> gone{v};
  return oracle_tsccs(without(g, {gone, {}}).graph).num_classes;
}

std::int32_t oracle_tscc_count_without_edge(const Digraph& g, EdgeId e) {
  const std::vector<EdgeId> gone{e};
  return oracle_tsccs(without(g, {{}, gone}).graph).num_classes;
}

std::vector<Vertex> oracle_tsap(const Digraph& g) {
  const auto base = oracle_tsccs(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<char> survives(base.num_classes, 0);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (x != v) survives[base.class_of[x]] = 1;
    }
    const auto before = std::count(survives.begin(), survives.end(), 1);
    if (oracle_tscc_count_without_vertex(g, v) > before) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> oracle_tsb(const Digraph& g) {
  const std::int32_t base = oracle_tsccs(g).num_classes;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (oracle_tscc_count_without_edge(g, e) > base) out.push_back(e);
  }
  return out;
}

}  // namespace twinless
