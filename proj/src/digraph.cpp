#include "twinless/digraph.hpp"

#include <algorithm>

#include "twinless/oracles.hpp"

namespace twinless {

Partition sccs(const Digraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> index(n, -1), lowlink(n, 0), comp(n, -1);
  std::vector<Vertex> stack;
  struct Frame {
    Vertex v;
    std::int32_t next;
  };
  std::vector<Frame> calls;
  std::int32_t counter = 0, num_comps = 0;

  for (Vertex s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    index[s] = lowlink[s] = counter++;
    stack.push_back(s);
    calls.push_back({s, 0});
    while (!calls.empty()) {
      auto& top = calls.back();
      const Vertex v = top.v;
      auto adj = g.out(v);
      if (top.next < static_cast<std::int32_t>(adj.size())) {
        const Vertex w = adj[top.next++].to;
        if (index[w] < 0) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          calls.push_back({w, 0});
        } else if (comp[w] < 0) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = num_comps;
        } while (w != v);
        ++num_comps;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const Vertex p = calls.back().v;
        lowlink[p] = std::min(lowlink[p], lowlink[v]);
      }
    }
  }
  return normalize_partition(comp);
}

std::optional<Witness> strong_connectivity_violation(const Digraph& g) {
  const auto part = sccs(g);
  if (part.num_classes <= 1) return std::nullopt;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (part.class_of[v] != part.class_of[0]) return Witness{Witness::Kind::kNotStronglyConnected, v, 0};
  }
  return std::nullopt;
}

DominatorTree dominators(const Digraph& g, Vertex start) {
  const Vertex n = g.num_vertices();
  if (start < 0 || start >= n) throw GraphError("dominator start " + std::to_string(start) + " out of range");

  // Everything below runs on DFS numbers.
  std::vector<std::int32_t> dfn(n, -1);
  std::vector<Vertex> vertex;
  std::vector<std::int32_t> parent;
  vertex.reserve(n);
  parent.reserve(n);
  {
    struct Frame {
      Vertex v;
      std::int32_t next;
    };
    std::vector<Frame> calls{{start, 0}};
    dfn[start] = 0;
    vertex.push_back(start);
    parent.push_back(-1);
    while (!calls.empty()) {
      auto& top = calls.back();
      auto adj = g.out(top.v);
      if (top.next == static_cast<std::int32_t>(adj.size())) {
        calls.pop_back();
        continue;
      }
      const Vertex w = adj[top.next++].to;
      if (dfn[w] >= 0) continue;
      dfn[w] = static_cast<std::int32_t>(vertex.size());
      vertex.push_back(w);
      parent.push_back(dfn[top.v]);
      calls.push_back({w, 0});
    }
  }
  const auto count = static_cast<std::int32_t>(vertex.size());
  std::vector<std::int32_t> semi(count), idom(count, -1), ancestor(count, -1), label(count);
  std::vector<std::int32_t> bucket_head(count, -1), bucket_next(count, -1);
  for (std::int32_t i = 0; i < count; ++i) semi[i] = label[i] = i;

  std::vector<std::int32_t> path;
  auto eval = [&](std::int32_t v) {
    if (ancestor[v] < 0) return v;
    for (std::int32_t x = v; ancestor[ancestor[x]] >= 0; x = ancestor[x]) path.push_back(x);
    while (!path.empty()) {
      const std::int32_t x = path.back();
      path.pop_back();
      const std::int32_t a = ancestor[x];
      if (semi[label[a]] < semi[label[x]]) label[x] = label[a];
      ancestor[x] = ancestor[a];
    }
    return label[v];
  };

  for (std::int32_t w = count - 1; w >= 1; --w) {
    for (const auto& inc : g.in(vertex[w])) {
      const std::int32_t v = dfn[inc.to];
      if (v < 0) continue;
      const std::int32_t u = eval(v);
      semi[w] = std::min(semi[w], semi[u]);
    }
    bucket_next[w] = bucket_head[semi[w]];
    bucket_head[semi[w]] = w;
    const std::int32_t p = parent[w];
    ancestor[w] = p;
    for (std::int32_t v = bucket_head[p]; v >= 0; v = bucket_next[v]) {
      const std::int32_t u = eval(v);
      idom[v] = semi[u] < semi[v] ? u : p;
    }
    bucket_head[p] = -1;
  }
  for (std::int32_t w = 1; w < count; ++w) {
    if (idom[w] != semi[w]) idom[w] = idom[idom[w]];
  }

  DominatorTree tree;
  tree.start = start;
  tree.idom.assign(n, kAbsent);
  for (std::int32_t w = 1; w < count; ++w) tree.idom[vertex[w]] = vertex[idom[w]];

  // Preorder of the dominator tree for O(1) dominance tests. DFS numbers are
  // a valid topological order of it (idom(w) has a smaller number than w).
  std::vector<std::int32_t> child_count(n, 0);
  for (std::int32_t w = 1; w < count; ++w) ++child_count[vertex[idom[w]]];
  std::vector<std::int32_t> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + child_count[v];
  std::vector<Vertex> kids(offset[n]);
  std::vector<std::int32_t> fill(offset.begin(), offset.end() - 1);
  for (std::int32_t w = 1; w < count; ++w) kids[fill[vertex[idom[w]]]++] = vertex[w];

  tree.number.assign(n, -1);
  tree.subtree_size.assign(n, 0);
  std::vector<std::pair<Vertex, std::int32_t>> stack{{start, offset[start]}};
  tree.number[start] = 0;
  tree.preorder.push_back(start);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < offset[v + 1]) {
      const Vertex c = kids[next++];
      tree.number[c] = static_cast<std::int32_t>(tree.preorder.size());
      tree.preorder.push_back(c);
      stack.emplace_back(c, offset[c]);
      continue;
    }
    tree.subtree_size[v] = static_cast<std::int32_t>(tree.preorder.size()) - tree.number[v];
    stack.pop_back();
  }
  return tree;
}

namespace {

void require_strongly_connected(const Digraph& g) {
  if (auto w = strong_connectivity_violation(g)) {
    throw PreconditionError("graph is not strongly connected", *w);
  }
}

// Every vertex that is the immediate dominator of some other vertex, except
// the start vertex.
void mark_nontrivial_dominators(const DominatorTree& t, std::vector<char>& mark) {
  for (const Vertex d : t.idom) {
    if (d != kAbsent && d != t.start) mark[d] = 1;
  }
}

// Edges (u, w) of g that every path from the start to w must use: u = idom(w)
// and w dominates each of its other predecessors.
void mark_flow_bridges(const Digraph& g, const DominatorTree& t, std::vector<char>& mark) {
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    const Vertex u = t.idom[w];
    if (u == kAbsent) continue;
    EdgeId candidate = kAbsent;
    bool all_dominated = true;
    for (const auto& inc : g.in(w)) {
      if (inc.to == u) {
        candidate = inc.edge;
      } else if (!t.dominates(w, inc.to)) {
        all_dominated = false;
        break;
      }
    }
    if (all_dominated && candidate != kAbsent) mark[candidate] = 1;
  }
}

}  // namespace

std::vector<Vertex> strong_articulation_points(const Digraph& g, Method method) {
  require_strongly_connected(g);
  if (method == Method::kBruteForce) return brute_force_strong_articulation_points(g);
  const Vertex n = g.num_vertices();
  std::vector<Vertex> out;
  if (n == 0) return out;
  std::vector<char> mark(n, 0);
  mark_nontrivial_dominators(dominators(g, 0), mark);
  mark_nontrivial_dominators(dominators(g.reversed(), 0), mark);
  if (n > 2) {
    const std::vector<Vertex> start{0};
    if (!is_strongly_connected(without(g, Deletion{start, {}}).graph)) mark[0] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> strong_bridges(const Digraph& g, Method method) {
  require_strongly_connected(g);
  if (method == Method::kBruteForce) return brute_force_strong_bridges(g);
  std::vector<EdgeId> out;
  if (g.num_vertices() == 0) return out;
  std::vector<char> mark(g.num_edges(), 0);
  mark_flow_bridges(g, dominators(g, 0), mark);
  const Digraph rev = g.reversed();
  mark_flow_bridges(rev, dominators(rev, 0), mark);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (mark[e]) out.push_back(e);
  }
  return out;
}

StrongConnectivityReport analyze_strong_connectivity(const Digraph& g, Method method) {
  StrongConnectivityReport report;
  report.sccs = sccs(g);
  report.strong_bridges = strong_bridges(g, method);
  report.strong_articulation_points = strong_articulation_points(g, method);
  return report;
}

}  // namespace twinless
