#include "twinless/undirected.hpp"

#include <algorithm>

namespace twinless {
namespace {

// One lowpoint search over every component: bridges, cut vertices, blocks.
struct LowpointSearch {
  std::vector<EdgeId> bridges;
  std::vector<char> is_cut;
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<Vertex> block_opener;  // preorder number of the child that opened each block
  std::vector<Vertex> isolated;
};

LowpointSearch lowpoint_search(const UnGraph& g) {
  const Vertex n = g.num_vertices();
  LowpointSearch out;
  out.is_cut.assign(n, 0);
  std::vector<Vertex> pre(n, kAbsent), low(n, 0);
  std::vector<EdgeId> via(n, kAbsent);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    Vertex v;
    std::int32_t next;
  };
  std::vector<Frame> stack;
  Vertex counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (pre[root] != kAbsent) continue;
    if (g.degree(root) == 0) {
      pre[root] = counter++;
      out.isolated.push_back(root);
      continue;
    }
    pre[root] = low[root] = counter++;
    std::int32_t root_children = 0;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& top = stack.back();
      const Vertex v = top.v;
      auto adj = g.incident(v);
      if (top.next < static_cast<std::int32_t>(adj.size())) {
        const auto [w, e] = adj[top.next++];
        if (e == via[v]) continue;
        if (pre[w] == kAbsent) {
          pre[w] = low[w] = counter++;
          via[w] = e;
          edge_stack.push_back(e);
          if (v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (pre[w] < pre[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], pre[w]);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] > pre[parent]) out.bridges.push_back(via[v]);
      if (low[v] >= pre[parent]) {
        if (parent != root) out.is_cut[parent] = 1;
        std::vector<EdgeId> block;
        EdgeId popped;
        do {
          popped = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(popped);
        } while (popped != via[v]);
        out.block_edges.push_back(std::move(block));
        out.block_opener.push_back(pre[v]);
      }
    }
    if (root_children >= 2) out.is_cut[root] = 1;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

}  // namespace

Partition components(const UnGraph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> label(n, -1);
  std::vector<Vertex> stack;
  std::int32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (label[inc.to] < 0) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return normalize_partition(label);
}

BridgesAndCutVertices bridges_and_articulation_points(const UnGraph& g) {
  auto search = lowpoint_search(g);
  BridgesAndCutVertices out;
  out.bridges = std::move(search.bridges);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (search.is_cut[v]) out.articulation_points.push_back(v);
  }
  return out;
}

Partition two_edge_connected_components(const UnGraph& g) {
  auto search = lowpoint_search(g);
  std::vector<char> is_bridge(g.num_edges(), 0);
  for (auto e : search.bridges) is_bridge[e] = 1;
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> label(n, -1);
  std::vector<Vertex> stack;
  std::int32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (!is_bridge[inc.edge] && label[inc.to] < 0) {
          label[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return normalize_partition(label);
}

BlockForest block_forest(const UnGraph& g) {
  auto search = lowpoint_search(g);
  const Vertex n = g.num_vertices();

  // Blocks are emitted at finish time; reorder by the discovery of their opening child.
  std::vector<std::int32_t> order(search.block_edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return search.block_opener[a] < search.block_opener[b];
  });

  BlockForest forest;
  std::vector<char> seen(n, 0);
  for (auto idx : order) {
    auto& edges = search.block_edges[idx];
    std::sort(edges.begin(), edges.end());
    std::vector<Vertex> members;
    for (auto e : edges) {
      for (auto x : {g.edge(e).u, g.edge(e).v}) {
        if (!seen[x]) {
          seen[x] = 1;
          members.push_back(x);
        }
      }
    }
    for (auto x : members) seen[x] = 0;
    std::sort(members.begin(), members.end());
    forest.blocks.push_back(std::move(members));
    forest.block_edges.push_back(std::move(edges));
  }
  // Isolated vertices form trivial blocks; place them by vertex order at the end.
  for (auto v : search.isolated) {
    forest.blocks.push_back({v});
    forest.block_edges.emplace_back();
  }
  for (Vertex v = 0; v < n; ++v) {
    if (search.is_cut[v]) forest.articulation_points.push_back(v);
  }
  for (std::size_t b = 0; b < forest.blocks.size(); ++b) {
    for (auto x : forest.blocks[b]) {
      if (search.is_cut[x]) forest.tree_edges.emplace_back(static_cast<std::int32_t>(b), x);
    }
  }
  return forest;
}

std::optional<Witness> two_edge_connectivity_violation(const UnGraph& g) {
  auto comp = components(g);
  if (comp.num_classes > 1) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (comp.class_of[v] != 0) return Witness{Witness::Kind::kUnreachedVertex, v};
    }
  }
  auto search = lowpoint_search(g);
  if (!search.bridges.empty()) {
    const auto e = search.bridges.front();
    return Witness{Witness::Kind::kBridge, g.edge(e).u, g.edge(e).v, e};
  }
  return std::nullopt;
}

std::optional<Witness> biconnectivity_violation(const UnGraph& g) {
  if (g.num_vertices() < 3) return Witness{Witness::Kind::kTooFewVertices, g.num_vertices()};
  auto comp = components(g);
  if (comp.num_classes > 1) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (comp.class_of[v] != 0) return Witness{Witness::Kind::kUnreachedVertex, v};
    }
  }
  auto search = lowpoint_search(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (search.is_cut[v]) return Witness{Witness::Kind::kArticulationPoint, v};
  }
  return std::nullopt;
}

}  // namespace twinless
