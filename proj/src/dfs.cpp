#include "twinless/dfs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twinless/errors.hpp"
#include "twinless/link_find.hpp"

namespace twinless {

DfsStructure run_dfs(const UnGraph& g, Vertex root) {
  const Vertex n = g.num_vertices();
  if (root < 0 || root >= n) throw GraphError("DFS root " + std::to_string(root) + " out of range");

  DfsStructure d;
  d.n = n;
  d.root_vertex = root;
  d.vertex_of.assign(n, kAbsent);
  d.number_of.assign(n, kAbsent);
  d.parent.assign(n, kAbsent);
  d.parent_edge.assign(n, kAbsent);
  d.subtree_size.assign(n, 1);
  d.low.resize(n);
  d.l.resize(n);
  d.l_edge.assign(n, kAbsent);
  d.up.assign(n, 0);
  d.down.assign(n, 0);
  d.down_from.assign(n, 0);
  d.back_edges.reserve(static_cast<std::size_t>(std::max(0, g.num_edges() - n + 1)));

  // The frame stack doubles as the root-to-current tree path, so the child of
  // an ancestor w on that path is path[depth(w) + 1].
  struct Frame {
    Vertex v;  // preorder number
    std::int32_t next;
  };
  std::vector<Frame> path;
  std::vector<std::int32_t> depth(n, 0);
  Vertex counter = 0;

  auto discover = [&](Vertex x, Vertex parent, EdgeId via) {
    const Vertex v = counter++;
    d.number_of[x] = v;
    d.vertex_of[v] = x;
    d.parent[v] = parent;
    d.parent_edge[v] = via;
    d.low[v] = v;
    d.l[v] = v;
    depth[v] = static_cast<std::int32_t>(path.size());
    path.push_back({v, 0});
  };

  discover(root, kAbsent, kAbsent);
  while (!path.empty()) {
    auto& top = path.back();
    const Vertex v = top.v;
    auto adj = g.incident(d.vertex_of[v]);
    if (top.next < static_cast<std::int32_t>(adj.size())) {
      const auto [y, e] = adj[top.next++];
      if (e == d.parent_edge[v]) continue;
      const Vertex w = d.number_of[y];
      if (w == kAbsent) {
        discover(y, v, e);
      } else if (w < v) {
        d.back_edges.push_back({v, w, e});
        ++d.up[v];
        if (w < d.l[v]) {
          d.l[v] = w;
          d.l_edge[v] = e;
        }
        ++d.down_from[path[depth[w] + 1].v];
      }
      continue;
    }
    path.pop_back();
    d.low[v] = std::min(d.low[v], d.l[v]);
    if (const Vertex p = d.parent[v]; p != kAbsent) {
      d.low[p] = std::min(d.low[p], d.low[v]);
      d.subtree_size[p] += d.subtree_size[v];
      d.down[p] += d.down_from[v];
    }
  }

  if (counter < n) {
    for (Vertex x = 0; x < n; ++x) {
      if (d.number_of[x] == kAbsent) {
        throw PreconditionError("graph is not connected", {Witness::Kind::kUnreachedVertex, x});
      }
    }
  }

  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  d.children = bucket_by_key(d.parent, order, static_cast<std::size_t>(n));
  return d;
}

namespace {

// Shared body of FastHigh and its high_p variant. `below_parent` switches the
// loop guard from "u > v" to "p(u) > v".
void link_find_sweep(DfsStructure& d, std::vector<Vertex>& label, bool below_parent,
                     std::int64_t& links, std::int64_t& finds) {
  const Vertex n = d.n;
  label.assign(n, kAbsent);
  std::vector<std::int32_t> lower(d.back_edges.size());
  std::vector<std::int32_t> order(d.back_edges.size());
  for (std::size_t i = 0; i < d.back_edges.size(); ++i) {
    lower[i] = d.back_edges[i].to;
    order[i] = static_cast<std::int32_t>(i);
  }
  const Buckets by_lower = bucket_by_key(lower, order, static_cast<std::size_t>(n));

  LinkFindForest forest(d.parent);
  for (Vertex v = n - 1; v >= 0; --v) {
    for (auto idx : by_lower[v]) {
      Vertex u = forest.find(d.back_edges[idx].from);
      while ((below_parent ? d.parent[u] : u) > v) {
        label[u] = v;
        const Vertex next = forest.find(d.parent[u]);
        forest.link(u);
        u = next;
      }
    }
  }
  links = forest.links();
  finds = forest.finds();
}

// FindM over all vertices bottom-up. With `relative_to_parent` every
// comparison against v becomes a comparison against p(v), which yields M_p.
void find_m_all(DfsStructure& d, std::vector<Vertex>& out, bool relative_to_parent,
                std::int64_t& visits, std::int64_t& moves) {
  const Vertex n = d.n;
  out.assign(n, kAbsent);
  const auto& kids = d.children;
  auto child = [&](std::int32_t idx) { return kids.items[idx]; };
  auto threshold_of = [&](Vertex v) { return relative_to_parent ? d.parent[v] : v; };

  // L[v] / R[v]: first / last child c of v with low(c) below v's own
  // threshold. They persist across calls and only move inward.
  std::vector<std::int32_t> left(n), right(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex t = threshold_of(v);
    std::int32_t lo = kids.offsets[v], hi = kids.offsets[v + 1] - 1;
    while (lo <= hi && d.low[child(lo)] >= t) ++lo;
    while (hi >= lo && d.low[child(hi)] >= t) --hi;
    left[v] = lo;
    right[v] = hi;
  }

  for (Vertex v = n - 1; v >= 1; --v) {
    const Vertex t = threshold_of(v);
    if (t == kAbsent || d.low[v] >= t) continue;  // nothing escapes: undefined
    ++visits;
    if (d.l[v] < t || left[v] != right[v]) {
      out[v] = v;
      continue;
    }
    Vertex m = d.m[child(left[v])];
    for (;;) {
      ++visits;
      if (d.l[m] < t) break;
      while (left[m] <= right[m] && d.low[child(left[m])] >= t) {
        ++left[m];
        ++moves;
      }
      while (right[m] >= left[m] && d.low[child(right[m])] >= t) {
        --right[m];
        ++moves;
      }
      if (left[m] > right[m]) throw std::logic_error("FindM lost track of the escaping subtree");
      if (left[m] != right[m]) break;
      m = d.m[child(left[m])];
    }
    out[v] = m;
  }
}

}  // namespace

void compute_high(DfsStructure& d) {
  link_find_sweep(d, d.high, false, d.stats.high_links, d.stats.high_finds);
}

void compute_high_p(DfsStructure& d) {
  link_find_sweep(d, d.high_p, true, d.stats.high_p_links, d.stats.high_p_finds);
}

void compute_m(DfsStructure& d) {
  d.stats.m_visits = d.stats.m_pointer_moves = 0;
  // FindM reads M of deeper vertices while filling d.m in place.
  find_m_all(d, d.m, false, d.stats.m_visits, d.stats.m_pointer_moves);
}

void compute_m_p(DfsStructure& d) {
  if (static_cast<Vertex>(d.m.size()) != d.n) throw std::logic_error("compute_m_p needs M");
  d.stats.m_p_visits = d.stats.m_p_pointer_moves = 0;
  find_m_all(d, d.m_p, true, d.stats.m_p_visits, d.stats.m_p_pointer_moves);
}

void compute_b_count(DfsStructure& d) {
  const Vertex n = d.n;
  d.b_count.assign(n, 0);
  d.b_count_parent.assign(n, 0);
  std::vector<std::int32_t> child_sum(n, 0), child_sum_parent(n, 0);
  for (Vertex v = n - 1; v >= 1; --v) {
    d.b_count[v] = d.up[v] + child_sum[v] - d.down[v];
    d.b_count_parent[v] = d.up[v] + child_sum_parent[v] - d.down_from[v];
    child_sum[d.parent[v]] += d.b_count[v];
    child_sum_parent[d.parent[v]] += d.b_count_parent[v];
  }
}

std::optional<Witness> articulation_point_witness(const DfsStructure& d) {
  std::vector<char> cut(d.n, 0);
  if (d.n > 0 && d.children[0].size() > 1) cut[0] = 1;
  for (Vertex c = 1; c < d.n; ++c) {
    if (d.parent[c] != 0 && d.low[c] >= d.parent[c]) cut[d.parent[c]] = 1;
  }
  Vertex best = kAbsent;
  for (Vertex v = 0; v < d.n; ++v) {
    if (cut[v] && (best == kAbsent || d.vertex_of[v] < best)) best = d.vertex_of[v];
  }
  if (best == kAbsent) return std::nullopt;
  return Witness{Witness::Kind::kArticulationPoint, best};
}

std::optional<Witness> bridge_witness(const DfsStructure& d, const UnGraph& g) {
  EdgeId best = kAbsent;
  for (Vertex c = 1; c < d.n; ++c) {
    if (d.low[c] == c && (best == kAbsent || d.parent_edge[c] < best)) best = d.parent_edge[c];
  }
  if (best == kAbsent) return std::nullopt;
  return Witness{Witness::Kind::kBridge, g.edge(best).u, g.edge(best).v, best};
}

void compute_labels(DfsStructure& d) {
  compute_high(d);
  compute_high_p(d);
  compute_m(d);
  compute_m_p(d);
  compute_b_count(d);
}

DfsStructure build_dfs_structure(const UnGraph& g, Vertex root) {
  DfsStructure d = run_dfs(g, root);
  compute_labels(d);
  return d;
}

InverseLists build_inverse_lists(const DfsStructure& d) {
  const auto n = static_cast<std::size_t>(d.n);
  std::vector<std::int32_t> increasing(n), decreasing(n);
  std::iota(increasing.begin(), increasing.end(), 0);
  std::iota(decreasing.rbegin(), decreasing.rend(), 0);

  InverseLists inv;
  inv.m_inv = bucket_by_key(d.m, decreasing, n);
  inv.m_p_inv = bucket_by_key(d.m_p, decreasing, n);
  inv.high_inv = bucket_by_key(d.high, increasing, n);

  inv.m_inv_pos.assign(n, -1);
  for (std::size_t i = 0; i < inv.m_inv.items.size(); ++i) {
    inv.m_inv_pos[inv.m_inv.items[i]] = static_cast<std::int32_t>(i);
  }

  // Children by decreasing high_p: walk high_p^-1 buckets from the top, then
  // distribute into per-parent lists in that order.
  const Buckets by_high_p = bucket_by_key(d.high_p, increasing, n);
  std::vector<std::int32_t> order;
  order.reserve(n);
  for (auto x = static_cast<std::int64_t>(n) - 1; x >= 0; --x) {
    for (auto c : by_high_p[static_cast<std::size_t>(x)]) order.push_back(c);
  }
  for (Vertex c = 1; c < d.n; ++c) {
    if (d.high_p[c] == kAbsent) order.push_back(c);
  }
  inv.children_by_high_p = bucket_by_key(d.parent, order, n);
  return inv;
}

std::string dump_labels(const DfsStructure& d) {
  std::string out;
  auto put = [&](Vertex v) {
    out += ' ';
    out += v == kAbsent ? std::string("-") : std::to_string(d.vertex_of[v]);
  };
  for (Vertex v = 0; v < d.n; ++v) {
    out += std::to_string(d.vertex_of[v]);
    put(d.parent[v]);
    put(d.low[v]);
    put(d.l[v]);
    put(d.high.empty() ? kAbsent : d.high[v]);
    put(d.high_p.empty() ? kAbsent : d.high_p[v]);
    put(d.m.empty() ? kAbsent : d.m[v]);
    put(d.m_p.empty() ? kAbsent : d.m_p[v]);
    out += '\n';
  }
  return out;
}

}  // namespace twinless
