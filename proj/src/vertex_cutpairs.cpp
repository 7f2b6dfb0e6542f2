#include "twinless/vertex_cutpairs.hpp"

#include <algorithm>
#include <stdexcept>

#include "twinless/errors.hpp"

namespace twinless {
namespace {

// Collects per-vertex hit lists; vertices must be opened in increasing order.
class HitCollector {
 public:
  HitCollector(Buckets* out, Vertex n) : out_(out) {
    if (out_) {
      out_->offsets.assign(1, 0);
      out_->items.clear();
      out_->offsets.reserve(static_cast<std::size_t>(n) + 1);
    }
  }
  void add(Vertex u) {
    if (out_) out_->items.push_back(u);
  }
  void close_vertex() {
    if (out_) out_->offsets.push_back(static_cast<std::int32_t>(out_->items.size()));
  }

 private:
  Buckets* out_;
};

Vertex defined(Vertex label, const char* what) {
  if (label == kAbsent) throw std::logic_error(std::string("label ") + what + " read where undefined");
  return label;
}

}  // namespace

CaseCounts count_backedge_pairs(const DfsStructure& d) {
  CaseCounts count(d.n, 0);
  for (Vertex c = 1; c < d.n; ++c) {
    if (d.b_count_parent[c] == 1) ++count[d.parent[c]];
  }
  return count;
}

CaseCounts count_m_eq_v(const DfsStructure& d, const InverseLists& inv, Buckets* hits) {
  CaseCounts count(d.n, 0);
  HitCollector collect(hits, d.n);
  for (Vertex v = 0; v < d.n; ++v) {
    const auto list = inv.m_inv[v];
    if (list.empty()) {
      collect.close_vertex();
      continue;
    }
    if (list.front() != v) throw std::logic_error("M^-1(v) must start with v");
    const auto kids = inv.children_by_high_p[v];
    std::size_t ui = 1, ci = 0;
    auto hit = [&](Vertex u) {
      ++count[v];
      collect.add(u);
    };

    // Count the u outside every T[high_p(c), low(c)), merging those intervals
    // in decreasing order of high_p.
    Vertex min = v;
    while (ui < list.size() && ci < kids.size()) {
      min = defined(d.high_p[kids[ci]], "high_p");
      while (ui < list.size() && list[ui] > min) hit(list[ui++]);
      min = d.low[kids[ci++]];
      while (ci < kids.size() && defined(d.high_p[kids[ci]], "high_p") >= min) {
        min = std::min(min, d.low[kids[ci]]);
        ++ci;
      }
      while (ui < list.size() && list[ui] > min) ++ui;
    }
    for (; ui < list.size(); ++ui) {
      if (list[ui] <= min) hit(list[ui]);
    }
    collect.close_vertex();
  }
  return count;
}

CaseCounts count_m_desc(const DfsStructure& d, const InverseLists& inv,
                        std::vector<Vertex>* lowest_partner) {
  CaseCounts count(d.n, 0);
  if (lowest_partner) lowest_partner->assign(d.n, kAbsent);
  auto record = [&](Vertex c, Vertex u) {
    if (lowest_partner) (*lowest_partner)[c] = u;
  };

  for (Vertex m = 0; m < d.n; ++m) {
    const auto us = inv.m_inv[m];
    const auto cs = inv.m_p_inv[m];
    std::size_t ui = 0, ci = 0;
    while (ci < cs.size() && ui < us.size()) {
      Vertex c = cs[ci];
      while (ui < us.size() && us[ui] >= d.parent[c]) ++ui;
      if (ui == us.size()) break;
      const Vertex hp = defined(d.high_p[c], "high_p");
      if (hp >= us[ui]) {
        ++ci;
        continue;
      }
      std::int64_t n_edges = 0;
      std::size_t first = ui;
      while (ui < us.size() && hp < us[ui]) {
        ++n_edges;
        ++ui;
      }
      const Vertex last = us[ui - 1];
      count[d.parent[c]] += n_edges;
      record(c, last);
      // Every later c' with p(c') above `last` shares high_p(c); drop the
      // candidates that are no longer proper ancestors of p(c').
      for (++ci; ci < cs.size() && d.parent[cs[ci]] > last; ++ci) {
        c = cs[ci];
        while (n_edges > 0 && us[first] >= d.parent[c]) {
          --n_edges;
          ++first;
        }
        count[d.parent[c]] += n_edges;
        record(c, n_edges > 0 ? last : kAbsent);
      }
    }
  }
  return count;
}

CaseCounts count_high_eq_v(const DfsStructure& d, const InverseLists& inv, Buckets* hits) {
  CaseCounts count(d.n, 0);
  HitCollector collect(hits, d.n);
  for (Vertex v = 0; v < d.n; ++v) {
    const auto kids = d.children[v];
    std::size_t ci = 0;
    for (const Vertex u : inv.high_inv[v]) {
      while (!d.is_ancestor(kids[ci], u)) ++ci;
      const Vertex c = kids[ci];
      // u == c would pair v with an edge incident to v.
      if (u == c) continue;
      if (d.low[u] == v || (d.m_p[c] != kAbsent && u <= d.m_p[c])) {
        ++count[v];
        collect.add(u);
      }
    }
    collect.close_vertex();
  }
  return count;
}

CaseCounts count_high_lt_v(const DfsStructure& d, const InverseLists& inv,
                           std::vector<Vertex>* max_partner) {
  CaseCounts count(d.n, 0);
  if (max_partner) max_partner->assign(d.n, kAbsent);

  for (Vertex m = 0; m < d.n; ++m) {
    const auto us = inv.m_inv[m];
    const auto cs = inv.m_p_inv[m];
    std::size_t ui = 0, ci = 0;
    while (ui < us.size() && ci < cs.size()) {
      while (ci < cs.size() && cs[ci] >= us[ui]) ++ci;
      if (ci == cs.size()) break;
      const Vertex h = defined(d.high[us[ui]], "high");
      if (h >= d.parent[cs[ci]]) {
        ++ui;
        continue;
      }
      const Vertex greatest = us[ui];
      std::int64_t n_edges = 0;
      for (; ci < cs.size() && h < d.parent[cs[ci]]; ++ci) {
        const Vertex c = cs[ci];
        if (max_partner) (*max_partner)[c] = greatest;
        while (ui < us.size() && c < us[ui]) {
          ++n_edges;
          ++ui;
        }
        count[d.parent[c]] += n_edges;
      }
    }
  }
  return count;
}

VertexCutPairReport count_vertex_cutpairs(const UnGraph& g, Vertex root) {
  constexpr const char* kWhat = "graph is not 2-vertex-connected";
  if (g.num_vertices() < 3) throw PreconditionError(kWhat, {Witness::Kind::kTooFewVertices, g.num_vertices()});
  VertexCutPairReport report;
  try {
    report.dfs = run_dfs(g, root);
  } catch (const PreconditionError& e) {
    throw PreconditionError(kWhat, e.witness());
  }
  if (auto w = articulation_point_witness(report.dfs)) throw PreconditionError(kWhat, *w);
  compute_labels(report.dfs);
  report.inv = build_inverse_lists(report.dfs);
  const auto& d = report.dfs;

  std::array<CaseCounts, kVertexCutCases> cases{
      count_backedge_pairs(d),
      count_m_eq_v(d, report.inv, &report.m_eq_v_hits),
      count_m_desc(d, report.inv, &report.lowest_partner),
      count_high_eq_v(d, report.inv, &report.high_eq_v_hits),
      count_high_lt_v(d, report.inv, &report.max_partner),
  };

  report.count.assign(d.n, 0);
  for (auto& sub : report.by_case) sub.assign(d.n, 0);
  for (Vertex v = 0; v < d.n; ++v) {
    const Vertex x = d.vertex_of[v];
    for (std::size_t k = 0; k < kVertexCutCases; ++k) {
      report.by_case[k][x] = cases[k][v];
      report.count[x] += cases[k][v];
    }
  }
  return report;
}

std::array<std::vector<EdgeId>, kVertexCutCases> query_cut_edges_by_case(
    const VertexCutPairReport& report, Vertex v) {
  const auto& d = report.dfs;
  if (v < 0 || v >= d.n) throw GraphError("unknown vertex " + std::to_string(v));
  const Vertex x = d.number_of[v];
  std::array<std::vector<EdgeId>, kVertexCutCases> out;
  auto& back = out[static_cast<std::size_t>(VertexCutCase::kBackEdge)];
  auto& above_eq = out[static_cast<std::size_t>(VertexCutCase::kAboveMEqualsV)];
  auto& above_desc = out[static_cast<std::size_t>(VertexCutCase::kAboveMDescendant)];
  auto& below_eq = out[static_cast<std::size_t>(VertexCutCase::kBelowHighEqualsV)];
  auto& below_lt = out[static_cast<std::size_t>(VertexCutCase::kBelowHighBelowV)];
  const auto& items = report.inv.m_inv.items;

  for (const Vertex c : d.children[x]) {
    // The lone back edge escaping above x from T(c) leaves from M_p(c) and
    // is that vertex's lowest back edge.
    if (d.b_count_parent[c] == 1) back.push_back(d.l_edge[defined(d.m_p[c], "M_p")]);

    if (const Vertex lowest = report.lowest_partner[c]; lowest != kAbsent) {
      const auto begin = report.inv.m_inv.offsets[d.m_p[c]];
      for (auto i = report.inv.m_inv_pos[lowest]; i >= begin && items[i] < x; --i) {
        above_desc.push_back(d.parent_edge[items[i]]);
      }
    }
    if (const Vertex greatest = report.max_partner[c]; greatest != kAbsent) {
      const auto end = report.inv.m_inv.offsets[d.m_p[c] + 1];
      for (auto i = report.inv.m_inv_pos[greatest]; i < end && items[i] > c; ++i) {
        below_lt.push_back(d.parent_edge[items[i]]);
      }
    }
  }
  for (const Vertex u : report.m_eq_v_hits[x]) above_eq.push_back(d.parent_edge[u]);
  for (const Vertex u : report.high_eq_v_hits[x]) below_eq.push_back(d.parent_edge[u]);
  return out;
}

std::vector<EdgeId> query_cut_edges(const VertexCutPairReport& report, Vertex v) {
  std::vector<EdgeId> out;
  for (auto& part : query_cut_edges_by_case(report, v)) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twinless
