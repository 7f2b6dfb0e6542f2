#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "twinless/dfs.hpp"
#include "twinless/graph.hpp"

namespace twinless {

/// The five disjoint ways an edge e can complete a cut-pair {v, e}, relative
/// to the DFS tree. For a tree edge e = (u, p(u)):
///   kAboveMEqualsV     u is a proper ancestor of v and M(u) = v
///   kAboveMDescendant  u is a proper ancestor of v and M(u) lies below v
///   kBelowHighEqualsV  u is a proper descendant of v and high(u) = v
///   kBelowHighBelowV   u is a proper descendant of v and high(u) < v
enum class VertexCutCase : std::uint8_t {
  kBackEdge = 0,
  kAboveMEqualsV = 1,
  kAboveMDescendant = 2,
  kBelowHighEqualsV = 3,
  kBelowHighBelowV = 4,
};
inline constexpr std::size_t kVertexCutCases = 5;

/// Per-vertex subtotal of one case, indexed by preorder number.
using CaseCounts = std::vector<std::int64_t>;

// Individual cases; all take a structure built on a 2-vertex-connected graph.

CaseCounts count_backedge_pairs(const DfsStructure& d);
/// Pairs {v, (u, p(u))} with M(u) = v. `hits`, if given, receives the
/// counted u for every v (bucketed by v).
CaseCounts count_m_eq_v(const DfsStructure& d, const InverseLists& inv, Buckets* hits = nullptr);
/// Pairs {p(c), (u, p(u))} with M(u) in T(c). `lowest_partner`, if given,
/// receives per child c the smallest such u (kAbsent if none).
CaseCounts count_m_desc(const DfsStructure& d, const InverseLists& inv,
                        std::vector<Vertex>* lowest_partner = nullptr);
/// Pairs {v, (u, p(u))} with u below v and high(u) = v.
CaseCounts count_high_eq_v(const DfsStructure& d, const InverseLists& inv, Buckets* hits = nullptr);
/// Pairs {p(c), (u, p(u))} with u below c and high(u) < p(c). `max_partner`,
/// if given, receives per child c the greatest such u (kAbsent if none).
CaseCounts count_high_lt_v(const DfsStructure& d, const InverseLists& inv,
                           std::vector<Vertex>* max_partner = nullptr);

/// count(v) = #{e : G \ {v, e} is disconnected} for every vertex of a
/// 2-vertex-connected graph, with the data needed to list C(v).
struct VertexCutPairReport {
  std::vector<std::int64_t> count;                          // by graph vertex id
  std::array<std::vector<std::int64_t>, kVertexCutCases> by_case;  // by graph vertex id

  // Query support; preorder-indexed.
  DfsStructure dfs;
  InverseLists inv;
  Buckets m_eq_v_hits;
  Buckets high_eq_v_hits;
  std::vector<Vertex> lowest_partner;
  std::vector<Vertex> max_partner;
};

/// Throws PreconditionError (articulation point, unreached vertex or too few
/// vertices) unless g is 2-vertex-connected.
VertexCutPairReport count_vertex_cutpairs(const UnGraph& g, Vertex root = 0);

/// C(v): every edge e with G \ {v, e} disconnected, ascending by edge id.
/// Cost is linear in deg(v) plus the answer size.
std::vector<EdgeId> query_cut_edges(const VertexCutPairReport& report, Vertex v);

/// C(v) split by case, each in discovery order.
std::array<std::vector<EdgeId>, kVertexCutCases> query_cut_edges_by_case(
    const VertexCutPairReport& report, Vertex v);

}  // namespace twinless
