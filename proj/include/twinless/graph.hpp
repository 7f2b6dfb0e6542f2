#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twinless/types.hpp"

namespace twinless {

/// An edge as an endpoint pair. For digraphs `u` is the tail and `v` the head.
struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

/// Simple undirected graph. Immutable after construction; incidence lists
/// follow edge insertion order, which makes every search deterministic.
class UnGraph {
 public:
  UnGraph() = default;
  /// Throws GraphError on out-of-range endpoints, self-loops or parallel edges.
  UnGraph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  /// Linear in the smaller degree.
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  bool operator==(const UnGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

/// Simple digraph (no self-loops, no repeated ordered pair; twins allowed).
class Digraph {
 public:
  Digraph() = default;
  Digraph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> out(Vertex v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const Incidence> in(Vertex v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const;
  /// Same vertices, every edge reversed; edge ids are preserved.
  Digraph reversed() const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> out_offsets_{0};
  std::vector<Incidence> out_;
  std::vector<std::int32_t> in_offsets_{0};
  std::vector<Incidence> in_;
};

/// A derived graph plus the id tables linking it back to its parent.
template <class G>
struct Subgraph {
  G graph;
  std::vector<Vertex> parent_vertex;  // new id -> parent id
  std::vector<EdgeId> parent_edge;    // new id -> parent id
  std::vector<Vertex> local_vertex;   // parent id -> new id, kAbsent if gone
};

/// G[C]: vertices of `keep` (deduplicated, renumbered in ascending order) and
/// every edge with both endpoints among them, in original edge order.
Subgraph<UnGraph> induced(const UnGraph& g, std::span<const Vertex> keep);
Subgraph<Digraph> induced(const Digraph& g, std::span<const Vertex> keep);

struct Deletion {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

/// G \ S. Throws GraphError if S names an unknown vertex or edge.
Subgraph<UnGraph> without(const UnGraph& g, const Deletion& items);
Subgraph<Digraph> without(const Digraph& g, const Deletion& items);

/// G^u together with the twin bookkeeping needed to map results back.
struct Underlying {
  UnGraph graph;
  /// Directed edges collapsed into each undirected edge: one or two ids,
  /// second slot kAbsent when the edge has no twin.
  std::vector<std::array<EdgeId, 2>> sources;
  /// Directed edge id -> undirected edge id.
  std::vector<EdgeId> undirected_of;
};

/// Undirected edges appear in order of their first source edge.
Underlying underlying(const Digraph& g);

// Text format: optional '#' comment lines, header "p <d|u> <n> <m>", then m
// lines "u v" with 0-based endpoints.

using AnyGraph = std::variant<Digraph, UnGraph>;

/// Throws GraphError carrying the offending line number.
AnyGraph parse_graph(std::string_view text);
UnGraph parse_undirected(std::string_view text);
Digraph parse_directed(std::string_view text);
AnyGraph read_graph_file(const std::string& path);

std::string serialize(const UnGraph& g);
std::string serialize(const Digraph& g);

}  // namespace twinless
