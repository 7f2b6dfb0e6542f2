#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twinless/graph.hpp"

namespace twinless {

// Structured families.
UnGraph gen_cycle(Vertex n);
UnGraph gen_clique(Vertex n);
/// Two hubs 0 and 1 joined by internally disjoint paths with the given edge
/// counts (each >= 1, at most one equal to 1).
UnGraph gen_theta(const std::vector<std::int32_t>& path_lengths);
Digraph directed_cycle(Vertex n);
/// Both orientations of every edge, in edge order: (u, v) then (v, u).
Digraph bidirected(const UnGraph& g);

// Seeded random families. Every instance is checked against its family's
// property; infeasible parameters throw std::invalid_argument. Vertex labels
// and edge order are shuffled.

/// Random Hamiltonian cycle plus random chords.
UnGraph gen_random_2vc(Vertex n, EdgeId m, std::uint64_t seed);
/// Open ear decomposition: a cycle, then paths between distinct attached
/// vertices, then chords. Tends to produce long chains of degree-2 vertices.
UnGraph gen_random_2vc_ears(Vertex n, EdgeId m, std::uint64_t seed);
/// Ear decomposition with closed ears allowed, then chords; usually has
/// articulation points.
UnGraph gen_random_2ec(Vertex n, EdgeId m, std::uint64_t seed);
/// Random directed Hamiltonian cycle plus random extra edges (twins allowed).
Digraph gen_random_sc(Vertex n, EdgeId m, std::uint64_t seed);
/// A strong orientation of a random 2-edge-connected graph, randomly
/// re-oriented where strong connectivity allows, padded with twins and extra
/// edges up to m.
Digraph gen_random_twinless_sc(Vertex n, EdgeId m, std::uint64_t seed);

/// Calls `visit` for every labelled simple graph on n vertices (2^(n(n-1)/2)
/// of them), edges ordered lexicographically.
void for_each_graph(Vertex n, const std::function<void(const UnGraph&)>& visit);

/// One generated instance: family tag and parameters.
struct CorpusEntry {
  std::string family;  // cycle, clique, directed-cycle, 2vc, 2vc-ears, 2ec, sc, twinless-sc
  std::uint64_t seed = 0;
  Vertex n = 0;
  EdgeId m = 0;
  bool operator==(const CorpusEntry&) const = default;
};

AnyGraph generate(const CorpusEntry& entry);

/// Manifest format: '#' comments, then one "family seed n m" line per entry.
struct Corpus {
  std::vector<CorpusEntry> entries;

  std::string manifest() const;
  /// Throws GraphError with the offending line.
  static Corpus parse(std::string_view text);
};

}  // namespace twinless
