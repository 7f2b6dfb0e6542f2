#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twinless/generators.hpp"
#include "twinless/graph.hpp"
#include "twinless/undirected.hpp"

namespace twinless::testing {

inline UnGraph make_graph(Vertex n, std::vector<Edge> edges) { return UnGraph(n, std::move(edges)); }
inline Digraph make_digraph(Vertex n, std::vector<Edge> edges) { return Digraph(n, std::move(edges)); }

// Two triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline UnGraph bowtie() { return make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// Two triangles joined by the bridge {2,3}.
inline UnGraph barbell() { return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}); }

// Seeded random 2VC graphs mixing both generator families, n in [3, max_n].
inline std::vector<UnGraph> random_biconnected(int count, Vertex max_n, EdgeId max_m, std::uint64_t seed) {
  std::vector<UnGraph> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed * 1000003 + static_cast<std::uint64_t>(i);
    const Vertex n = 3 + static_cast<Vertex>(s % static_cast<std::uint64_t>(max_n - 2));
    const auto cap = std::min<std::int64_t>(max_m, static_cast<std::int64_t>(n) * (n - 1) / 2);
    const auto m = static_cast<EdgeId>(n + static_cast<std::int64_t>((s / 7) % static_cast<std::uint64_t>(cap - n + 1)));
    out.push_back(i % 2 ? gen_random_2vc(n, m, s) : gen_random_2vc_ears(n, m, s));
  }
  return out;
}

inline std::vector<UnGraph> random_two_edge_connected(int count, Vertex max_n, EdgeId max_m, std::uint64_t seed) {
  std::vector<UnGraph> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed * 1000003 + static_cast<std::uint64_t>(i);
    const Vertex n = 3 + static_cast<Vertex>(s % static_cast<std::uint64_t>(max_n - 2));
    const auto cap = std::min<std::int64_t>(max_m, static_cast<std::int64_t>(n) * (n - 1) / 2);
    const auto m = static_cast<EdgeId>(n + static_cast<std::int64_t>((s / 7) % static_cast<std::uint64_t>(cap - n + 1)));
    out.push_back(gen_random_2ec(n, m, s));
  }
  return out;
}

// Every labelled graph on n vertices passing `keep`.
inline std::vector<UnGraph> all_graphs(Vertex n, const std::function<bool(const UnGraph&)>& keep) {
  std::vector<UnGraph> out;
  for_each_graph(n, [&](const UnGraph& g) {
    if (keep(g)) out.push_back(g);
  });
  return out;
}

}  // namespace twinless::testing
