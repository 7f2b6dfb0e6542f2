#include "twinless/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "twinless/digraph.hpp"
#include "twinless/errors.hpp"
#include "twinless/undirected.hpp"

namespace twinless {
namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::uint64_t pair_key(Vertex a, Vertex b, bool ordered) {
  if (!ordered && a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Edge list under construction, rejecting repeats.
class EdgeBag {
 public:
  EdgeBag(Vertex n, bool ordered) : n_(n), ordered_(ordered) {}

  bool add(Vertex a, Vertex b) {
    if (a == b || !keys_.insert(pair_key(a, b, ordered_)).second) return false;
    edges_.push_back({a, b});
    return true;
  }
  bool has(Vertex a, Vertex b) const { return keys_.count(pair_key(a, b, ordered_)) > 0; }
  std::size_t size() const { return edges_.size(); }
  std::vector<Edge>& edges() { return edges_; }

  // Adds `count` pairs chosen uniformly among those still missing.
  void add_random(std::int64_t count, Rng& rng) {
    const std::int64_t slots = static_cast<std::int64_t>(n_) * (n_ - 1) / (ordered_ ? 1 : 2);
    const std::int64_t missing = slots - static_cast<std::int64_t>(edges_.size());
    require(count <= missing, "too many edges requested");
    if (count <= 0) return;
    if (count * 2 <= missing) {
      while (count > 0) {
        const auto a = static_cast<Vertex>(uniform(rng, 0, n_ - 1));
        const auto b = static_cast<Vertex>(uniform(rng, 0, n_ - 1));
        if (add(a, b)) --count;
      }
      return;
    }
    std::vector<Edge> pool;
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = ordered_ ? 0 : a + 1; b < n_; ++b) {
        if (a != b && !has(a, b)) pool.push_back({a, b});
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::int64_t i = 0; i < count; ++i) add(pool[i].u, pool[i].v);
  }

 private:
  Vertex n_;
  bool ordered_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<Edge> edges_;
};

// Random vertex relabelling and edge order; undirected edges also get a
// random endpoint order.
std::vector<Edge> scramble(Vertex n, std::vector<Edge> edges, bool ordered, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) {
    e = {perm[e.u], perm[e.v]};
    if (!ordered && uniform(rng, 0, 1)) std::swap(e.u, e.v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

// Splits `total` into `parts` positive summands.
std::vector<std::int32_t> composition(std::int32_t total, std::int32_t parts, Rng& rng) {
  std::vector<std::int32_t> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int32_t> out;
  std::int32_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

// Cycle on 0..c-1 followed by ears made of fresh vertices.
UnGraph ear_graph(Vertex n, EdgeId m, std::uint64_t seed, bool allow_closed) {
  require(n >= 3, "need at least 3 vertices");
  require(m >= n && static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1) / 2,
          "edge count out of range");
  Rng rng(seed);
  const auto ears = static_cast<std::int32_t>(uniform(rng, 0, std::min<std::int64_t>(m - n, n - 3)));
  const auto cycle_len = ears == 0 ? n : static_cast<Vertex>(uniform(rng, 3, n - ears));
  EdgeBag bag(n, false);
  for (Vertex v = 0; v < cycle_len; ++v) bag.add(v, (v + 1) % cycle_len);
  Vertex next = cycle_len;
  if (ears > 0) {
    for (const auto size : composition(n - cycle_len, ears, rng)) {
      const auto a = static_cast<Vertex>(uniform(rng, 0, next - 1));
      Vertex b = a;
      const bool closed = allow_closed && size >= 2 && uniform(rng, 0, 1);
      while (!closed && b == a) b = static_cast<Vertex>(uniform(rng, 0, next - 1));
      Vertex prev = a;
      for (std::int32_t i = 0; i < size; ++i) {
        bag.add(prev, next);
        prev = next++;
      }
      bag.add(prev, b);
    }
  }
  bag.add_random(m - static_cast<EdgeId>(bag.size()), rng);
  return UnGraph(n, scramble(n, std::move(bag.edges()), false, rng));
}

}  // namespace

UnGraph gen_cycle(Vertex n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return UnGraph(n, std::move(edges));
}

UnGraph gen_clique(Vertex n) {
  require(n >= 1, "a clique needs a vertex");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return UnGraph(n, std::move(edges));
}

UnGraph gen_theta(const std::vector<std::int32_t>& path_lengths) {
  require(path_lengths.size() >= 2, "a theta graph needs at least two paths");
  require(std::count(path_lengths.begin(), path_lengths.end(), 1) <= 1, "at most one direct edge");
  Vertex n = 2;
  std::vector<Edge> edges;
  for (const auto len : path_lengths) {
    require(len >= 1, "path length must be positive");
    Vertex prev = 0;
    for (std::int32_t i = 1; i < len; ++i) {
      edges.push_back({prev, n});
      prev = n++;
    }
    edges.push_back({prev, 1});
  }
  return UnGraph(n, std::move(edges));
}

Digraph directed_cycle(Vertex n) {
  require(n >= 2, "a directed cycle needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(edges));
}

Digraph bidirected(const UnGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v});
    edges.push_back({e.v, e.u});
  }
  return Digraph(g.num_vertices(), std::move(edges));
}

UnGraph gen_random_2vc(Vertex n, EdgeId m, std::uint64_t seed) {
  require(n >= 3, "need at least 3 vertices");
  require(m >= n && static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1) / 2,
          "edge count out of range");
  Rng rng(seed);
  EdgeBag bag(n, false);
  for (Vertex v = 0; v < n; ++v) bag.add(v, (v + 1) % n);
  bag.add_random(m - n, rng);
  UnGraph g(n, scramble(n, std::move(bag.edges()), false, rng));
  if (biconnectivity_violation(g)) throw std::logic_error("generated graph is not 2-vertex-connected");
  return g;
}

UnGraph gen_random_2vc_ears(Vertex n, EdgeId m, std::uint64_t seed) {
  UnGraph g = ear_graph(n, m, seed, false);
  if (biconnectivity_violation(g)) throw std::logic_error("generated graph is not 2-vertex-connected");
  return g;
}

UnGraph gen_random_2ec(Vertex n, EdgeId m, std::uint64_t seed) {
  UnGraph g = ear_graph(n, m, seed, true);
  if (two_edge_connectivity_violation(g)) throw std::logic_error("generated graph is not 2-edge-connected");
  return g;
}

Digraph gen_random_sc(Vertex n, EdgeId m, std::uint64_t seed) {
  require(n >= 2, "need at least 2 vertices");
  require(m >= n && static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1),
          "edge count out of range");
  Rng rng(seed);
  EdgeBag bag(n, true);
  for (Vertex v = 0; v < n; ++v) bag.add(v, (v + 1) % n);
  bag.add_random(m - n, rng);
  Digraph g(n, scramble(n, std::move(bag.edges()), true, rng));
  if (!is_strongly_connected(g)) throw std::logic_error("generated digraph is not strongly connected");
  return g;
}

Digraph gen_random_twinless_sc(Vertex n, EdgeId m, std::uint64_t seed) {
  require(n >= 3, "need at least 3 vertices");
  require(m >= n && static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1),
          "edge count out of range");
  Rng rng(seed);
  const auto max_undirected = std::min<std::int64_t>(m, static_cast<std::int64_t>(n) * (n - 1) / 2);
  const auto base_m = static_cast<EdgeId>(uniform(rng, n, max_undirected));
  const UnGraph base = gen_random_2ec(n, base_m, rng());

  // Strong orientation: tree edges downwards, back edges upwards.
  std::vector<Edge> arcs(base.num_edges());
  {
    std::vector<std::int32_t> pre(n, -1);
    std::vector<char> done(base.num_edges(), 0);
    std::vector<std::pair<Vertex, std::int32_t>> stack{{0, 0}};
    pre[0] = 0;
    std::int32_t counter = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto adj = base.incident(v);
      if (next == static_cast<std::int32_t>(adj.size())) {
        stack.pop_back();
        continue;
      }
      const auto [w, e] = adj[next++];
      if (done[e]) continue;
      done[e] = 1;
      arcs[e] = {v, w};
      if (pre[w] < 0) {
        pre[w] = counter++;
        stack.emplace_back(w, 0);
      }
    }
  }
  // Random flips that keep strong connectivity.
  for (int attempt = 0; attempt < 32 && !arcs.empty(); ++attempt) {
    const auto e = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(arcs.size()) - 1));
    std::swap(arcs[e].u, arcs[e].v);
    if (!is_strongly_connected(Digraph(n, arcs))) std::swap(arcs[e].u, arcs[e].v);
  }

  EdgeBag bag(n, true);
  for (const auto& a : arcs) bag.add(a.u, a.v);
  // Roughly half of the padding are twins of existing arcs.
  std::vector<Edge> twins;
  for (const auto& a : arcs) twins.push_back({a.v, a.u});
  std::shuffle(twins.begin(), twins.end(), rng);
  const std::int64_t extra = m - static_cast<std::int64_t>(bag.size());
  const std::int64_t want_twins = std::min<std::int64_t>(uniform(rng, 0, extra), static_cast<std::int64_t>(twins.size()));
  for (std::int64_t i = 0; i < want_twins; ++i) bag.add(twins[i].u, twins[i].v);
  bag.add_random(m - static_cast<EdgeId>(bag.size()), rng);

  Digraph g(n, scramble(n, std::move(bag.edges()), true, rng));
  if (!is_strongly_connected(g) || two_edge_connectivity_violation(underlying(g).graph)) {
    throw std::logic_error("generated digraph is not twinless strongly connected");
  }
  return g;
}

void for_each_graph(Vertex n, const std::function<void(const UnGraph&)>& visit) {
  require(n >= 0 && n <= 7, "exhaustive enumeration supports n <= 7");
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    visit(UnGraph(n, edges));
  }
}

namespace {

constexpr std::array<std::string_view, 8> kFamilies{"cycle", "clique", "directed-cycle", "2vc",
                                                    "2vc-ears", "2ec", "sc", "twinless-sc"};

}  // namespace

AnyGraph generate(const CorpusEntry& e) {
  if (e.family == "cycle") return gen_cycle(e.n);
  if (e.family == "clique") return gen_clique(e.n);
  if (e.family == "directed-cycle") return directed_cycle(e.n);
  if (e.family == "2vc") return gen_random_2vc(e.n, e.m, e.seed);
  if (e.family == "2vc-ears") return gen_random_2vc_ears(e.n, e.m, e.seed);
  if (e.family == "2ec") return gen_random_2ec(e.n, e.m, e.seed);
  if (e.family == "sc") return gen_random_sc(e.n, e.m, e.seed);
  if (e.family == "twinless-sc") return gen_random_twinless_sc(e.n, e.m, e.seed);
  throw std::invalid_argument("unknown family '" + e.family + "'");
}

std::string Corpus::manifest() const {
  std::ostringstream out;
  out << "# family seed n m\n";
  for (const auto& e : entries) out << e.family << ' ' << e.seed << ' ' << e.n << ' ' << e.m << '\n';
  return out.str();
}

Corpus Corpus::parse(std::string_view text) {
  Corpus corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    CorpusEntry e;
    std::string rest;
    if (!(fields >> e.family >> e.seed >> e.n >> e.m) || (fields >> rest)) {
      throw GraphError("malformed manifest line", number);
    }
    if (std::find(kFamilies.begin(), kFamilies.end(), e.family) == kFamilies.end()) {
      throw GraphError("unknown family '" + e.family + "'", number);
    }
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

}  // namespace twinless
