#include "twinless/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "twinless/errors.hpp"

namespace twinless {
namespace {

struct EdgeProblem {
  std::size_t index;
  std::string message;
};

std::optional<EdgeProblem> find_invalid_edge(Vertex n, std::span<const Edge> edges, bool directed) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      return EdgeProblem{i, "vertex out of range in edge " + std::to_string(u) + " " +
                                std::to_string(v) + " (n = " + std::to_string(n) + ")"};
    }
    if (u == v) return EdgeProblem{i, "self-loop at vertex " + std::to_string(u)};
    if (!directed && u > v) std::swap(u, v);
    const auto key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
                     static_cast<std::uint64_t>(v);
    if (!seen.insert(key).second) {
      return EdgeProblem{i, "duplicate edge " + std::to_string(edges[i].u) + " " +
                                std::to_string(edges[i].v)};
    }
  }
  return std::nullopt;
}

void build_csr(Vertex n, std::span<const Edge> edges, bool by_tail, bool both,
               std::vector<std::int32_t>& offsets, std::vector<Incidence>& items) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    if (both || by_tail) ++offsets[e.u + 1];
    if (both || !by_tail) ++offsets[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  items.resize(offsets[n]);
  std::vector<std::int32_t> fill(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges.size()); ++id) {
    const auto& e = edges[id];
    if (both || by_tail) items[fill[e.u]++] = {e.v, id};
    if (both || !by_tail) items[fill[e.v]++] = {e.u, id};
  }
}

void require_valid(Vertex n, std::span<const Edge> edges, bool directed) {
  if (n < 0) throw GraphError("negative vertex count");
  if (auto bad = find_invalid_edge(n, edges, directed)) {
    throw GraphError("edge " + std::to_string(bad->index) + ": " + bad->message);
  }
}

std::optional<EdgeId> scan_for(std::span<const Incidence> list, Vertex target) {
  for (const auto& inc : list) {
    if (inc.to == target) return inc.edge;
  }
  return std::nullopt;
}

template <class G>
Subgraph<G> restrict_to(const G& g, std::vector<char> keep_vertex, std::vector<char> keep_edge) {
  Subgraph<G> sub;
  sub.local_vertex.assign(g.num_vertices(), kAbsent);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (keep_vertex[v]) {
      sub.local_vertex[v] = static_cast<Vertex>(sub.parent_vertex.size());
      sub.parent_vertex.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& [u, v] = g.edge(e);
    if (keep_edge[e] && keep_vertex[u] && keep_vertex[v]) {
      edges.push_back({sub.local_vertex[u], sub.local_vertex[v]});
      sub.parent_edge.push_back(e);
    }
  }
  sub.graph = G(static_cast<Vertex>(sub.parent_vertex.size()), std::move(edges));
  return sub;
}

template <class G>
Subgraph<G> induced_impl(const G& g, std::span<const Vertex> keep) {
  std::vector<char> keep_vertex(g.num_vertices(), 0);
  for (auto v : keep) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex " + std::to_string(v));
    keep_vertex[v] = 1;
  }
  return restrict_to(g, std::move(keep_vertex), std::vector<char>(g.num_edges(), 1));
}

template <class G>
Subgraph<G> without_impl(const G& g, const Deletion& items) {
  std::vector<char> keep_vertex(g.num_vertices(), 1);
  std::vector<char> keep_edge(g.num_edges(), 1);
  for (auto v : items.vertices) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex " + std::to_string(v));
    keep_vertex[v] = 0;
  }
  for (auto e : items.edges) {
    if (e < 0 || e >= g.num_edges()) throw GraphError("unknown edge " + std::to_string(e));
    keep_edge[e] = 0;
  }
  return restrict_to(g, std::move(keep_vertex), std::move(keep_edge));
}

// Line-oriented reader for the text format.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    auto j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

UnGraph::UnGraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require_valid(n_, edges_, false);
  build_csr(n_, edges_, true, true, offsets_, incidences_);
}

std::optional<EdgeId> UnGraph::find_edge(Vertex a, Vertex b) const {
  return degree(a) <= degree(b) ? scan_for(incident(a), b) : scan_for(incident(b), a);
}

Digraph::Digraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  require_valid(n_, edges_, true);
  build_csr(n_, edges_, true, false, out_offsets_, out_);
  build_csr(n_, edges_, false, false, in_offsets_, in_);
}

std::optional<EdgeId> Digraph::find_edge(Vertex tail, Vertex head) const {
  return scan_for(out(tail), head);
}

Digraph Digraph::reversed() const {
  std::vector<Edge> flipped;
  flipped.reserve(edges_.size());
  for (const auto& e : edges_) flipped.push_back({e.v, e.u});
  return Digraph(n_, std::move(flipped));
}

Subgraph<UnGraph> induced(const UnGraph& g, std::span<const Vertex> keep) {
  return induced_impl(g, keep);
}
Subgraph<Digraph> induced(const Digraph& g, std::span<const Vertex> keep) {
  return induced_impl(g, keep);
}
Subgraph<UnGraph> without(const UnGraph& g, const Deletion& items) { return without_impl(g, items); }
Subgraph<Digraph> without(const Digraph& g, const Deletion& items) { return without_impl(g, items); }

Underlying underlying(const Digraph& g) {
  Underlying out;
  out.undirected_of.assign(g.num_edges(), kAbsent);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (out.undirected_of[e] != kAbsent) continue;
    const auto [u, v] = g.edge(e);
    const auto id = static_cast<EdgeId>(edges.size());
    edges.push_back({u, v});
    out.undirected_of[e] = id;
    std::array<EdgeId, 2> src{e, kAbsent};
    if (auto twin = g.find_edge(v, u)) {
      out.undirected_of[*twin] = id;
      src[1] = *twin;
    }
    out.sources.push_back(src);
  }
  out.graph = UnGraph(g.num_vertices(), std::move(edges));
  return out;
}

AnyGraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw GraphError("missing header \"p <d|u> <n> <m>\"", reader.line_no() + 1);
  auto header = split_ws(line);
  if (header.size() != 4 || header[0] != "p" || (header[1] != "d" && header[1] != "u")) {
    throw GraphError("malformed header, expected \"p <d|u> <n> <m>\"", reader.line_no());
  }
  const bool directed = header[1] == "d";
  auto n = to_int(header[2]);
  auto m = to_int(header[3]);
  if (!n || !m || *n < 0 || *m < 0 || *n > INT32_MAX || *m > INT32_MAX) {
    throw GraphError("malformed header counts", reader.line_no());
  }

  std::vector<Edge> edges;
  std::vector<int> line_of;
  edges.reserve(static_cast<std::size_t>(*m));
  while (reader.next(line)) {
    if (static_cast<std::int64_t>(edges.size()) == *m) {
      throw GraphError("more than " + std::to_string(*m) + " edge lines", reader.line_no());
    }
    auto tokens = split_ws(line);
    std::optional<std::int64_t> u, v;
    if (tokens.size() == 2) {
      u = to_int(tokens[0]);
      v = to_int(tokens[1]);
    }
    if (!u || !v) throw GraphError("malformed edge line, expected \"u v\"", reader.line_no());
    if (*u < 0 || *u >= *n || *v < 0 || *v >= *n) {
      throw GraphError("vertex out of range (n = " + std::to_string(*n) + ")", reader.line_no());
    }
    edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
    line_of.push_back(reader.line_no());
  }
  if (static_cast<std::int64_t>(edges.size()) != *m) {
    throw GraphError("expected " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()),
                     reader.line_no());
  }
  if (auto bad = find_invalid_edge(static_cast<Vertex>(*n), edges, directed)) {
    throw GraphError(bad->message, line_of[bad->index]);
  }
  if (directed) return Digraph(static_cast<Vertex>(*n), std::move(edges));
  return UnGraph(static_cast<Vertex>(*n), std::move(edges));
}

UnGraph parse_undirected(std::string_view text) {
  auto g = parse_graph(text);
  if (auto* u = std::get_if<UnGraph>(&g)) return std::move(*u);
  throw GraphError("expected an undirected graph (\"p u\")");
}

Digraph parse_directed(std::string_view text) {
  auto g = parse_graph(text);
  if (auto* d = std::get_if<Digraph>(&g)) return std::move(*d);
  throw GraphError("expected a directed graph (\"p d\")");
}

AnyGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

namespace {
template <class G>
std::string serialize_impl(const G& g, char kind) {
  std::string out;
  out.reserve(16 + static_cast<std::size_t>(g.num_edges()) * 12);
  out += "p ";
  out += kind;
  out += ' ' + std::to_string(g.num_vertices()) + ' ' + std::to_string(g.num_edges()) + '\n';
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}
}  // namespace

std::string serialize(const UnGraph& g) { return serialize_impl(g, 'u'); }
std::string serialize(const Digraph& g) { return serialize_impl(g, 'd'); }

}  // namespace twinless
