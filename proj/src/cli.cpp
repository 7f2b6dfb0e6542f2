#include "twinless/cli.hpp"

#include <algorithm>
#include <chrono>
#if defined(__GLIBC__)
#include <malloc.h>
#endif
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinless/digraph.hpp"
#include "twinless/edge_cutpairs.hpp"
#include "twinless/errors.hpp"
#include "twinless/generators.hpp"
#include "twinless/oracles.hpp"
#include "twinless/twinless.hpp"
#include "twinless/undirected.hpp"
#include "twinless/vertex_cutpairs.hpp"

namespace twinless {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "tsv";
  bool oracle = false;
  bool check = false;
  std::string input;
  Vertex query_vertex = 0;
  Vertex query_u = 0, query_v = 0;
  Vertex root = 0;
  bool cases = false;
  // bench
  std::string task = "cutpairs-v";
  std::string family = "cycle";
  Vertex size = 1024;
  EdgeId edges = 0;
  std::uint64_t seed = 1;
  int repeat = 1;
};

std::string render(const Json& rows, const std::string& format) {
  if (format == "json") return rows.dump(2) + "\n";
  std::string out;
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& field : row) {
      if (!first) out += '\t';
      first = false;
      if (field.is_null()) {
        out += '-';
      } else if (field.is_string()) {
        out += field.get<std::string>();
      } else {
        out += field.dump();
      }
    }
    out += '\n';
  }
  return out;
}

const char* kind_name(TwinlessKind k) { return k == TwinlessKind::kStrong ? "strong" : "twinless-only"; }

UnGraph load_undirected(const std::string& path) {
  auto g = read_graph_file(path);
  if (auto* u = std::get_if<UnGraph>(&g)) return std::move(*u);
  throw GraphError("expected an undirected graph (header 'p u ...')", 1);
}

Digraph load_directed(const std::string& path) {
  auto g = read_graph_file(path);
  if (auto* d = std::get_if<Digraph>(&g)) return std::move(*d);
  throw GraphError("expected a directed graph (header 'p d ...')", 1);
}

Json vertex_row(Vertex v, TwinlessKind kind, std::optional<std::int64_t> after) {
  Json row{{"vertex", v}, {"kind", kind_name(kind)}, {"tscc_after", nullptr}};
  if (after) row["tscc_after"] = *after;
  return row;
}

Json edge_row(const Digraph& g, EdgeId e, TwinlessKind kind, std::optional<std::int64_t> after) {
  Json row{{"tail", g.edge(e).u}, {"head", g.edge(e).v}, {"kind", kind_name(kind)}, {"tscc_after", nullptr}};
  if (after) row["tscc_after"] = *after;
  return row;
}

Json edge_list(const UnGraph& g, const std::vector<EdgeId>& edges) {
  Json rows = Json::array();
  for (const EdgeId e : edges) rows.push_back(Json{{"u", g.edge(e).u}, {"v", g.edge(e).v}});
  return rows;
}

void require_biconnected(const UnGraph& g) {
  if (auto w = biconnectivity_violation(g)) throw PreconditionError("graph is not 2-vertex-connected", *w);
}

void require_two_edge_connected(const UnGraph& g) {
  if (auto w = two_edge_connectivity_violation(g)) throw PreconditionError("graph is not 2-edge-connected", *w);
}

void require_twinless(const Digraph& g) {
  if (auto w = twinless_connectivity_violation(g)) {
    throw PreconditionError("graph is not twinless strongly connected", *w);
  }
}

Json run_tsap(const Digraph& g, bool oracle) {
  Json rows = Json::array();
  if (!oracle) {
    for (const auto& a : twinless_strong_articulation_points(g)) rows.push_back(vertex_row(a.vertex, a.kind, a.tscc_after));
    return rows;
  }
  require_twinless(g);
  const auto strong = brute_force_strong_articulation_points(g);
  for (const Vertex v : oracle_tsap(g)) {
    if (std::binary_search(strong.begin(), strong.end(), v)) {
      rows.push_back(vertex_row(v, TwinlessKind::kStrong, std::nullopt));
    } else {
      rows.push_back(vertex_row(v, TwinlessKind::kTwinlessOnly, oracle_tscc_count_without_vertex(g, v)));
    }
  }
  return rows;
}

Json run_tsb(const Digraph& g, bool oracle) {
  Json rows = Json::array();
  if (!oracle) {
    for (const auto& b : twinless_strong_bridges(g)) rows.push_back(edge_row(g, b.edge, b.kind, b.tscc_after));
    return rows;
  }
  require_twinless(g);
  const auto strong = brute_force_strong_bridges(g);
  for (const EdgeId e : oracle_tsb(g)) {
    if (std::binary_search(strong.begin(), strong.end(), e)) {
      rows.push_back(edge_row(g, e, TwinlessKind::kStrong, std::nullopt));
    } else {
      rows.push_back(edge_row(g, e, TwinlessKind::kTwinlessOnly, oracle_tscc_count_without_edge(g, e)));
    }
  }
  return rows;
}

Json run_tscc(const Digraph& g, bool oracle) {
  Json rows = Json::array();
  for (const auto& cls : (oracle ? oracle_tsccs(g) : tsccs(g)).classes()) rows.push_back(cls);
  return rows;
}

const char* const kCaseNames[kVertexCutCases] = {"back_edge", "above_m_eq_v", "above_m_desc",
                                                 "below_high_eq_v", "below_high_lt_v"};

Json run_cutpairs_v(const UnGraph& g, bool oracle, bool cases) {
  require_biconnected(g);
  std::vector<std::int64_t> count(g.num_vertices());
  std::array<std::vector<std::int64_t>, kVertexCutCases> by_case;
  if (oracle) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) count[v] = oracle_count_v(g, v);
    if (cases) by_case = oracle_case_counts(g, build_dfs_structure(g));
  } else {
    auto report = count_vertex_cutpairs(g);
    count = std::move(report.count);
    by_case = std::move(report.by_case);
  }
  Json rows = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Json row{{"vertex", v}, {"count", count[v]}};
    if (cases) {
      for (std::size_t k = 0; k < kVertexCutCases; ++k) row[kCaseNames[k]] = by_case[k][v];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json run_cutpairs_e(const UnGraph& g, bool oracle) {
  require_two_edge_connected(g);
  std::vector<std::int64_t> count(g.num_edges());
  if (oracle) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) count[e] = oracle_count_e(g, e);
  } else {
    count = count_edge_cutpairs(g).count;
  }
  Json rows = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    rows.push_back(Json{{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"count", count[e]}});
  }
  return rows;
}

Json run_query_v(const UnGraph& g, Vertex v, bool oracle) {
  require_biconnected(g);
  if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex " + std::to_string(v));
  return edge_list(g, oracle ? oracle_cut_edges(g, v) : query_cut_edges(count_vertex_cutpairs(g), v));
}

Json run_query_e(const UnGraph& g, Vertex a, Vertex b, bool oracle) {
  require_two_edge_connected(g);
  if (a < 0 || b < 0 || a >= g.num_vertices() || b >= g.num_vertices()) {
    throw GraphError("unknown edge " + std::to_string(a) + " " + std::to_string(b));
  }
  const auto e = g.find_edge(a, b);
  if (!e) throw GraphError("unknown edge " + std::to_string(a) + " " + std::to_string(b));
  return edge_list(g, oracle ? oracle_edge_partners(g, *e) : query_cut_edges_for_edge(count_edge_cutpairs(g), *e));
}

Json run_labels(const UnGraph& g, Vertex root, bool oracle) {
  if (root < 0 || root >= g.num_vertices()) throw GraphError("DFS root " + std::to_string(root) + " out of range");
  const DfsStructure d = build_dfs_structure(g, root);
  std::vector<Vertex> l = d.l;
  NaiveLabels labels{d.low, d.high, d.high_p, d.m, d.m_p, d.b_count, d.b_count_parent};
  if (oracle) {
    labels = naive_labels(d);
    for (Vertex v = 0; v < d.n; ++v) l[v] = v;
    for (const auto& b : d.back_edges) l[b.from] = std::min(l[b.from], b.to);
  }
  auto id = [&](Vertex x) { return x == kAbsent ? Json(nullptr) : Json(d.vertex_of[x]); };
  Json rows = Json::array();
  for (Vertex v = 0; v < d.n; ++v) {
    rows.push_back(Json{{"v", id(v)},
                        {"p", id(d.parent[v])},
                        {"low", id(labels.low[v])},
                        {"l", id(l[v])},
                        {"high", id(labels.high[v])},
                        {"high_p", id(labels.high_p[v])},
                        {"M", id(labels.m[v])},
                        {"M_p", id(labels.m_p[v])}});
  }
  return rows;
}

int run_bench(const Options& o, std::ostream& out) {
  CorpusEntry entry{o.family, o.seed, o.size, o.edges};
  if (entry.m == 0) entry.m = o.family == "cycle" || o.family == "directed-cycle" ? o.size : 2 * o.size;
  const AnyGraph g = generate(entry);
  const UnGraph* ug = std::get_if<UnGraph>(&g);
  Digraph dg;
  if (o.task == "tsap" || o.task == "tsb") dg = ug ? bidirected(*ug) : std::get<Digraph>(g);
  if ((o.task == "cutpairs-v" || o.task == "cutpairs-e") && !ug) {
    throw GraphError("task " + o.task + " needs an undirected family");
  }

#if defined(__GLIBC__)
  // Keep freed memory in the process so repeats after the first do not pay
  // for fresh zeroed pages.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, -1);
#endif
  std::vector<double> seconds;
  for (int run = 0; run < o.repeat; ++run) {
    const auto start = std::chrono::steady_clock::now();
    if (o.task == "cutpairs-v") {
      if (o.oracle) {
        for (Vertex v = 0; v < ug->num_vertices(); ++v) oracle_count_v(*ug, v);
      } else {
        count_vertex_cutpairs(*ug);
      }
    } else if (o.task == "cutpairs-e") {
      if (o.oracle) {
        for (EdgeId e = 0; e < ug->num_edges(); ++e) oracle_count_e(*ug, e);
      } else {
        count_edge_cutpairs(*ug);
      }
    } else if (o.task == "tsap") {
      o.oracle ? (void)oracle_tsap(dg) : (void)twinless_strong_articulation_points(dg);
    } else {
      o.oracle ? (void)oracle_tsb(dg) : (void)twinless_strong_bridges(dg);
    }
    seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::vector<double> sorted = seconds;
  std::sort(sorted.begin(), sorted.end());
  const Vertex n = ug ? ug->num_vertices() : dg.num_vertices();
  const EdgeId m = ug ? ug->num_edges() : dg.num_edges();
  Json rows = Json::array();
  rows.push_back(Json{{"n", n}, {"m", m}, {"seconds", sorted[sorted.size() / 2]}});
  out << render(rows, o.format);
  return kExitOk;
}

// First line where two renderings differ, for the --check report.
std::string first_difference(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ga = static_cast<bool>(std::getline(sa, la));
    const bool gb = static_cast<bool>(std::getline(sb, lb));
    if (!ga && !gb) return "";
    if (!ga) la = "<end>";
    if (!gb) lb = "<end>";
    if (la != lb) return "line " + std::to_string(line) + ": fast '" + la + "' vs oracle '" + lb + "'";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Twinless strong connectivity and cut-pair analysis"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_flag("--oracle", o.oracle, "Run the brute-force reference instead of the fast path");
  app.add_flag("--check", o.check, "Run both the fast path and the oracle and compare");

  auto input_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", o.input, "Graph file")->required();
    return cmd;
  };
  auto* tsap = input_cmd("tsap", "Twinless strong articulation points of a digraph");
  auto* tsb = input_cmd("tsb", "Twinless strong bridges of a digraph");
  auto* tscc = input_cmd("tscc", "Twinless strongly connected components");
  auto* cutv = input_cmd("cutpairs-v", "count(v) for every vertex of a 2-vertex-connected graph");
  cutv->add_flag("--cases", o.cases, "Add per-case subtotals");
  auto* cute = input_cmd("cutpairs-e", "count(e) for every edge of a 2-edge-connected graph");
  auto* queryv = input_cmd("query-v", "Edges forming a cut-pair with a vertex");
  queryv->add_option("vertex", o.query_vertex, "Vertex id")->required();
  auto* querye = input_cmd("query-e", "Edges forming a cut-pair with an edge");
  querye->add_option("u", o.query_u, "First endpoint")->required();
  querye->add_option("v", o.query_v, "Second endpoint")->required();
  auto* labels = input_cmd("labels", "DFS labels, one line per vertex in preorder");
  labels->add_option("--root", o.root, "DFS root");
  auto* bench = app.add_subcommand("bench", "Time one analysis on a generated graph");
  bench->add_option("task", o.task, "Analysis to time")
      ->check(CLI::IsMember({"cutpairs-v", "cutpairs-e", "tsap", "tsb"}));
  bench->add_option("--family", o.family, "Generator family");
  bench->add_option("--size", o.size, "Vertex count")->check(CLI::PositiveNumber);
  bench->add_option("--edges", o.edges, "Edge count (default depends on the family)");
  bench->add_option("--seed", o.seed, "Generator seed");
  bench->add_option("--repeat", o.repeat, "Runs; the median time is reported")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (bench->parsed()) {
      if (o.check) throw GraphError("--check does not apply to bench");
      return run_bench(o, out);
    }
    auto compute = [&](bool oracle) -> Json {
      if (tsap->parsed()) return run_tsap(load_directed(o.input), oracle);
      if (tsb->parsed()) return run_tsb(load_directed(o.input), oracle);
      if (tscc->parsed()) return run_tscc(load_directed(o.input), oracle);
      if (cutv->parsed()) return run_cutpairs_v(load_undirected(o.input), oracle, o.cases);
      if (cute->parsed()) return run_cutpairs_e(load_undirected(o.input), oracle);
      if (queryv->parsed()) return run_query_v(load_undirected(o.input), o.query_vertex, oracle);
      if (querye->parsed()) return run_query_e(load_undirected(o.input), o.query_u, o.query_v, oracle);
      return run_labels(load_undirected(o.input), o.root, oracle);
    };
    const std::string primary = render(compute(o.oracle && !o.check), o.format);
    out << primary;
    if (o.check) {
      const std::string reference = render(compute(true), o.format);
      if (reference != primary) {
        err << "mismatch: " << first_difference(primary, reference) << "\n";
        return kExitMismatch;
      }
    }
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace twinless
