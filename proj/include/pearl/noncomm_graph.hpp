#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "pearl/commutativity.hpp"
#include "pearl/gate_model.hpp"

namespace pearl {

/// Why an edge exists. Declaration order is the tie-break order used by export_dot.
enum class EdgeKind { start, st, ts, tt, end };

constexpr const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::start: return "start";
    case EdgeKind::st: return "st";
    case EdgeKind::ts: return "ts";
    case EdgeKind::tt: return "tt";
    case EdgeKind::end: return "end";
  }
  return "?";
}

/// Vertices are numbered START = 0, gate strings 1..N, END = N + 1.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t weight = 0;
  EdgeKind kind = EdgeKind::start;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted DAG over START, one vertex per gate string, and END. Every edge satisfies
/// from < to, so vertex index order is a topological order. Parallel edges are kept.
struct NoncommGraph {
  std::size_t num_strings = 0;
  std::vector<Edge> edges;

  std::size_t start() const { return 0; }
  std::size_t end() const { return num_strings + 1; }
  std::size_t num_vertices() const { return num_strings + 2; }

  std::size_t inner_edge_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) {
      return e.kind != EdgeKind::start && e.kind != EdgeKind::end;
    }));
  }

  friend bool operator==(const NoncommGraph&, const NoncommGraph&) = default;
};

/// Draws the non-commutativity graph. For each string j, in order: the START edge,
/// then the inner edges from every conflicting i < j; END edges follow for all j.
///
///  - START -> j weighs |l_j| for negative-degree CNOT/CPHASE, 0 otherwise.
///  - i -> j (st) weighs l_i, (ts) weighs -l_j, (tt) weighs 0.
///  - j -> END weighs l_j for non-negative-degree CNOT/CPHASE, 0 otherwise.
///
/// A Hadamard j only takes st and tt edges; a phase j only takes tt edges.
inline NoncommGraph build_graph(const PearlNecklace& necklace) {
  const auto& strings = necklace.strings();
  const std::size_t n = strings.size();
  NoncommGraph graph;
  graph.num_strings = n;
  graph.edges.reserve(3 * n);

  for (std::size_t j = 1; j <= n; ++j) {
    const GateString& later = strings[j - 1];
    graph.edges.push_back(
        {graph.start(), j, in_minus_set(later) ? std::abs(std::int64_t{later.degree}) : 0,
         EdgeKind::start});

    const bool takes_st = later.kind != GateKind::P;
    const bool takes_ts = later.two_qubit();
    for (std::size_t i = 1; i < j; ++i) {
      const GateString& earlier = strings[i - 1];
      if (takes_st && source_target(earlier, later)) {
        graph.edges.push_back({i, j, earlier.degree, EdgeKind::st});
      }
      if (takes_ts && target_source(earlier, later)) {
        graph.edges.push_back({i, j, -std::int64_t{later.degree}, EdgeKind::ts});
      }
      if (target_target(earlier, later)) {
        graph.edges.push_back({i, j, 0, EdgeKind::tt});
      }
    }
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const GateString& gate = strings[j - 1];
    graph.edges.push_back({j, graph.end(), in_plus_set(gate) ? gate.degree : 0, EdgeKind::end});
  }
  return graph;
}

inline std::string vertex_name(const NoncommGraph& graph, std::size_t v) {
  if (v == graph.start()) return "START";
  if (v == graph.end()) return "END";
  return "g" + std::to_string(v);
}

/// Graphviz rendering. Edges are sorted by (from, to, kind); output is byte-stable.
inline std::string export_dot(const NoncommGraph& graph) {
  std::vector<Edge> sorted = graph.edges;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
  });

  std::ostringstream out;
  out << "digraph noncomm {\n";
  out << "  rankdir=LR;\n";
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << vertex_name(graph, v) << ";\n";
  }
  for (const Edge& e : sorted) {
    out << "  " << vertex_name(graph, e.from) << " -> " << vertex_name(graph, e.to)
        << " [label=\"w=" << e.weight << " (" << edge_kind_name(e.kind) << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pearl
