#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearl/gate_model.hpp"
#include "pearl/noncomm_graph.hpp"

namespace pearl {

struct LongestPathResult {
  /// Longest START -> v weight for every vertex; kUnreachable where no path exists.
  std::vector<std::int64_t> w;
  std::int64_t total = 0;
  /// One optimal START -> END vertex sequence.
  std::vector<std::size_t> witness;

  static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::min();
};

/// Longest paths from START over a graph whose edges all run from lower to higher vertex
/// index. Negative weights are fine. Runs in O(V + E): edges are bucketed by head vertex
/// and vertices are relaxed in index order. Ties keep the smallest predecessor.
inline LongestPathResult longest_paths(const NoncommGraph& graph) {
  const std::size_t nv = graph.num_vertices();

  std::vector<std::size_t> offset(nv + 1, 0);
  for (const Edge& e : graph.edges) {
    if (e.from >= e.to || e.to >= nv) {
      throw std::logic_error("non-commutativity graph edge violates vertex order");
    }
    ++offset[e.to + 1];
  }
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] += offset[v];
  std::vector<const Edge*> incoming(graph.edges.size());
  {
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (const Edge& e : graph.edges) incoming[fill[e.to]++] = &e;
  }

  LongestPathResult result;
  result.w.assign(nv, LongestPathResult::kUnreachable);
  std::vector<std::size_t> pred(nv, nv);
  result.w[graph.start()] = 0;

  for (std::size_t v = 1; v < nv; ++v) {
    for (std::size_t k = offset[v]; k < offset[v + 1]; ++k) {
      const Edge& e = *incoming[k];
      if (result.w[e.from] == LongestPathResult::kUnreachable) continue;
      const std::int64_t candidate = result.w[e.from] + e.weight;
      if (candidate > result.w[v] || (candidate == result.w[v] && e.from < pred[v])) {
        result.w[v] = candidate;
        pred[v] = e.from;
      }
    }
  }

  const std::size_t end = graph.end();
  if (result.w[end] == LongestPathResult::kUnreachable) {
    throw std::logic_error("END is unreachable from START");
  }
  result.total = result.w[end];
  for (std::size_t v = end; v != graph.start(); v = pred[v]) result.witness.push_back(v);
  result.witness.push_back(graph.start());
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

/// A gate of the repeated unitary. `tau` is the target's frame index; `sigma` is the
/// source's frame index for CNOT/CPHASE and empty otherwise.
struct PlacedGate {
  GateKind kind = GateKind::H;
  int source = 0;
  int target = 1;
  std::int64_t tau = 0;
  std::optional<std::int64_t> sigma;

  std::int64_t highest_frame() const { return sigma ? std::max(tau, *sigma) : tau; }

  friend bool operator==(const PlacedGate&, const PlacedGate&) = default;
};

struct ConvRealization {
  int frame_size = 1;
  std::vector<PlacedGate> gates;
  /// Frames of memory fed back between iterations; frame indices used are 0..memory.
  std::int64_t memory = 0;

  friend bool operator==(const ConvRealization&, const ConvRealization&) = default;
};

/// Places every gate at the longest-path weight of its vertex: tau_j = w_j,
/// sigma_j = tau_j + l_j, memory = w[END].
inline ConvRealization assign_frames(const PearlNecklace& necklace, const NoncommGraph& graph) {
  if (graph.num_strings != necklace.size()) {
    throw std::invalid_argument("graph was not built from this necklace");
  }
  const LongestPathResult paths = longest_paths(graph);
  ConvRealization realization;
  realization.frame_size = necklace.frame_size();
  realization.memory = paths.total;
  realization.gates.reserve(necklace.size());
  for (std::size_t j = 1; j <= necklace.size(); ++j) {
    const GateString& gate = necklace.at(j);
    PlacedGate placed{gate.kind, gate.source, gate.target, paths.w[j], std::nullopt};
    if (gate.two_qubit()) placed.sigma = placed.tau + gate.degree;
    realization.gates.push_back(placed);
  }
  return realization;
}

inline ConvRealization compile(const PearlNecklace& necklace) {
  return assign_frames(necklace, build_graph(necklace));
}

/// Gate in the (sigma, tau) notation: "CNOT(3,2)(3,2)", "H(1)(0)".
inline std::string render_gate(const PlacedGate& gate) {
  std::ostringstream out;
  out << kind_name(gate.kind);
  if (gate.sigma) {
    out << '(' << gate.source << ',' << gate.target << ")(" << *gate.sigma << ',' << gate.tau
        << ')';
  } else {
    out << '(' << gate.target << ")(" << gate.tau << ')';
  }
  return out.str();
}

inline std::string render_realization(const ConvRealization& realization) {
  std::ostringstream out;
  for (const PlacedGate& gate : realization.gates) out << render_gate(gate) << '\n';
  out << "memory: " << realization.memory << '\n';
  return out.str();
}

}  // namespace pearl
