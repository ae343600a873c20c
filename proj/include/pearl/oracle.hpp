#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pearl/commutativity.hpp"
#include "pearl/gate_model.hpp"
#include "pearl/noncomm_graph.hpp"
#include "pearl/scheduler.hpp"
#include "pearl/tableau.hpp"

// Independent checks on a realization: exhaustive minimality search, instance-level order
// preservation, and Clifford-tableau equivalence of both circuits on a finite window of
// frames. None of these read the non-commutativity graph or its longest paths.

namespace pearl::oracle {

/// A gate string or window configuration that cannot be checked as requested.
class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Site {
  int qubit = 1;  // 1-based
  std::int64_t frame = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
};

/// One concrete gate of an infinitely repeated string. Instances are identified by
/// (string_index, target.frame); the source site of a two-qubit string sits at
/// target.frame + degree.
struct GateInstance {
  GateKind kind = GateKind::H;
  Site source;  // meaningful for CNOT/CPHASE only
  Site target;
  std::size_t string_index = 0;

  bool two_qubit() const { return is_two_qubit(kind); }
  std::pair<std::size_t, std::int64_t> key() const { return {string_index, target.frame}; }

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

inline GateInstance make_instance(const GateString& gate, std::size_t j,
                                  std::int64_t target_frame) {
  GateInstance inst;
  inst.kind = gate.kind;
  inst.string_index = j;
  inst.target = {gate.target, target_frame};
  if (gate.two_qubit()) inst.source = {gate.source, target_frame + gate.degree};
  return inst;
}

/// All instances of string j whose sites lie in frames [0, frames), by ascending target frame.
inline std::vector<GateInstance> enumerate_instances(const PearlNecklace& necklace, std::size_t j,
                                                     std::int64_t frames) {
  const GateString& gate = necklace.at(j);
  const std::int64_t lo = gate.two_qubit() ? std::max<std::int64_t>(0, -gate.degree) : 0;
  const std::int64_t hi = gate.two_qubit() ? std::min(frames, frames - gate.degree) : frames;
  std::vector<GateInstance> out;
  for (std::int64_t f = lo; f < hi; ++f) out.push_back(make_instance(gate, j, f));
  return out;
}

/// Qubit slot assignment for a window of `frames` frames of `frame_size` qubits:
/// slot = frame * frame_size + (qubit - 1).
struct WindowLayout {
  int frame_size = 1;
  std::int64_t frames = 1;

  std::size_t qubits() const { return static_cast<std::size_t>(frame_size * frames); }

  std::size_t slot(const Site& site) const {
    if (site.frame < 0 || site.frame >= frames || site.qubit < 1 || site.qubit > frame_size) {
      throw WindowError("site (qubit " + std::to_string(site.qubit) + ", frame " +
                        std::to_string(site.frame) + ") lies outside the window");
    }
    return static_cast<std::size_t>(site.frame * frame_size + (site.qubit - 1));
  }

  Site site(std::size_t slot) const {
    return {static_cast<int>(slot % static_cast<std::size_t>(frame_size)) + 1,
            static_cast<std::int64_t>(slot / static_cast<std::size_t>(frame_size))};
  }
};

inline void apply_gate(CliffordTableau& tableau, const GateInstance& inst,
                       const WindowLayout& layout) {
  const std::size_t t = layout.slot(inst.target);
  switch (inst.kind) {
    case GateKind::H: tableau.hadamard(t); break;
    case GateKind::P: tableau.phase(t); break;
    case GateKind::CNOT: tableau.cnot(layout.slot(inst.source), t); break;
    case GateKind::CPHASE: tableau.cphase(layout.slot(inst.source), t); break;
  }
}

inline CliffordTableau circuit_tableau(std::span<const GateInstance> instances,
                                       const WindowLayout& layout) {
  CliffordTableau tableau(layout.qubits());
  for (const GateInstance& inst : instances) apply_gate(tableau, inst, layout);
  return tableau;
}

/// String-major order of the pearl-necklace encoder: every instance of string 1, then of
/// string 2, and so on.
inline std::vector<GateInstance> necklace_order(const PearlNecklace& necklace,
                                                std::int64_t frames) {
  std::vector<GateInstance> out;
  for (std::size_t j = 1; j <= necklace.size(); ++j) {
    auto part = enumerate_instances(necklace, j, frames);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace detail {

inline void check_realization_matches(const PearlNecklace& necklace,
                                      const ConvRealization& realization) {
  if (realization.gates.size() != necklace.size()) {
    throw std::invalid_argument("realization and necklace differ in gate count");
  }
  for (std::size_t j = 1; j <= necklace.size(); ++j) {
    const GateString& gate = necklace.at(j);
    const PlacedGate& placed = realization.gates[j - 1];
    const bool same = placed.kind == gate.kind && placed.target == gate.target &&
                      (!gate.two_qubit() ||
                       (placed.source == gate.source && placed.sigma &&
                        *placed.sigma == placed.tau + gate.degree));
    if (!same) {
      throw std::invalid_argument("realization gate " + std::to_string(j) +
                                  " does not match its gate string");
    }
  }
}

}  // namespace detail

/// Iteration-major order of the convolutional encoder. Each iteration applies gates 1..N
/// at their frame indices plus an offset; successive iterations move one frame down, so the
/// offset runs from the top of the window down to -(highest frame index). Out-of-window
/// instances are dropped, which leaves exactly the instance set of necklace_order.
inline std::vector<GateInstance> realization_order(const PearlNecklace& necklace,
                                                   const ConvRealization& realization,
                                                   std::int64_t frames) {
  detail::check_realization_matches(necklace, realization);
  std::int64_t highest = 0;
  std::int64_t lowest = 0;
  for (const PlacedGate& g : realization.gates) {
    highest = std::max(highest, g.highest_frame());
    lowest = std::min({lowest, g.tau, g.sigma.value_or(g.tau)});
  }

  std::vector<GateInstance> out;
  for (std::int64_t offset = frames - 1 - lowest; offset >= -highest; --offset) {
    for (std::size_t j = 1; j <= necklace.size(); ++j) {
      const GateString& gate = necklace.at(j);
      const PlacedGate& placed = realization.gates[j - 1];
      GateInstance inst = make_instance(gate, j, placed.tau + offset);
      const bool inside = inst.target.frame >= 0 && inst.target.frame < frames &&
                          (!inst.two_qubit() ||
                           (inst.source.frame >= 0 && inst.source.frame < frames));
      if (inside) out.push_back(inst);
    }
  }
  return out;
}

struct EquivalenceReport {
  bool equal = false;
  /// Empty when equal; otherwise names the first Pauli generator whose image differs.
  std::string divergence;
};

/// Compares the tableaus (bits and signs) of necklace_order and realization_order.
/// Throws WindowError when some string has no instance inside the window.
inline EquivalenceReport verify_equivalence(const PearlNecklace& necklace,
                                            const ConvRealization& realization,
                                            std::int64_t frames) {
  if (frames < 1) throw WindowError("window must hold at least one frame");
  for (std::size_t j = 1; j <= necklace.size(); ++j) {
    if (enumerate_instances(necklace, j, frames).empty()) {
      throw WindowError("window of " + std::to_string(frames) +
                        " frames holds no instance of gate string " + std::to_string(j));
    }
  }
  const WindowLayout layout{necklace.frame_size(), frames};
  const auto reference = circuit_tableau(necklace_order(necklace, frames), layout);
  const auto candidate = circuit_tableau(realization_order(necklace, realization, frames), layout);

  EquivalenceReport report;
  const auto row = reference.first_difference(candidate);
  report.equal = !row.has_value();
  if (row) {
    const std::size_t q = layout.qubits();
    const bool is_x = *row < q;
    const Site site = layout.site(is_x ? *row : *row - q);
    std::ostringstream out;
    out << (is_x ? 'X' : 'Z') << " on qubit " << site.qubit << " frame " << site.frame
        << ": necklace " << reference.row_string(*row) << " vs realization "
        << candidate.row_string(*row);
    report.divergence = out.str();
  }
  return report;
}

struct OrderReport {
  bool preserved = true;
  std::string violation;
};

/// Checks that every pair of instances from strings i < j that meet on the sites named by
/// one of the three relations keeps i before j in realization_order.
inline OrderReport check_order_preservation(const PearlNecklace& necklace,
                                            const ConvRealization& realization,
                                            std::int64_t frames) {
  const auto order = realization_order(necklace, realization, frames);
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> position;
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p].key()] = p;

  auto lookup = [&](std::size_t j, std::int64_t target_frame) -> std::optional<std::size_t> {
    auto it = position.find({j, target_frame});
    if (it == position.end()) return std::nullopt;
    return it->second;
  };

  OrderReport report;
  for (std::size_t j = 2; j <= necklace.size(); ++j) {
    const GateString& later = necklace.at(j);
    for (std::size_t i = 1; i < j; ++i) {
      const GateString& earlier = necklace.at(i);
      const bool st = source_target(earlier, later);
      const bool ts = target_source(earlier, later);
      const bool tt = target_target(earlier, later);
      if (!st && !ts && !tt) continue;

      for (const GateInstance& a : enumerate_instances(necklace, i, frames)) {
        // Target frame of the string-j instance that meets `a` on the related site.
        std::vector<std::pair<const char*, std::int64_t>> partners;
        if (st) partners.push_back({"source-target", a.source.frame});
        if (ts) partners.push_back({"target-source", a.target.frame - later.degree});
        if (tt) partners.push_back({"target-target", a.target.frame});
        for (const auto& [name, frame] : partners) {
          const auto pb = lookup(j, frame);
          if (!pb) continue;
          const std::size_t pa = *lookup(i, a.target.frame);
          if (pa > *pb) {
            std::ostringstream out;
            out << name << " pair reordered: string " << i << " at target frame "
                << a.target.frame << " now follows string " << j << " at target frame "
                << frame;
            report.preserved = false;
            report.violation = out.str();
            return report;
          }
        }
      }
    }
  }
  return report;
}

inline constexpr std::size_t kDefaultBruteForceCap = 8;

/// Exhaustive search for the least memory max_j max(tau_j, sigma_j) over integer placements
/// with every tau_j and sigma_j = tau_j + l_j in [0, bound], subject to the three pairwise
/// frame constraints. Empty result: nothing feasible within the bound.
inline std::optional<std::int64_t> brute_force_min_memory(
    const PearlNecklace& necklace, std::int64_t bound,
    std::size_t cap = kDefaultBruteForceCap) {
  const std::size_t n = necklace.size();
  if (n > cap) {
    throw std::invalid_argument("brute force limited to " + std::to_string(cap) +
                                " gate strings, got " + std::to_string(n));
  }
  if (bound < 0) throw std::invalid_argument("brute force bound must be non-negative");

  struct Constraint {
    std::size_t i;
    RelationKind relation;
  };
  std::vector<std::vector<Constraint>> incoming(n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      for (RelationKind r :
           {RelationKind::SourceTarget, RelationKind::TargetSource, RelationKind::TargetTarget}) {
        if (related(r, necklace.at(i), necklace.at(j))) incoming[j].push_back({i, r});
      }
    }
  }

  std::vector<std::int64_t> tau(n + 1, 0);
  std::vector<std::int64_t> sigma(n + 1, 0);
  std::optional<std::int64_t> best;

  auto search = [&](auto& self, std::size_t j, std::int64_t running) -> void {
    if (best && running >= *best) return;
    if (j > n) {
      best = running;
      return;
    }
    const GateString& gate = necklace.at(j);
    for (std::int64_t t = 0; t <= bound; ++t) {
      const std::int64_t s = gate.two_qubit() ? t + gate.degree : t;
      if (s < 0 || s > bound) continue;
      bool ok = true;
      for (const Constraint& c : incoming[j]) {
        switch (c.relation) {
          case RelationKind::SourceTarget: ok = sigma[c.i] <= t; break;
          case RelationKind::TargetSource: ok = tau[c.i] <= s; break;
          case RelationKind::TargetTarget: ok = tau[c.i] <= t; break;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      tau[j] = t;
      sigma[j] = s;
      self(self, j + 1, std::max({running, t, s}));
    }
  };
  search(search, 1, 0);
  return best;
}

/// A string whose longest-path weight is set by an inner edge and exceeds its START
/// weight, so lowering its tau by one breaks a pairwise constraint.
inline std::optional<std::size_t> binding_string(const NoncommGraph& graph,
                                                 const LongestPathResult& paths) {
  for (std::size_t j = 1; j <= graph.num_strings; ++j) {
    std::int64_t start_weight = 0;
    bool inner_binds = false;
    for (const Edge& e : graph.edges) {
      if (e.to != j) continue;
      if (e.kind == EdgeKind::start) {
        start_weight = e.weight;
      } else if (paths.w[e.from] + e.weight == paths.w[j]) {
        inner_binds = true;
      }
    }
    if (inner_binds && paths.w[j] > start_weight) return j;
  }
  return std::nullopt;
}

/// Copy of `realization` with gate j moved one frame lower (tau and sigma together).
inline ConvRealization lower_gate(ConvRealization realization, std::size_t j) {
  PlacedGate& gate = realization.gates.at(j - 1);
  gate.tau -= 1;
  if (gate.sigma) *gate.sigma -= 1;
  return realization;
}

}  // namespace pearl::oracle
