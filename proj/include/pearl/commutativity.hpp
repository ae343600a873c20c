#pragma once

#include <cstddef>
#include <vector>

#include "pearl/gate_model.hpp"

namespace pearl {

enum class RelationKind { SourceTarget, TargetSource, TargetTarget };

// The predicates read only kinds and qubit indices. Degrees never matter: frame offsets
// are absorbed by the infinite repetition of each string.

/// First string's source qubit is the second string's target, with a non-commuting kind pair:
/// first in {CNOT, CPHASE}, second in {CNOT, H}.
constexpr bool source_target(const GateString& first, const GateString& second) {
  const bool first_ok = first.kind == GateKind::CNOT || first.kind == GateKind::CPHASE;
  const bool second_ok = second.kind == GateKind::CNOT || second.kind == GateKind::H;
  return first_ok && second_ok && first.source == second.target;
}

/// First string's target is the second string's source: first in {CNOT, H},
/// second in {CNOT, CPHASE}.
constexpr bool target_source(const GateString& first, const GateString& second) {
  const bool first_ok = first.kind == GateKind::CNOT || first.kind == GateKind::H;
  const bool second_ok = second.kind == GateKind::CNOT || second.kind == GateKind::CPHASE;
  return first_ok && second_ok && first.target == second.source;
}

namespace detail {

// Ordered kind pairs whose actions on a shared target qubit do not commute.
constexpr bool target_target_kinds(GateKind first, GateKind second) {
  using K = GateKind;
  switch (first) {
    case K::CNOT: return second == K::CPHASE || second == K::H || second == K::P;
    case K::CPHASE: return second == K::CNOT || second == K::H;
    case K::H: return second == K::CNOT || second == K::CPHASE || second == K::P;
    case K::P: return second == K::CNOT || second == K::H;
  }
  return false;
}

}  // namespace detail

/// Both strings hit the same target qubit and the kind pair is one of the ten
/// non-commuting combinations (CNOT/CNOT, CPHASE/CPHASE, P/P, P/CPHASE and H/H commute).
constexpr bool target_target(const GateString& first, const GateString& second) {
  return first.target == second.target && detail::target_target_kinds(first.kind, second.kind);
}

constexpr bool related(RelationKind relation, const GateString& first, const GateString& second) {
  switch (relation) {
    case RelationKind::SourceTarget: return source_target(first, second);
    case RelationKind::TargetSource: return target_source(first, second);
    case RelationKind::TargetTarget: return target_target(first, second);
  }
  return false;
}

constexpr bool non_commuting(const GateString& first, const GateString& second) {
  return source_target(first, second) || target_source(first, second) ||
         target_target(first, second);
}

/// Earlier strings that conflict with string j, split by relation. Indices are 1-based
/// and ascending; every member is < j.
struct PredecessorSets {
  std::vector<std::size_t> st;
  std::vector<std::size_t> ts;
  std::vector<std::size_t> tt;

  friend bool operator==(const PredecessorSets&, const PredecessorSets&) = default;
};

inline PredecessorSets predecessor_sets(const PearlNecklace& necklace, std::size_t j) {
  const GateString& later = necklace.at(j);
  PredecessorSets sets;
  for (std::size_t i = 1; i < j; ++i) {
    const GateString& earlier = necklace.at(i);
    if (source_target(earlier, later)) sets.st.push_back(i);
    if (target_source(earlier, later)) sets.ts.push_back(i);
    if (target_target(earlier, later)) sets.tt.push_back(i);
  }
  return sets;
}

}  // namespace pearl
