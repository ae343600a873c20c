#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "pearl/oracle.hpp"
#include "pearl/random_necklace.hpp"
#include "support.hpp"

namespace pearl::oracle {
namespace {

using Keys = std::vector<std::pair<std::size_t, std::int64_t>>;

Keys keys_of(const std::vector<GateInstance>& instances) {
  Keys out;
  for (const auto& inst : instances) out.push_back(inst.key());
  return out;
}

// H(1) after CNOT(1,2D^3) waits for frame 3; CNOT(1,3) then waits on H through its source.
PearlNecklace target_source_chain() {
  return PearlNecklace(3, {GateString::cnot(1, 2, 3), GateString::h(1), GateString::cnot(1, 3, 0)});
}

TEST(EnumerateInstances, PositiveDegree) {
  const PearlNecklace necklace(2, {GateString::cnot(1, 2, 1)});
  const auto inst = enumerate_instances(necklace, 1, 3);
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_EQ(inst[0].source.frame, 1);
  EXPECT_EQ(inst[0].target.frame, 0);
  EXPECT_EQ(inst[1].source.frame, 2);
  EXPECT_EQ(inst[1].target.frame, 1);
  EXPECT_EQ(inst[1].source.qubit, 1);
  EXPECT_EQ(inst[1].target.qubit, 2);
}

TEST(EnumerateInstances, SingleQubitAndNegativeDegree) {
  const PearlNecklace h(1, {GateString::h(1)});
  const auto hs = enumerate_instances(h, 1, 2);
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_EQ(hs[0].target.frame, 0);
  EXPECT_EQ(hs[1].target.frame, 1);

  const PearlNecklace cp(2, {GateString::cphase(1, 2, -1)});
  const auto cps = enumerate_instances(cp, 1, 2);
  ASSERT_EQ(cps.size(), 1u);
  EXPECT_EQ(cps[0].source.frame, 0);
  EXPECT_EQ(cps[0].target.frame, 1);
}

TEST(ApplyGate, HadamardTwiceIsIdentity) {
  const WindowLayout layout{1, 1};
  CliffordTableau t(1);
  const GateInstance h = make_instance(GateString::h(1), 1, 0);
  apply_gate(t, h, layout);
  apply_gate(t, h, layout);
  EXPECT_EQ(t, CliffordTableau(1));
}

TEST(ApplyGate, RejectsSitesOutsideWindow) {
  const WindowLayout layout{2, 2};
  CliffordTableau t(4);
  EXPECT_THROW(apply_gate(t, make_instance(GateString::cnot(1, 2, 2), 1, 0), layout),
               WindowError);
  EXPECT_THROW(apply_gate(t, make_instance(GateString::h(1), 1, -1), layout), WindowError);
}

TEST(CircuitTableau, EmptyIsIdentity) {
  const WindowLayout layout{3, 2};
  EXPECT_EQ(circuit_tableau({}, layout), CliffordTableau(6));
}

TEST(CircuitTableau, OrderOfDisjointGatesIrrelevant) {
  const WindowLayout layout{3, 1};
  const std::vector<GateInstance> ab{make_instance(GateString::h(1), 1, 0),
                                     make_instance(GateString::cnot(2, 3, 0), 2, 0)};
  const std::vector<GateInstance> ba{ab[1], ab[0]};
  EXPECT_EQ(circuit_tableau(ab, layout), circuit_tableau(ba, layout));
}

TEST(CircuitTableau, ChainedCnotsDoNotCommute) {
  const WindowLayout layout{3, 1};
  const std::vector<GateInstance> ab{make_instance(GateString::cnot(1, 2, 0), 1, 0),
                                     make_instance(GateString::cnot(2, 3, 0), 2, 0)};
  const std::vector<GateInstance> ba{ab[1], ab[0]};
  const auto x = circuit_tableau(ab, layout);
  EXPECT_NE(x, circuit_tableau(ba, layout));
  EXPECT_TRUE(x.is_symplectic());
}

TEST(Orders, SameInstancesBothWays) {
  const auto necklace = testing::example1();
  const auto realization = compile(necklace);
  auto a = keys_of(necklace_order(necklace, 8));
  auto b = keys_of(realization_order(necklace, realization, 8));
  EXPECT_NE(a, b);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Orders, SingleStringSameInstancesOppositeDirection) {
  const PearlNecklace necklace(2, {GateString::cnot(2, 1, -2)});
  const auto realization = compile(necklace);
  auto forward = necklace_order(necklace, 6);
  EXPECT_EQ(forward.size(), 4u);
  std::reverse(forward.begin(), forward.end());
  EXPECT_EQ(forward, realization_order(necklace, realization, 6));
}

TEST(Orders, RealizationGroupsByIteration) {
  const auto necklace = testing::source_target_pair();
  const auto realization = compile(necklace);
  EXPECT_EQ(keys_of(necklace_order(necklace, 4)),
            (Keys{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(keys_of(realization_order(necklace, realization, 4)),
            (Keys{{1, 2}, {1, 1}, {2, 2}, {1, 0}, {2, 1}, {2, 0}}));
}

TEST(Orders, RejectsMismatchedRealization) {
  auto realization = compile(testing::example1());
  realization.gates[4].sigma = 7;
  EXPECT_THROW(realization_order(testing::example1(), realization, 8), std::invalid_argument);
  EXPECT_THROW(realization_order(testing::source_target_pair(), realization, 8),
               std::invalid_argument);
}

TEST(VerifyEquivalence, ExampleOne) {
  const auto necklace = testing::example1();
  const auto report = verify_equivalence(necklace, compile(necklace), 8);
  EXPECT_TRUE(report.equal);
  EXPECT_TRUE(report.divergence.empty());
}

TEST(VerifyEquivalence, SourceTargetPairPlacements) {
  const auto necklace = testing::source_target_pair();
  ConvRealization r{3, {{GateKind::CPHASE, 2, 3, 0, 1}, {GateKind::CNOT, 1, 2, 1, 2}}, 2};
  EXPECT_EQ(r, compile(necklace));
  EXPECT_TRUE(verify_equivalence(necklace, r, 5).equal);
  // A later CNOT also satisfies sigma <= tau' and stays legal.
  ConvRealization later = r;
  later.gates[1].tau = 2;
  later.gates[1].sigma = 3;
  EXPECT_TRUE(verify_equivalence(necklace, later, 6).equal);
  EXPECT_TRUE(check_order_preservation(necklace, later, 6).preserved);
}

TEST(VerifyEquivalence, CorruptedPlacementDiverges) {
  const auto necklace = testing::source_target_pair();
  const auto broken = lower_gate(compile(necklace), 2);  // CNOT target now precedes sigma_1
  const auto report = verify_equivalence(necklace, broken, 5);
  EXPECT_FALSE(report.equal);
  EXPECT_FALSE(report.divergence.empty());
  EXPECT_FALSE(check_order_preservation(necklace, broken, 5).preserved);
}

TEST(VerifyEquivalence, WindowTooSmall) {
  const PearlNecklace necklace(2, {GateString::h(1), GateString::cnot(1, 2, 3)});
  EXPECT_THROW(verify_equivalence(necklace, compile(necklace), 3), WindowError);
  EXPECT_THROW(verify_equivalence(necklace, compile(necklace), 0), WindowError);
  EXPECT_TRUE(verify_equivalence(necklace, compile(necklace), 4).equal);
}

TEST(BruteForce, PaperCases) {
  EXPECT_EQ(brute_force_min_memory(testing::example1(), 6), 4);
  EXPECT_EQ(brute_force_min_memory(testing::source_target_pair(), 4), 2);
  EXPECT_EQ(brute_force_min_memory(PearlNecklace(1, {GateString::h(1)}), 0), 0);
}

TEST(BruteForce, InfeasibleWithinBound) {
  EXPECT_FALSE(brute_force_min_memory(testing::example1(), 3).has_value());
  EXPECT_FALSE(brute_force_min_memory(PearlNecklace(2, {GateString::cnot(1, 2, -2)}), 1));
}

TEST(BruteForce, CapExceeded) {
  std::vector<GateString> strings(9, GateString::h(1));
  EXPECT_THROW(brute_force_min_memory(PearlNecklace(1, strings), 2), std::invalid_argument);
  EXPECT_EQ(brute_force_min_memory(PearlNecklace(1, strings), 2, 9), 0);
}

TEST(OrderPreservation, SchedulerOutputPreserves) {
  const auto necklace = testing::example1();
  EXPECT_TRUE(check_order_preservation(necklace, compile(necklace), 8).preserved);
}

TEST(OrderPreservation, TargetSourceViolation) {
  const auto necklace = target_source_chain();
  const auto r = compile(necklace);
  ASSERT_EQ(r.gates[1].tau, 3);
  ASSERT_EQ(r.gates[2].tau, 3);
  const auto broken = lower_gate(r, 3);
  const auto report = check_order_preservation(necklace, broken, 8);
  EXPECT_FALSE(report.preserved);
  EXPECT_NE(report.violation.find("target-source"), std::string::npos);
  EXPECT_FALSE(verify_equivalence(necklace, broken, 8).equal);
  EXPECT_TRUE(verify_equivalence(necklace, r, 8).equal);
}

TEST(OrderPreservation, CommutingStringsAcceptAnyPlacement) {
  const PearlNecklace necklace(4, {GateString::cnot(1, 2, 1), GateString::cnot(1, 3, 0),
                                   GateString::p(4), GateString::cphase(4, 1, 2)});
  ConvRealization r = compile(necklace);
  for (const auto& g : r.gates) EXPECT_EQ(g.tau, 0);
  r.gates[1].tau = 5;
  r.gates[1].sigma = 5;
  r.gates[2].tau = 2;
  EXPECT_TRUE(check_order_preservation(necklace, r, 9).preserved);
  EXPECT_TRUE(verify_equivalence(necklace, r, 9).equal);
}

TEST(BindingString, FindsTightInnerEdge) {
  const auto graph = build_graph(testing::example1());
  const auto paths = longest_paths(graph);
  EXPECT_EQ(binding_string(graph, paths), 5u);
  const auto free_graph = build_graph(PearlNecklace(1, {GateString::h(1)}));
  EXPECT_FALSE(binding_string(free_graph, longest_paths(free_graph)).has_value());
}

TEST(OracleProperty, AgreementAndSoundness) {
  std::mt19937_64 rng(31);
  const RandomNecklaceParams params{1, 6, 2, 4, 2};
  for (int trial = 0; trial < 150; ++trial) {
    const PearlNecklace necklace = random_necklace(rng, params);
    const ConvRealization r = compile(necklace);
    const std::int64_t frames = r.memory + 4;
    ASSERT_EQ(brute_force_min_memory(necklace, r.memory + 2), r.memory)
        << render_necklace(necklace);
    ASSERT_TRUE(check_order_preservation(necklace, r, frames).preserved)
        << render_necklace(necklace);
    const auto report = verify_equivalence(necklace, r, frames);
    ASSERT_TRUE(report.equal) << render_necklace(necklace) << report.divergence;
    EXPECT_TRUE(verify_equivalence(necklace, r, frames + 1).equal);
  }
}

TEST(OracleProperty, UniformShiftStaysLegal) {
  std::mt19937_64 rng(37);
  const RandomNecklaceParams params{1, 6, 2, 4, 2};
  for (int trial = 0; trial < 60; ++trial) {
    const PearlNecklace necklace = random_necklace(rng, params);
    ConvRealization r = compile(necklace);
    for (auto& g : r.gates) {
      g.tau += 2;
      if (g.sigma) *g.sigma += 2;
    }
    EXPECT_TRUE(verify_equivalence(necklace, r, r.memory + 6).equal);
  }
}

}  // namespace
}  // namespace pearl::oracle
