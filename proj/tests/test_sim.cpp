// Copyright 2026 The qswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "circuit_gen.hpp"
#include "oracles.hpp"
#include "qswap/gates.hpp"
#include "qswap/sim.hpp"

namespace qswap {
namespace {

constexpr double kTol = 1e-10;

TEST(RegisterFile, SingleAssignment) {
  RegisterFile regs;
  EXPECT_FALSE(regs.is_set("m"));
  EXPECT_THROW(regs.read("m"), std::logic_error);
  regs.write("m", 0);
  EXPECT_TRUE(regs.is_set("m"));
  EXPECT_EQ(regs.read("m"), 0);
  EXPECT_THROW(regs.write("m", 1), std::logic_error);
}

TEST(ApplyGate, ControlledShiftExamples) {
  const Dimension d3(3);
  const std::array<Wire, 2> wires{0, 1};
  const StateVector out =
      apply_gate(StateVector::basis(d3, std::array<int, 2>{2, 2}), make_cx(d3), wires);
  EXPECT_LT(state_distance(out, StateVector::basis(d3, std::array<int, 2>{2, 1})), kTol);
  for (int y = 0; y < 2; ++y) {
    const StateVector in = StateVector::basis(Dimension(2), std::array<int, 2>{0, y});
    EXPECT_LT(state_distance(apply_gate(in, make_cx(Dimension(2)), wires), in), kTol);
  }
}

TEST(Measure, ProbabilitiesAndCollapse) {
  const Dimension d2(2);
  const StateVector plus(d2, 1, {std::sqrt(0.5), std::sqrt(0.5)});
  const auto probs = outcome_probabilities(plus, 0);
  EXPECT_NEAR(probs[0], 0.5, kTol);
  EXPECT_NEAR(probs[1], 0.5, kTol);
  ForcedOutcomes forced({1});
  const auto r = measure_wire(plus, 0, forced);
  EXPECT_EQ(r.outcome, 1);
  EXPECT_NEAR(r.probability, 0.5, kTol);
  EXPECT_LT(state_distance(r.post_state, StateVector::basis(d2, 1, 1)), kTol);
}

TEST(Measure, ForcedImpossibleBranchIsRefused) {
  ForcedOutcomes forced({1});
  try {
    measure_wire(StateVector::basis(Dimension(2), 1, 0), 0, forced);
    FAIL() << "expected probability underflow";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("probability underflow"), std::string::npos);
  }
}

TEST(Measure, SamplingFollowsBornRule) {
  const StateVector s(Dimension(3), 1, {std::sqrt(0.2), std::sqrt(0.3), std::sqrt(0.5)});
  SampledOutcomes source(17);
  std::array<int, 3> counts{};
  constexpr int kShots = 20000;
  for (int i = 0; i < kShots; ++i) ++counts[measure_wire(s, 0, source).outcome];
  EXPECT_NEAR(counts[0] / double(kShots), 0.2, 0.015);
  EXPECT_NEAR(counts[1] / double(kShots), 0.3, 0.015);
  EXPECT_NEAR(counts[2] / double(kShots), 0.5, 0.015);
}

TEST(RunCircuit, ClassicalControlUsesRegister) {
  const Dimension d3(3);
  Circuit c(d3, 2);
  c.gate(GateId::X, {0}).gate(GateId::X, {0}).measure(0, "m").classical_gate("m", GateId::X, 1);
  SampledOutcomes source(1);
  const RunResult r = run_circuit(c, StateVector::basis(d3, 2, 0), source);
  EXPECT_EQ(r.registers.read("m"), 2);
  ASSERT_EQ(r.record.entries.size(), 1u);
  EXPECT_EQ(r.record.entries[0].reg, "m");
  EXPECT_NEAR(r.record.total_probability(), 1.0, kTol);
  EXPECT_LT(state_distance(r.final_state, StateVector::basis(d3, std::array<int, 2>{2, 2})), kTol);
}

TEST(RunCircuit, SeededRunsRepeat) {
  Rng gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = testing::random_circuit(gen, Dimension(3), 3, {.length = 8});
    const StateVector in = haar_random_state(Dimension(3), 3, gen);
    SampledOutcomes a(99), b(99);
    const RunResult ra = run_circuit(c, in, a);
    const RunResult rb = run_circuit(c, in, b);
    EXPECT_EQ(ra.registers.values(), rb.registers.values());
    EXPECT_EQ(state_distance(ra.final_state, rb.final_state), 0.0);
  }
}

TEST(RunCircuit, RejectsInvalidCircuits) {
  Circuit c(Dimension(2), 2);
  c.classical_gate("m", GateId::X, 1);
  SampledOutcomes source(0);
  EXPECT_THROW(run_circuit(c, StateVector::basis(Dimension(2), 2, 0), source),
               std::invalid_argument);
}

TEST(CircuitUnitary, MatchesOracleOnRandomCircuits) {
  Rng gen(5);
  for (int d : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Circuit c =
          testing::random_circuit(gen, Dimension(d), 3, {.length = 7, .measurements = false});
      EXPECT_LT(oracle::distance(circuit_unitary(c), oracle::unitary(c)), kTol);
    }
  }
}

TEST(CircuitUnitary, RefusesMeasurements) {
  Circuit c(Dimension(2), 1);
  c.measure(0, "m");
  EXPECT_THROW(circuit_unitary(c), std::invalid_argument);
}

TEST(Kraus, MatchesOracleOnRandomCircuits) {
  Rng gen(6);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Circuit c = testing::random_circuit(gen, Dimension(d), 3, {.length = 7});
      const KrausMap k = kraus_map(c);
      const auto expected = oracle::kraus(c);
      ASSERT_EQ(k.size(), expected.size());
      for (const auto& [outcome, op] : expected) {
        EXPECT_LT(oracle::distance(k.at(outcome), op), kTol);
      }
      EXPECT_LT(k.completeness_deviation(), kTol);
    }
  }
}

TEST(Kraus, OutcomeDistributionMatchesSquaredNorms) {
  const Dimension d2(2);
  Circuit c(d2, 2);
  c.gate(GateId::H, {0}).gate(GateId::CX, {0, 1}).measure(1, "b").measure(0, "a");
  const KrausMap k = kraus_map(c);
  EXPECT_EQ(k.registers(), (std::vector<std::string>{"a", "b"}));
  const auto dist = outcome_distribution(k, StateVector::basis(d2, 2, 0));
  EXPECT_NEAR(dist.at({0, 0}), 0.5, kTol);
  EXPECT_NEAR(dist.at({1, 1}), 0.5, kTol);
  EXPECT_NEAR(dist.at({0, 1}), 0.0, kTol);
}

TEST(Kraus, MeasurementFreeCircuitHasOneOperator) {
  Circuit c(Dimension(3), 2);
  c.gate(GateId::F, {0}).gate(GateId::CZ, {0, 1});
  const KrausMap k = kraus_map(c);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_LT(frobenius_distance(k.at({}), circuit_unitary(c)), kTol);
}

}  // namespace
}  // namespace qswap
