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

#include "qswap/derivation.hpp"
#include "qswap/protocols.hpp"
#include "qswap/sim.hpp"

namespace qswap {
namespace {

constexpr double kTol = 1e-10;

void expect_clean(const DerivationReport& r) {
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.step_count(), 7);
  for (const auto& m : r.moves) {
    EXPECT_TRUE(m.verdict.pass) << "step " << m.step << " " << m.rule << ": " << m.verdict.detail;
    EXPECT_LT(m.verdict.max_deviation, kTol) << m.rule;
  }
  EXPECT_TRUE(r.final_check.pass);
  EXPECT_TRUE(r.final_structural_match);
}

TEST(Derivation, QubitPipeline) {
  const DerivationReport r = run_derivation(Pipeline::kQubit, Dimension(2));
  expect_clean(r);
  EXPECT_EQ(r.final_circuit(), build_teleport(Dimension(2)));
  // Qubit spelling throughout: no adjoint mnemonics appear.
  for (const auto& m : r.moves) {
    for (const auto& instr : m.after.instructions()) {
      if (auto* g = std::get_if<GateOp>(&instr)) {
        EXPECT_TRUE(g->gate != GateId::FD && g->gate != GateId::CXD && g->gate != GateId::CZD);
      }
    }
  }
}

class QuditDerivation : public ::testing::TestWithParam<int> {};

TEST_P(QuditDerivation, EveryStepCertified) {
  const Dimension dim(GetParam());
  const DerivationReport r = run_derivation(Pipeline::kQudit, dim);
  expect_clean(r);
  EXPECT_TRUE(check_channel_equiv(r.final_circuit(), build_teleport(dim)).pass);
  EXPECT_EQ(r.final_circuit(), build_teleport(dim, GateStyle::kQudit));
  EXPECT_FALSE(r.notes.empty());
}

INSTANTIATE_TEST_SUITE_P(Dims, QuditDerivation, ::testing::Values(2, 3, 5, 7));

TEST(Derivation, StepWaypoints) {
  const Dimension d3(3);
  const DerivationReport r = run_derivation(Pipeline::kQudit, d3);
  auto last_of_step = [&](int step) -> const Circuit& {
    const Circuit* c = nullptr;
    for (const auto& m : r.moves)
      if (m.step == step) c = &m.after;
    return *c;
  };
  EXPECT_EQ(last_of_step(1), derivation_start(d3, GateStyle::kQudit));
  EXPECT_EQ(last_of_step(2).size(), 5u);
  EXPECT_EQ(last_of_step(3).size(), 7u);
  EXPECT_EQ(last_of_step(4).size(), 6u);
  EXPECT_EQ(last_of_step(5), build_bbc(d3, GateStyle::kQudit));
  EXPECT_EQ(last_of_step(6).registers(), (std::vector<std::string>{"a_m", "a_t"}));
  EXPECT_EQ(r.moves.front().rule, "START");
  for (const auto& m : r.moves) {
    if (m.rule == "R-DEFER") EXPECT_EQ(m.verdict.checker, "channel");
  }
}

TEST(Derivation, EveryStepCircuitIsComplete) {
  for (int d : {2, 3, 5}) {
    const DerivationReport r = run_derivation(Pipeline::kQudit, Dimension(d));
    for (const auto& m : r.moves) EXPECT_LT(kraus_map(m.after).completeness_deviation(), kTol);
  }
}

TEST(Derivation, QubitPipelineNeedsDTwo) {
  EXPECT_THROW(run_derivation(Pipeline::kQubit, Dimension(3)), std::invalid_argument);
  EXPECT_EQ(parse_pipeline("qudit"), Pipeline::kQudit);
  EXPECT_THROW(parse_pipeline("qutrit"), std::invalid_argument);
}

TEST(Derivation, Deterministic) {
  const DerivationReport a = run_derivation(Pipeline::kQudit, Dimension(3));
  const DerivationReport b = run_derivation(Pipeline::kQudit, Dimension(3));
  ASSERT_EQ(a.moves.size(), b.moves.size());
  for (std::size_t i = 0; i < a.moves.size(); ++i) {
    EXPECT_EQ(a.moves[i].after, b.moves[i].after);
    EXPECT_EQ(a.moves[i].verdict.max_deviation, b.moves[i].verdict.max_deviation);
  }
}

}  // namespace
}  // namespace qswap
