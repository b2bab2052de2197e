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

// Replays the rewrite sequence that turns a half-swap into teleportation,
// certifying every move. Seven steps:
//
//   1. start from the half-swap routed over wires 0 and 2, ancilla idle in chi
//   2. R-EXPAND the first coupling through the ancilla
//   3. R-CONJ the last coupling into an F/CZ/F sandwich
//   4. R-DROP the leading gate that targets the chi ancilla
//   5. prepare chi as F|0>, R-ABSORB the trailing F on wire 0, R-COMMUTE
//      the wire-0 FD ahead of the ancilla->destination coupling
//   6. R-ADDMEAS on Alice's two wires
//   7. R-COMMUTE / R-DEFER until every coupling to the destination is a
//      classically controlled correction

#ifndef QSWAP_DERIVATION_HPP
#define QSWAP_DERIVATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qswap/core.hpp"
#include "qswap/rewrite.hpp"

namespace qswap {

enum class Pipeline { kQubit, kQudit };

std::string_view pipeline_name(Pipeline p);
Pipeline parse_pipeline(std::string_view name);

struct DerivationMove {
  int step = 0;
  std::string step_title;
  /// A rule name, or START / INPUT-PREP / CHECKPOINT for the non-rule moves.
  std::string rule;
  Site site;
  Circuit before;
  Circuit after;
  EquivalenceReport verdict;
};

struct DerivationReport {
  Pipeline pipeline = Pipeline::kQubit;
  int d = 2;
  std::uint64_t seed = 0;
  std::vector<DerivationMove> moves;
  /// Channel comparison of the last circuit against build_teleport(d).
  EquivalenceReport final_check;
  /// Last circuit equals build_teleport(d, pipeline style) instruction for instruction.
  bool final_structural_match = false;
  std::vector<std::string> notes;
  bool passed = false;

  int step_count() const;
  double max_deviation() const;
  const Circuit& final_circuit() const { return moves.back().after; }
};

/// Three-wire half-swap the pipelines start from: CX(0,2) then CX(2,0)
/// (CXD(2,0) in qudit style); inputs psi,chi,0 and outputs 0,chi,psi.
Circuit derivation_start(Dimension dim, GateStyle style);

/// Stops at the first failed certification; the failing move is the last one recorded.
DerivationReport run_derivation(Pipeline pipeline, Dimension dim);

}  // namespace qswap

#endif  // QSWAP_DERIVATION_HPP
