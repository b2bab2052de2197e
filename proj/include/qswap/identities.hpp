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

// Named circuit identities checked by `qswap verify`.
//
//   fig3         CX(0,2) equals its four-gate expansion through wire 1
//   fig4         CX(c,t) equals FD(t) CZ(t,c) F(t)  (H CZ H for qubits)
//   eq18         CX F_2 = F_2 CZ as matrices
//   eq19         CX^+ = F_2 CZ^+ F^+_2 and CZ^+_12 = CZ^+_21
//   eq7          X^k F|0> = F|0>, and the coupling into F|0> can be removed
//   eq14         CX (1 x F)|psi>|0> = |psi> F|0> for every basis psi
//   fig9-defer   measuring a control commutes with the gate it controls
//   cz-symmetry  CZ and CZD are symmetric in their two wires

#ifndef QSWAP_IDENTITIES_HPP
#define QSWAP_IDENTITIES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qswap/core.hpp"
#include "qswap/rewrite.hpp"

namespace qswap {

struct IdentityCase {
  std::string identity;
  int d = 0;
  std::string label;
  EquivalenceReport report;
};

std::span<const std::string_view> identity_names();
bool is_identity_name(std::string_view name);

/// Every case of one identity at one dimension. Throws std::invalid_argument
/// for an unknown name.
std::vector<IdentityCase> verify_identity(std::string_view name, Dimension dim);

}  // namespace qswap

#endif  // QSWAP_IDENTITIES_HPP
