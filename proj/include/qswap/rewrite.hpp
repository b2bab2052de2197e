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

// Circuit rewrite rules and the equivalence checkers that certify them.
//
// A rule is applied at a single site (instruction index plus named wire
// roles); there is no pattern search. Every rule has one validity kind, and
// certify() runs the checker that matches it:
//
//   R-EXPAND   CX(a,c) -> four gates routed through an ancilla b       unitary
//   R-CONJ     CX(c,t) -> FD(t) CZ(t,c) F(t)                           unitary
//   R-DROP     delete a CX-family gate whose target still holds F|0>   input-conditional
//   R-ABSORB   delete a trailing 1-wire gate G, output |o> -> G^+|o>   output-extension
//   R-COMMUTE  swap adjacent instructions on disjoint wires            unitary / channel
//   R-ADDMEAS  measure wires whose declared output is a fixed state    output-extension
//   R-DEFER    controlled gate + measure of control -> measure + X^m   channel

#ifndef QSWAP_REWRITE_HPP
#define QSWAP_REWRITE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qswap/core.hpp"
#include "qswap/gates.hpp"
#include "qswap/sim.hpp"

namespace qswap {

enum class RuleId { kExpand, kConj, kDrop, kAbsorb, kCommute, kAddMeas, kDefer };
enum class ValidityKind { kUnconditionalUnitary, kInputConditional, kOutputExtension, kChannel };

std::string_view rule_name(RuleId rule);
std::optional<RuleId> parse_rule_name(std::string_view name);
ValidityKind validity_kind(RuleId rule);
std::string_view validity_name(ValidityKind kind);

/// Where a rule applies. Roles used per rule:
///   R-EXPAND  "ancilla"
///   R-DEFER   "control" (optional; CZ-family gates may be deferred on either wire)
///   R-ADDMEAS one (register name, wire) pair per measurement, in order
struct Site {
  std::size_t index = 0;
  std::vector<std::pair<std::string, Wire>> roles;

  std::optional<Wire> role(std::string_view name) const;
};

class RewriteError : public std::runtime_error {
 public:
  enum class Kind { kMatch, kSideCondition };
  RewriteError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Applies `rule` at `site`. Emitted gates are spelled in `style`.
Circuit apply_rule(const Circuit& c, RuleId rule, const Site& site,
                   GateStyle style = GateStyle::kQudit);

/// Inverse of R-ABSORB: appends g on w and maps the declared output |o> to g|o>.
Circuit emit_output_gate(const Circuit& c, GateId g, Wire w);

struct EquivalenceReport {
  bool pass = false;
  double max_deviation = 0.0;
  std::string checker;
  std::string detail;
  bool structural_failure = false;
};

/// Compares circuit unitaries (Frobenius norm of the difference). With
/// up_to_global_phase, c2 is first multiplied by the phase that aligns it
/// with c1 at c1's largest-magnitude entry.
EquivalenceReport check_unitary_equiv(const Circuit& c1, const Circuit& c2,
                                      bool up_to_global_phase = false);

/// Per-outcome Kraus operator comparison. Register sets must coincide.
EquivalenceReport check_channel_equiv(const Circuit& c1, const Circuit& c2);

/// Fixed single-wire states on a subset of wires; PsiLabel entries are free.
using InputConstraint = std::vector<std::pair<Wire, StateLabel>>;

/// Compares output vectors over every basis state of the free wires
/// tensored with the constrained states.
EquivalenceReport check_equiv_on_inputs(const Circuit& c1, const Circuit& c2,
                                        const InputConstraint& constraint);

/// Like check_equiv_on_inputs, but each circuit is fed its own declared
/// fixed inputs. The free (psi or undeclared) wires must coincide.
EquivalenceReport check_equiv_on_declared_inputs(const Circuit& c1, const Circuit& c2);

/// For a measurement-free circuit with every input and output declared:
/// each basis value k fed to the psi input wires comes out as the declared
/// fixed outputs with k on the psi output wires.
EquivalenceReport check_declared_io(const Circuit& c);

/// Runs the checker matching the rule's validity kind on (before, after).
EquivalenceReport certify(const Circuit& before, const Circuit& after, RuleId rule,
                          const Site& site);

}  // namespace qswap

#endif  // QSWAP_REWRITE_HPP
