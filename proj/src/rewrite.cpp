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

#include "qswap/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace qswap {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::kExpand: return "R-EXPAND";
    case RuleId::kConj: return "R-CONJ";
    case RuleId::kDrop: return "R-DROP";
    case RuleId::kAbsorb: return "R-ABSORB";
    case RuleId::kCommute: return "R-COMMUTE";
    case RuleId::kAddMeas: return "R-ADDMEAS";
    case RuleId::kDefer: return "R-DEFER";
  }
  throw std::logic_error("unreachable rule id");
}

std::optional<RuleId> parse_rule_name(std::string_view name) {
  for (RuleId r : {RuleId::kExpand, RuleId::kConj, RuleId::kDrop, RuleId::kAbsorb,
                   RuleId::kCommute, RuleId::kAddMeas, RuleId::kDefer}) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

ValidityKind validity_kind(RuleId rule) {
  switch (rule) {
    case RuleId::kExpand:
    case RuleId::kConj:
    case RuleId::kCommute:
      return ValidityKind::kUnconditionalUnitary;
    case RuleId::kDrop:
      return ValidityKind::kInputConditional;
    case RuleId::kAbsorb:
    case RuleId::kAddMeas:
      return ValidityKind::kOutputExtension;
    case RuleId::kDefer:
      return ValidityKind::kChannel;
  }
  throw std::logic_error("unreachable rule id");
}

std::string_view validity_name(ValidityKind kind) {
  switch (kind) {
    case ValidityKind::kUnconditionalUnitary: return "unconditional-unitary";
    case ValidityKind::kInputConditional: return "input-conditional";
    case ValidityKind::kOutputExtension: return "output-extension";
    case ValidityKind::kChannel: return "channel";
  }
  throw std::logic_error("unreachable validity kind");
}

std::optional<Wire> Site::role(std::string_view name) const {
  for (const auto& [role_name, wire] : roles) {
    if (role_name == name) return wire;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void match_failure(RuleId rule, const std::string& why) {
  throw RewriteError(RewriteError::Kind::kMatch, std::string(rule_name(rule)) + ": " + why);
}

[[noreturn]] void side_condition_failure(RuleId rule, const std::string& why) {
  throw RewriteError(RewriteError::Kind::kSideCondition,
                     std::string(rule_name(rule)) + ": " + why);
}

const GateOp& gate_at(const Circuit& c, std::size_t index, RuleId rule) {
  if (index >= c.size()) match_failure(rule, "site index " + std::to_string(index) + " past end");
  const auto* g = std::get_if<GateOp>(&c[index]);
  if (!g) match_failure(rule, "instruction " + std::to_string(index) + " is not a gate");
  return *g;
}

bool touches(const Instruction& instr, Wire w) {
  const auto wires = instruction_wires(instr);
  return std::find(wires.begin(), wires.end(), w) != wires.end();
}

bool is_x_family(GateId g) { return g == GateId::CX || g == GateId::CXD; }
bool is_z_family(GateId g) { return g == GateId::CZ || g == GateId::CZD; }

Instruction styled_gate(GateId g, std::vector<Wire> wires, GateStyle style) {
  return GateOp{styled(g, style), std::move(wires)};
}

Circuit expand(const Circuit& c, const Site& site, GateStyle style) {
  const auto& g = gate_at(c, site.index, RuleId::kExpand);
  if (!is_x_family(g.gate)) match_failure(RuleId::kExpand, "expects CX or CXD");
  const auto ancilla = site.role("ancilla");
  if (!ancilla) side_condition_failure(RuleId::kExpand, "missing 'ancilla' role");
  const Wire a = g.wires[0];
  const Wire t = g.wires[1];
  const Wire b = *ancilla;
  if (b >= c.n_wires() || b == a || b == t) {
    side_condition_failure(RuleId::kExpand, "ancilla must be a third wire of the circuit");
  }
  // CX:  y -> y+x, z -> z+y+x, y -> y, z -> z+x.
  // CXD: y -> y+x, z -> z-y-x, y -> y, z -> z-x.
  const GateId second = g.gate == GateId::CX ? GateId::CX : GateId::CXD;
  const GateId fourth = g.gate == GateId::CX ? GateId::CXD : GateId::CX;
  Circuit out = c;
  out.replace(site.index, {styled_gate(GateId::CX, {a, b}, style),
                           styled_gate(second, {b, t}, style),
                           styled_gate(GateId::CXD, {a, b}, style),
                           styled_gate(fourth, {b, t}, style)});
  return out;
}

Circuit conjugate(const Circuit& c, const Site& site, GateStyle style) {
  const auto& g = gate_at(c, site.index, RuleId::kConj);
  if (!is_x_family(g.gate)) match_failure(RuleId::kConj, "expects CX or CXD");
  const Wire control = g.wires[0];
  const Wire target = g.wires[1];
  // CX = F_t CZ F_t^dagger, so in time order FD(t), CZ, F(t). The phase gate
  // is symmetric, so it is written with the old target first.
  const GateId phase = g.gate == GateId::CX ? GateId::CZ : GateId::CZD;
  Circuit out = c;
  out.replace(site.index, {styled_gate(GateId::FD, {target}, style),
                           styled_gate(phase, {target, control}, style),
                           styled_gate(GateId::F, {target}, style)});
  return out;
}

Circuit drop(const Circuit& c, const Site& site) {
  const auto& g = gate_at(c, site.index, RuleId::kDrop);
  if (!is_x_family(g.gate)) match_failure(RuleId::kDrop, "expects a CX-family gate");
  const Wire target = g.wires[1];
  const auto& declared = c.input(target);
  if (!declared || !std::holds_alternative<ChiLabel>(*declared)) {
    side_condition_failure(RuleId::kDrop, "target wire " + std::to_string(target) +
                                              " is not declared to start in chi");
  }
  for (std::size_t i = 0; i < site.index; ++i) {
    if (touches(c[i], target)) {
      side_condition_failure(RuleId::kDrop, "target wire is acted on before the site");
    }
  }
  Circuit out = c;
  out.erase(site.index);
  return out;
}

std::optional<StateLabel> apply_to_label(const Matrix& gate, const StateLabel& label,
                                         Dimension dim) {
  if (!is_fixed(label)) return std::nullopt;
  const Wire w = 0;
  return match_label(apply_gate(label_state(label, dim), gate, std::span<const Wire>(&w, 1)));
}

Circuit absorb(const Circuit& c, const Site& site) {
  const auto& g = gate_at(c, site.index, RuleId::kAbsorb);
  if (gate_arity(g.gate) != 1) match_failure(RuleId::kAbsorb, "expects a single-wire gate");
  const Wire w = g.wires[0];
  for (std::size_t i = site.index + 1; i < c.size(); ++i) {
    if (touches(c[i], w)) side_condition_failure(RuleId::kAbsorb, "gate is not trailing on its wire");
  }
  const auto& declared = c.output(w);
  if (!declared || !is_fixed(*declared)) {
    side_condition_failure(RuleId::kAbsorb, "wire " + std::to_string(w) +
                                                " has no declared fixed output");
  }
  const auto relabeled =
      apply_to_label(gate_matrix(g.gate, c.dim()).adjoint(), *declared, c.dim());
  if (!relabeled) {
    side_condition_failure(RuleId::kAbsorb, "G^dagger applied to the declared output is not a "
                                            "basis state or chi");
  }
  Circuit out = c;
  out.erase(site.index);
  out.set_output(w, *relabeled);
  return out;
}

bool reads(const Instruction& instr, const std::string& reg) {
  const auto* cg = std::get_if<ClassicalGateOp>(&instr);
  return cg && cg->reg == reg;
}

bool register_conflict(const Instruction& a, const Instruction& b) {
  auto check = [](const Instruction& writer, const Instruction& reader) {
    const auto* m = std::get_if<MeasureOp>(&writer);
    return m && reads(reader, m->reg);
  };
  return check(a, b) || check(b, a);
}

Circuit commute(const Circuit& c, const Site& site) {
  if (site.index + 1 >= c.size()) {
    match_failure(RuleId::kCommute, "needs instructions at " + std::to_string(site.index) +
                                        " and " + std::to_string(site.index + 1));
  }
  const auto& first = c[site.index];
  const auto& second = c[site.index + 1];
  for (Wire w : instruction_wires(first)) {
    if (touches(second, w)) {
      side_condition_failure(RuleId::kCommute, "instructions share wire " + std::to_string(w));
    }
  }
  if (register_conflict(first, second)) {
    side_condition_failure(RuleId::kCommute, "instructions share a classical register");
  }
  Circuit out = c;
  Instruction moved = first;
  out.erase(site.index);
  out.insert(site.index + 1, std::move(moved));
  return out;
}

Circuit add_measurements(const Circuit& c, const Site& site) {
  if (site.roles.empty()) side_condition_failure(RuleId::kAddMeas, "no wires to measure");
  Circuit out = c;
  const auto existing = c.registers();
  std::set<std::string> used(existing.begin(), existing.end());
  for (const auto& [reg, wire] : site.roles) {
    if (wire >= c.n_wires()) side_condition_failure(RuleId::kAddMeas, "wire out of range");
    const auto& declared = c.output(wire);
    if (!declared || !is_fixed(*declared)) {
      side_condition_failure(RuleId::kAddMeas, "wire " + std::to_string(wire) +
                                                   " has no declared fixed output");
    }
    if (!used.insert(reg).second) {
      side_condition_failure(RuleId::kAddMeas, "register '" + reg + "' already in use");
    }
    out.measure(wire, reg);
    out.set_output(wire, std::nullopt);
  }
  return out;
}

Circuit defer(const Circuit& c, const Site& site) {
  const auto& g = gate_at(c, site.index, RuleId::kDefer);
  if (gate_arity(g.gate) != 2) match_failure(RuleId::kDefer, "expects a controlled gate");
  if (site.index + 1 >= c.size()) match_failure(RuleId::kDefer, "no measurement after the gate");
  const auto* m = std::get_if<MeasureOp>(&c[site.index + 1]);
  if (!m) match_failure(RuleId::kDefer, "gate is not immediately followed by a measurement");

  const Wire control = site.role("control").value_or(g.wires[0]);
  if (control != m->wire) {
    side_condition_failure(RuleId::kDefer, "measured wire is not the gate's control");
  }
  Wire target = 0;
  if (control == g.wires[0]) {
    target = g.wires[1];
  } else if (control == g.wires[1] && is_z_family(g.gate)) {
    target = g.wires[0];  // controlled phase is symmetric
  } else {
    side_condition_failure(RuleId::kDefer, "wire " + std::to_string(control) +
                                               " cannot act as control of this gate");
  }
  GateId base = GateId::X;
  switch (g.gate) {
    case GateId::CX: base = GateId::X; break;
    case GateId::CXD: base = GateId::XD; break;
    case GateId::CZ: base = GateId::Z; break;
    case GateId::CZD: base = GateId::ZD; break;
    default: match_failure(RuleId::kDefer, "unsupported controlled gate");
  }
  Circuit out = c;
  const MeasureOp measure = *m;
  out.erase(site.index + 1);
  out.replace(site.index, {measure, ClassicalGateOp{measure.reg, base, target}});
  return out;
}

}  // namespace

Circuit apply_rule(const Circuit& c, RuleId rule, const Site& site, GateStyle style) {
  require_style(style, c.dim());
  switch (rule) {
    case RuleId::kExpand: return expand(c, site, style);
    case RuleId::kConj: return conjugate(c, site, style);
    case RuleId::kDrop: return drop(c, site);
    case RuleId::kAbsorb: return absorb(c, site);
    case RuleId::kCommute: return commute(c, site);
    case RuleId::kAddMeas: return add_measurements(c, site);
    case RuleId::kDefer: return defer(c, site);
  }
  throw std::logic_error("unreachable rule id");
}

Circuit emit_output_gate(const Circuit& c, GateId g, Wire w) {
  if (gate_arity(g) != 1) throw std::invalid_argument("emit_output_gate needs a 1-wire gate");
  const auto& declared = c.output(w);
  if (!declared || !is_fixed(*declared)) {
    throw std::invalid_argument("wire has no declared fixed output");
  }
  const auto relabeled = apply_to_label(gate_matrix(g, c.dim()), *declared, c.dim());
  if (!relabeled) throw std::invalid_argument("G applied to the output is not a named state");
  Circuit out = c;
  out.gate(g, {w});
  out.set_output(w, *relabeled);
  return out;
}

// ---------------------------------------------------------------------------
// Checkers

namespace {

std::string format_deviation(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

EquivalenceReport structural(const std::string& checker, const std::string& why) {
  EquivalenceReport r;
  r.checker = checker;
  r.pass = false;
  r.structural_failure = true;
  r.max_deviation = std::numeric_limits<double>::infinity();
  r.detail = why;
  return r;
}

EquivalenceReport numeric(const std::string& checker, double deviation, std::string detail) {
  EquivalenceReport r;
  r.checker = checker;
  r.max_deviation = deviation;
  r.pass = deviation < tolerance();
  r.detail = std::move(detail);
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += "max deviation " + format_deviation(deviation);
  return r;
}

bool same_shape(const Circuit& a, const Circuit& b) {
  return a.dim() == b.dim() && a.n_wires() == b.n_wires();
}

StateVector run_unitary(const Circuit& c, const StateVector& input) {
  RegisterFile none;
  StateVector s = input;
  for (const auto& instr : c.instructions()) s = apply_instruction(s, instr, none);
  return s;
}

/// Per-wire fixed states; nullopt entries are free.
using WireStates = std::vector<std::optional<StateVector>>;

WireStates states_from_constraint(const Circuit& c, const InputConstraint& constraint) {
  WireStates states(c.n_wires());
  std::set<Wire> seen;
  for (const auto& [wire, label] : constraint) {
    if (wire >= c.n_wires()) throw std::out_of_range("constraint wire out of range");
    if (!seen.insert(wire).second) {
      throw std::invalid_argument("constraint names wire " + std::to_string(wire) + " twice");
    }
    if (is_fixed(label)) states[wire] = label_state(label, c.dim());
  }
  return states;
}

WireStates states_from_declared(const Circuit& c) {
  WireStates states(c.n_wires());
  for (Wire w = 0; w < c.n_wires(); ++w) {
    if (c.input(w) && is_fixed(*c.input(w))) states[w] = label_state(*c.input(w), c.dim());
  }
  return states;
}

/// Product state: fixed wires from `states`, free wires from `free_digits` in order.
StateVector product_input(Dimension dim, const WireStates& states,
                          const std::vector<int>& free_digits) {
  std::optional<StateVector> acc;
  std::size_t next_free = 0;
  for (const auto& s : states) {
    StateVector piece = s ? *s
                          : StateVector::basis(dim, std::span<const int>(&free_digits[next_free++], 1));
    acc = acc ? tensor(*acc, piece) : piece;
  }
  return *acc;
}

EquivalenceReport compare_on_inputs(const std::string& checker, const Circuit& c1,
                                    const WireStates& s1, const Circuit& c2,
                                    const WireStates& s2) {
  if (!same_shape(c1, c2)) return structural(checker, "circuit shapes differ");
  if (c1.has_measurements() || c2.has_measurements()) {
    return structural(checker, "input-conditional comparison needs measurement-free circuits");
  }
  std::size_t n_free = 0;
  for (Wire w = 0; w < c1.n_wires(); ++w) {
    if (s1[w].has_value() != s2[w].has_value()) {
      return structural(checker, "wire " + std::to_string(w) +
                                     " is constrained in one circuit but free in the other");
    }
    if (!s1[w]) ++n_free;
  }
  const Dimension dim = c1.dim();
  const std::size_t count = n_free == 0 ? 1 : total_dimension(dim, n_free);
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto digits = n_free == 0 ? std::vector<int>{} : decompose_index(k, dim, n_free);
    const auto out1 = run_unitary(c1, product_input(dim, s1, digits));
    const auto out2 = run_unitary(c2, product_input(dim, s2, digits));
    worst = std::max(worst, state_distance(out1, out2));
  }
  return numeric(checker, worst,
                 std::to_string(count) + " basis input(s) over " + std::to_string(n_free) +
                     " free wire(s)");
}

}  // namespace

EquivalenceReport check_unitary_equiv(const Circuit& c1, const Circuit& c2,
                                      bool up_to_global_phase) {
  const std::string checker = "unitary";
  if (!same_shape(c1, c2)) return structural(checker, "circuit shapes differ");
  if (c1.has_measurements() || c2.has_measurements()) {
    return structural(checker, "unitary comparison needs measurement-free circuits");
  }
  const Matrix u1 = circuit_unitary(c1);
  Matrix u2 = circuit_unitary(c2);
  std::string detail = "exact";
  if (up_to_global_phase) {
    detail = "up to global phase";
    std::size_t best = 0;
    auto d1 = u1.data();
    for (std::size_t i = 1; i < d1.size(); ++i) {
      if (std::abs(d1[i]) > std::abs(d1[best])) best = i;
    }
    const Complex other = u2.data()[best];
    if (std::abs(other) > 0.0) {
      const Complex phase = (d1[best] / std::abs(d1[best])) / (other / std::abs(other));
      u2 = u2 * phase;
    }
  }
  return numeric(checker, frobenius_distance(u1, u2), detail);
}

EquivalenceReport check_channel_equiv(const Circuit& c1, const Circuit& c2) {
  const std::string checker = "channel";
  if (!same_shape(c1, c2)) return structural(checker, "circuit shapes differ");
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(c1.registers()) != sorted(c2.registers())) {
    return structural(checker, "register sets differ");
  }
  const KrausMap k1 = kraus_map(c1);
  const KrausMap k2 = kraus_map(c2);
  if (k1.size() != k2.size()) return structural(checker, "outcome sets differ");
  double worst = 0.0;
  for (const auto& [outcome, op] : k1.operators()) {
    auto it = k2.operators().find(outcome);
    if (it == k2.operators().end()) return structural(checker, "outcome sets differ");
    worst = std::max(worst, frobenius_distance(op, it->second));
  }
  return numeric(checker, worst, std::to_string(k1.size()) + " outcome string(s)");
}

EquivalenceReport check_equiv_on_inputs(const Circuit& c1, const Circuit& c2,
                                        const InputConstraint& constraint) {
  const auto states = states_from_constraint(c1, constraint);
  return compare_on_inputs("inputs", c1, states, c2, states);
}

EquivalenceReport check_equiv_on_declared_inputs(const Circuit& c1, const Circuit& c2) {
  if (!same_shape(c1, c2)) return structural("declared-inputs", "circuit shapes differ");
  return compare_on_inputs("declared-inputs", c1, states_from_declared(c1), c2,
                           states_from_declared(c2));
}

EquivalenceReport check_declared_io(const Circuit& c) {
  const std::string checker = "declared-io";
  if (c.has_measurements()) return structural(checker, "needs a measurement-free circuit");
  std::vector<Wire> psi_in;
  std::vector<Wire> psi_out;
  for (Wire w = 0; w < c.n_wires(); ++w) {
    if (!c.input(w) || !c.output(w)) {
      return structural(checker, "wire " + std::to_string(w) + " lacks a declared input/output");
    }
    if (!is_fixed(*c.input(w))) psi_in.push_back(w);
    if (!is_fixed(*c.output(w))) psi_out.push_back(w);
  }
  if (psi_in.size() != psi_out.size()) {
    return structural(checker, "psi appears on a different number of inputs and outputs");
  }
  const Dimension dim = c.dim();
  const auto in_states = states_from_declared(c);
  const std::size_t count = psi_in.empty() ? 1 : total_dimension(dim, psi_in.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto digits = psi_in.empty() ? std::vector<int>{} : decompose_index(k, dim, psi_in.size());
    const auto actual = run_unitary(c, product_input(dim, in_states, digits));

    WireStates out_states(c.n_wires());
    for (Wire w = 0; w < c.n_wires(); ++w) {
      if (is_fixed(*c.output(w))) out_states[w] = label_state(*c.output(w), dim);
    }
    // product_input fills free wires in wire order, matching psi_out order.
    const auto expected = product_input(dim, out_states, digits);
    worst = std::max(worst, state_distance(actual, expected));
  }
  return numeric(checker, worst, std::to_string(count) + " psi basis value(s)");
}

EquivalenceReport certify(const Circuit& before, const Circuit& after, RuleId rule,
                          const Site& site) {
  switch (rule) {
    case RuleId::kExpand:
    case RuleId::kConj:
      return check_unitary_equiv(before, after);
    case RuleId::kCommute:
      if (before.has_measurements() || after.has_measurements()) {
        return check_channel_equiv(before, after);
      }
      return check_unitary_equiv(before, after);
    case RuleId::kDrop: {
      const auto& g = std::get<GateOp>(before[site.index]);
      return check_equiv_on_inputs(before, after, {{g.wires[1], ChiLabel{}}});
    }
    case RuleId::kAbsorb: {
      const auto& g = std::get<GateOp>(before[site.index]);
      Circuit extended = after;
      extended.gate(g.gate, g.wires);
      auto report = check_unitary_equiv(extended, before);
      report.checker = "unitary(after + absorbed gate)";
      return report;
    }
    case RuleId::kAddMeas: {
      // The measured wires must really leave in their declared fixed states,
      // otherwise measuring them would disturb the rest.
      auto purity = check_declared_io(before);
      Circuit extended = before;
      for (const auto& [reg, wire] : site.roles) extended.measure(wire, reg);
      auto report = check_channel_equiv(extended, after);
      report.checker = "channel(before + measurements) & declared-io(before)";
      report.pass = report.pass && purity.pass;
      report.structural_failure = report.structural_failure || purity.structural_failure;
      report.max_deviation = std::max(report.max_deviation, purity.max_deviation);
      report.detail += " | declared outputs: " + purity.detail;
      return report;
    }
    case RuleId::kDefer:
      return check_channel_equiv(before, after);
  }
  throw std::logic_error("unreachable rule id");
}

}  // namespace qswap
