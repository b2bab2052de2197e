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

#include "qswap/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qswap/gates.hpp"
#include "qswap/kernels.hpp"

namespace qswap {

void RegisterFile::write(const std::string& name, int value) {
  if (!values_.emplace(name, value).second) {
    throw std::logic_error("register '" + name + "' already written");
  }
}

int RegisterFile::read(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::logic_error("register '" + name + "' is unset");
  return it->second;
}

std::optional<int> RegisterFile::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

int SampledOutcomes::choose(std::span<const double> probabilities) {
  const double u = rng_.uniform();
  double cumulative = 0.0;
  int last_possible = -1;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    last_possible = static_cast<int>(i);
    cumulative += probabilities[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  // Rounding left the cumulative sum just under 1.
  if (last_possible < 0) throw std::runtime_error("no outcome has positive probability");
  return last_possible;
}

int ForcedOutcomes::choose(std::span<const double> probabilities) {
  if (next_ >= outcomes_.size()) throw std::logic_error("forced outcome sequence exhausted");
  const int outcome = outcomes_[next_++];
  if (outcome < 0 || static_cast<std::size_t>(outcome) >= probabilities.size()) {
    throw std::out_of_range("forced outcome outside [0, d)");
  }
  return outcome;
}

namespace {

std::size_t digit_at(std::size_t index, Wire wire, Dimension dim, std::size_t n_wires) {
  for (std::size_t w = n_wires - 1; w > wire; --w) index /= dim.levels();
  return index % dim.levels();
}

void require_wire(Wire wire, std::size_t n_wires) {
  if (wire >= n_wires) {
    throw std::out_of_range("wire " + std::to_string(wire) + " out of range");
  }
}

}  // namespace

std::vector<double> outcome_probabilities(const StateVector& state, Wire wire) {
  require_wire(wire, state.n_wires());
  std::vector<double> probs(state.dim().levels(), 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    probs[digit_at(i, wire, state.dim(), state.n_wires())] += std::norm(state[i]);
  }
  return probs;
}

MeasurementResult measure_wire(const StateVector& state, Wire wire, OutcomeSource& source) {
  const auto probs = outcome_probabilities(state, wire);
  const int outcome = source.choose(probs);
  const double p = probs[static_cast<std::size_t>(outcome)];
  if (p < kMinBranchProbability) {
    throw std::runtime_error("probability underflow: outcome " + std::to_string(outcome) +
                             " on wire " + std::to_string(wire) + " has probability " +
                             std::to_string(p));
  }
  const double scale = 1.0 / std::sqrt(p);
  std::vector<Complex> amps(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (digit_at(i, wire, state.dim(), state.n_wires()) == static_cast<std::size_t>(outcome)) {
      amps[i] = state[i] * scale;
    }
  }
  return {outcome, StateVector(state.dim(), state.n_wires(), std::move(amps)), p};
}

StateVector apply_gate(const StateVector& state, const Matrix& gate, std::span<const Wire> wires) {
  for (Wire w : wires) require_wire(w, state.n_wires());
  StateVector out = state;
  const auto layout = kernels::make_layout(wires, state.dim().levels(), state.n_wires());
  kernels::apply_rows(out.amplitudes(), 1, gate.data(), layout);
  return out;
}

StateVector apply_instruction(const StateVector& state, const Instruction& instr,
                              const RegisterFile& registers) {
  if (auto* g = std::get_if<GateOp>(&instr)) {
    return apply_gate(state, gate_matrix(g->gate, state.dim()), g->wires);
  }
  if (auto* cg = std::get_if<ClassicalGateOp>(&instr)) {
    const int value = registers.read(cg->reg);
    const Wire wire = cg->wire;
    return apply_gate(state, gate_power(cg->base, value, state.dim()),
                      std::span<const Wire>(&wire, 1));
  }
  throw std::invalid_argument("apply_instruction does not handle measurements");
}

void left_multiply(Matrix& m, const Matrix& gate, std::span<const Wire> wires, Dimension dim,
                   std::size_t n_wires) {
  const auto layout = kernels::make_layout(wires, dim.levels(), n_wires);
  kernels::apply_rows(m.data(), m.size(), gate.data(), layout);
}

double OutcomeRecord::total_probability() const {
  double p = 1.0;
  for (const auto& e : entries) p *= e.probability;
  return p;
}

RunResult run_circuit(const Circuit& c, const StateVector& input, OutcomeSource& source) {
  if (input.dim() != c.dim() || input.n_wires() != c.n_wires()) {
    throw std::invalid_argument("input state shape does not match circuit");
  }
  validate(c);
  RunResult result{input, {}, {}};
  for (const auto& instr : c.instructions()) {
    if (auto* m = std::get_if<MeasureOp>(&instr)) {
      auto measured = measure_wire(result.final_state, m->wire, source);
      result.registers.write(m->reg, measured.outcome);
      result.record.entries.push_back({m->reg, measured.outcome, measured.probability});
      result.final_state = std::move(measured.post_state);
    } else {
      result.final_state = apply_instruction(result.final_state, instr, result.registers);
    }
  }
  return result;
}

Matrix circuit_unitary(const Circuit& c) {
  if (c.has_measurements()) {
    throw std::invalid_argument("circuit_unitary needs a measurement-free circuit");
  }
  Matrix u = Matrix::identity(c.total_dimension());
  for (const auto& instr : c.instructions()) {
    const auto& g = std::get<GateOp>(instr);
    left_multiply(u, gate_matrix(g.gate, c.dim()), g.wires, c.dim(), c.n_wires());
  }
  return u;
}

KrausMap::KrausMap(std::vector<std::string> registers, std::map<Outcome, Matrix> operators)
    : registers_(std::move(registers)), operators_(std::move(operators)) {
  if (!std::is_sorted(registers_.begin(), registers_.end())) {
    throw std::invalid_argument("Kraus map registers must be sorted");
  }
  for (const auto& [outcome, op] : operators_) {
    if (outcome.size() != registers_.size()) {
      throw std::invalid_argument("Kraus outcome length does not match register count");
    }
  }
}

double KrausMap::completeness_deviation() const {
  if (operators_.empty()) return 0.0;
  const std::size_t n = operators_.begin()->second.size();
  Matrix sum(n);
  for (const auto& [outcome, k] : operators_) sum = sum + k.adjoint() * k;
  return frobenius_distance(sum, Matrix::identity(n));
}

KrausMap kraus_map(const Circuit& c) {
  validate(c);
  const Dimension dim = c.dim();
  const std::size_t n = c.n_wires();
  const std::size_t total = c.total_dimension();

  struct Branch {
    RegisterFile registers;
    Matrix op;
  };
  std::vector<Branch> branches;
  branches.push_back({{}, Matrix::identity(total)});

  for (const auto& instr : c.instructions()) {
    if (auto* g = std::get_if<GateOp>(&instr)) {
      const Matrix gate = gate_matrix(g->gate, dim);
      for (auto& b : branches) left_multiply(b.op, gate, g->wires, dim, n);
    } else if (auto* cg = std::get_if<ClassicalGateOp>(&instr)) {
      const Wire wire = cg->wire;
      for (auto& b : branches) {
        left_multiply(b.op, gate_power(cg->base, b.registers.read(cg->reg), dim),
                      std::span<const Wire>(&wire, 1), dim, n);
      }
    } else {
      const auto& m = std::get<MeasureOp>(instr);
      std::vector<Branch> next;
      next.reserve(branches.size() * dim.levels());
      for (const auto& b : branches) {
        for (int value = 0; value < dim.value(); ++value) {
          Branch child = b;
          child.registers.write(m.reg, value);
          // Projector onto digit `value`: zero every other row.
          for (std::size_t row = 0; row < total; ++row) {
            if (digit_at(row, m.wire, dim, n) != static_cast<std::size_t>(value)) {
              for (std::size_t col = 0; col < total; ++col) child.op(row, col) = 0.0;
            }
          }
          next.push_back(std::move(child));
        }
      }
      branches = std::move(next);
    }
  }

  std::vector<std::string> names = c.registers();
  std::sort(names.begin(), names.end());
  std::map<KrausMap::Outcome, Matrix> ops;
  for (auto& b : branches) {
    KrausMap::Outcome key;
    key.reserve(names.size());
    for (const auto& name : names) key.push_back(b.registers.read(name));
    ops.emplace(std::move(key), std::move(b.op));
  }
  return KrausMap(std::move(names), std::move(ops));
}

std::map<KrausMap::Outcome, double> outcome_distribution(const KrausMap& kraus,
                                                         const StateVector& input) {
  std::map<KrausMap::Outcome, double> dist;
  for (const auto& [outcome, k] : kraus.operators()) {
    double p = 0.0;
    for (std::size_t r = 0; r < k.size(); ++r) {
      Complex amp{};
      for (std::size_t col = 0; col < k.size(); ++col) amp += k(r, col) * input[col];
      p += std::norm(amp);
    }
    dist[outcome] = p;
  }
  return dist;
}

}  // namespace qswap
