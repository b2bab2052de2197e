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

#ifndef QSWAP_SIM_HPP
#define QSWAP_SIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qswap/core.hpp"

namespace qswap {

/// Single-assignment classical registers. Unset is distinct from zero.
class RegisterFile {
 public:
  void write(const std::string& name, int value);
  int read(const std::string& name) const;
  std::optional<int> get(const std::string& name) const;
  bool is_set(const std::string& name) const { return values_.contains(name); }
  const std::map<std::string, int>& values() const { return values_; }

 private:
  std::map<std::string, int> values_;
};

/// Picks measurement outcomes. Implementations decide between sampling and
/// forcing a branch.
class OutcomeSource {
 public:
  virtual ~OutcomeSource() = default;
  virtual int choose(std::span<const double> probabilities) = 0;
};

/// Born-rule sampling from a seeded Rng.
class SampledOutcomes final : public OutcomeSource {
 public:
  explicit SampledOutcomes(std::uint64_t seed) : rng_(seed) {}
  int choose(std::span<const double> probabilities) override;
  std::uint64_t seed() const { return rng_.seed(); }

 private:
  Rng rng_;
};

/// Returns a fixed outcome sequence, one entry per measurement.
class ForcedOutcomes final : public OutcomeSource {
 public:
  explicit ForcedOutcomes(std::vector<int> outcomes) : outcomes_(std::move(outcomes)) {}
  int choose(std::span<const double> probabilities) override;

 private:
  std::vector<int> outcomes_;
  std::size_t next_ = 0;
};

/// Branches whose probability falls below this are refused when forced.
inline constexpr double kMinBranchProbability = 1e-20;

struct MeasurementResult {
  int outcome;
  StateVector post_state;
  double probability;
};

std::vector<double> outcome_probabilities(const StateVector& state, Wire wire);
MeasurementResult measure_wire(const StateVector& state, Wire wire, OutcomeSource& source);

StateVector apply_gate(const StateVector& state, const Matrix& gate, std::span<const Wire> wires);
/// Gate and ClassicalGateOp only; measurements go through measure_wire.
StateVector apply_instruction(const StateVector& state, const Instruction& instr,
                              const RegisterFile& registers);

/// m <- embed(gate, wires) * m, without forming the embedded matrix.
void left_multiply(Matrix& m, const Matrix& gate, std::span<const Wire> wires, Dimension dim,
                   std::size_t n_wires);

struct OutcomeEntry {
  std::string reg;
  int value;
  double probability;
};

struct OutcomeRecord {
  std::vector<OutcomeEntry> entries;
  double total_probability() const;
};

struct RunResult {
  StateVector final_state;
  OutcomeRecord record;
  RegisterFile registers;
};

RunResult run_circuit(const Circuit& c, const StateVector& input, OutcomeSource& source);

/// Product of embedded gate matrices, later instructions on the left.
/// Throws if the circuit measures.
Matrix circuit_unitary(const Circuit& c);

/// Per-outcome linear operators of a circuit. Operators are unnormalized:
/// ||K_m psi||^2 is the probability of outcome string m.
class KrausMap {
 public:
  using Outcome = std::vector<int>;

  KrausMap(std::vector<std::string> registers, std::map<Outcome, Matrix> operators);

  /// Register names sorted lexicographically; outcome strings follow this order.
  const std::vector<std::string>& registers() const { return registers_; }
  const std::map<Outcome, Matrix>& operators() const { return operators_; }
  const Matrix& at(const Outcome& outcome) const { return operators_.at(outcome); }
  std::size_t size() const { return operators_.size(); }

  /// Frobenius norm of sum_m K_m^dagger K_m - I.
  double completeness_deviation() const;

 private:
  std::vector<std::string> registers_;
  std::map<Outcome, Matrix> operators_;
};

KrausMap kraus_map(const Circuit& c);

/// Outcome probabilities of `input` through `c`, keyed like the Kraus map.
std::map<KrausMap::Outcome, double> outcome_distribution(const KrausMap& kraus,
                                                         const StateVector& input);

}  // namespace qswap

#endif  // QSWAP_SIM_HPP
