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

#ifndef QSWAP_CORE_HPP
#define QSWAP_CORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qswap {

using Complex = std::complex<double>;
using Wire = std::size_t;

/// Largest full-register dimension d^n accepted anywhere in the library.
inline constexpr std::size_t kMaxTotalDimension = 2048;

/// Default comparison tolerance; QSWAP_TOLERANCE overrides it at process start.
double tolerance();

/// Number of levels per qudit. Always at least 2.
class Dimension {
 public:
  explicit Dimension(int d);

  int value() const { return d_; }
  std::size_t levels() const { return static_cast<std::size_t>(d_); }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int d_;
};

/// d^n, throwing if it exceeds kMaxTotalDimension.
std::size_t total_dimension(Dimension dim, std::size_t n_wires);

/// Composite index = sum_i digit_i * d^(n-1-i); wire 0 is the most significant digit.
std::size_t compose_index(std::span<const int> digits, Dimension dim);
std::vector<int> decompose_index(std::size_t index, Dimension dim, std::size_t n_wires);

/// Row-major square complex matrix. Row = output index, column = input index.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t size);
  Matrix(std::size_t size, std::vector<Complex> entries);

  static Matrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * size_ + col];
  }
  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(Complex scalar) const;
  Matrix operator+(const Matrix& rhs) const;

  /// Frobenius norm of (U^dagger U - I).
  double unitarity_deviation() const;
  bool is_unitary(double tol = tolerance()) const { return unitarity_deviation() < tol; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Frobenius norm of a - b. Sizes must match.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// Amplitudes over the computational basis of n wires, normalized.
class StateVector {
 public:
  StateVector(Dimension dim, std::size_t n_wires, std::vector<Complex> amplitudes);

  /// |digits[0]>|digits[1]>...
  static StateVector basis(Dimension dim, std::span<const int> digits);
  static StateVector basis(Dimension dim, std::size_t n_wires, std::size_t index);
  /// Skips the normalization check; for projected or intermediate vectors.
  static StateVector unnormalized(Dimension dim, std::size_t n_wires,
                                  std::vector<Complex> amplitudes);

  Dimension dim() const { return dim_; }
  std::size_t n_wires() const { return n_wires_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  StateVector(Dimension dim, std::size_t n_wires);

  Dimension dim_;
  std::size_t n_wires_;
  std::vector<Complex> amplitudes_;
};

/// a (x) b, with a on the more significant wires.
StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>
Complex state_overlap(const StateVector& a, const StateVector& b);
double fidelity(const StateVector& a, const StateVector& b);
/// Euclidean norm of a - b.
double state_distance(const StateVector& a, const StateVector& b);

/// Named single-wire states used to annotate circuit inputs and outputs.
struct BasisLabel {
  int value;
  friend bool operator==(BasisLabel, BasisLabel) = default;
};
/// The uniform superposition F|0>.
struct ChiLabel {
  friend bool operator==(ChiLabel, ChiLabel) = default;
};
/// The unknown state being moved around.
struct PsiLabel {
  friend bool operator==(PsiLabel, PsiLabel) = default;
};
using StateLabel = std::variant<BasisLabel, ChiLabel, PsiLabel>;

std::string to_string(const StateLabel& label);
StateLabel parse_state_label(const std::string& text);
bool is_fixed(const StateLabel& label);
/// Concrete vector for a fixed label; throws for PsiLabel.
StateVector label_state(const StateLabel& label, Dimension dim);
/// The fixed label whose state equals `state` (up to tolerance), if any.
std::optional<StateLabel> match_label(const StateVector& state);

/// D suffix = adjoint.
enum class GateId { X, XD, Z, ZD, H, F, FD, CX, CXD, CZ, CZD };

inline constexpr GateId kAllGates[] = {GateId::X,  GateId::XD,  GateId::Z,  GateId::ZD,
                                       GateId::H,  GateId::F,   GateId::FD, GateId::CX,
                                       GateId::CXD, GateId::CZ, GateId::CZD};

std::string_view mnemonic(GateId g);
std::optional<GateId> parse_mnemonic(std::string_view text);
/// Number of wires the gate acts on (1 or 2).
std::size_t gate_arity(GateId g);
/// Symbolic adjoint: X<->XD, Z<->ZD, F<->FD, CX<->CXD, CZ<->CZD, H<->H.
GateId adjoint(GateId g);
/// Adjoint as spelled at a given dimension: at d = 2 the self-inverse gates
/// X, Z, CX, CZ map to themselves.
GateId adjoint(GateId g, Dimension dim);

struct GateOp {
  GateId gate;
  std::vector<Wire> wires;  // control first for 2-wire gates
  friend bool operator==(const GateOp&, const GateOp&) = default;
};

struct MeasureOp {
  Wire wire;
  std::string reg;
  friend bool operator==(const MeasureOp&, const MeasureOp&) = default;
};

/// Applies base^value(reg) to `wire`.
struct ClassicalGateOp {
  std::string reg;
  GateId base;
  Wire wire;
  friend bool operator==(const ClassicalGateOp&, const ClassicalGateOp&) = default;
};

using Instruction = std::variant<GateOp, MeasureOp, ClassicalGateOp>;

/// Wires touched by an instruction, in listed order.
std::vector<Wire> instruction_wires(const Instruction& instr);

class Circuit {
 public:
  Circuit(Dimension dim, std::size_t n_wires);

  Dimension dim() const { return dim_; }
  std::size_t n_wires() const { return n_wires_; }
  std::size_t total_dimension() const { return qswap::total_dimension(dim_, n_wires_); }

  const std::vector<Instruction>& instructions() const { return instructions_; }
  std::size_t size() const { return instructions_.size(); }
  const Instruction& operator[](std::size_t i) const { return instructions_[i]; }

  Circuit& gate(GateId g, std::vector<Wire> wires);
  Circuit& measure(Wire wire, std::string reg);
  Circuit& classical_gate(std::string reg, GateId base, Wire wire);
  Circuit& append(Instruction instr);
  Circuit& append(const Circuit& other);
  Circuit& insert(std::size_t pos, Instruction instr);
  Circuit& erase(std::size_t pos);
  Circuit& replace(std::size_t pos, std::vector<Instruction> with);

  const std::optional<StateLabel>& input(Wire w) const { return inputs_.at(w); }
  const std::optional<StateLabel>& output(Wire w) const { return outputs_.at(w); }
  Circuit& set_input(Wire w, std::optional<StateLabel> label);
  Circuit& set_output(Wire w, std::optional<StateLabel> label);

  bool has_measurements() const;
  /// Register names in the order they are written.
  std::vector<std::string> registers() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Instruction& instr) const;

  Dimension dim_;
  std::size_t n_wires_;
  std::vector<Instruction> instructions_;
  std::vector<std::optional<StateLabel>> inputs_;
  std::vector<std::optional<StateLabel>> outputs_;
};

/// Full structural validation: wire ranges, arity, register single-assignment
/// and read-after-write. Throws std::invalid_argument describing the first problem.
void validate(const Circuit& c);

/// Deterministic 64-bit seeded generator (mt19937_64) with portable
/// uniform/normal draws so seeded outputs match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// Haar-random single-wire (or n-wire) state.
StateVector haar_random_state(Dimension dim, std::size_t n_wires, Rng& rng);

}  // namespace qswap

#endif  // QSWAP_CORE_HPP
