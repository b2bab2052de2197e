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

#include "qswap/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qswap/kernels.hpp"

namespace qswap {

double tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("QSWAP_TOLERANCE")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-10;
  }();
  return tol;
}

Dimension::Dimension(int d) : d_(d) {
  if (d < 2) {
    throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(d));
  }
}

std::size_t total_dimension(Dimension dim, std::size_t n_wires) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n_wires; ++i) {
    total *= dim.levels();
    if (total > kMaxTotalDimension) {
      throw std::invalid_argument("d^n exceeds " + std::to_string(kMaxTotalDimension) +
                                  " (d=" + std::to_string(dim.value()) +
                                  ", n=" + std::to_string(n_wires) + ")");
    }
  }
  return total;
}

std::size_t compose_index(std::span<const int> digits, Dimension dim) {
  std::size_t index = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= dim.value()) {
      throw std::out_of_range("basis digit " + std::to_string(digit) + " outside [0, d)");
    }
    index = index * dim.levels() + static_cast<std::size_t>(digit);
  }
  return index;
}

std::vector<int> decompose_index(std::size_t index, Dimension dim, std::size_t n_wires) {
  std::vector<int> digits(n_wires);
  for (std::size_t i = n_wires; i-- > 0;) {
    digits[i] = static_cast<int>(index % dim.levels());
    index /= dim.levels();
  }
  if (index != 0) throw std::out_of_range("basis index too large for register");
  return digits;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t size) : size_(size), data_(size * size) {}

Matrix::Matrix(std::size_t size, std::vector<Complex> entries)
    : size_(size), data_(std::move(entries)) {
  if (data_.size() != size * size) {
    throw std::invalid_argument("matrix entry count does not match size");
  }
}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(size_);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (rhs.size_ != size_) throw std::invalid_argument("matrix size mismatch in product");
  Matrix out(size_);
  kernels::matmul(data_, rhs.data_, out.data_, size_);
  return out;
}

Matrix Matrix::operator*(Complex scalar) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= scalar;
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rhs.size_ != size_) throw std::invalid_argument("matrix size mismatch in sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

double Matrix::unitarity_deviation() const {
  return frobenius_distance(adjoint() * *this, identity(size_));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size() * b.size();
  Matrix out(n);
  for (std::size_t ar = 0; ar < a.size(); ++ar)
    for (std::size_t ac = 0; ac < a.size(); ++ac)
      for (std::size_t br = 0; br < b.size(); ++br)
        for (std::size_t bc = 0; bc < b.size(); ++bc)
          out(ar * b.size() + br, ac * b.size() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  double sum = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) sum += std::norm(da[i] - db[i]);
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Dimension dim, std::size_t n_wires, std::vector<Complex> amplitudes)
    : StateVector(unnormalized(dim, n_wires, std::move(amplitudes))) {
  if (std::abs(norm_squared() - 1.0) >= tolerance()) {
    throw std::invalid_argument("state vector is not normalized (norm^2 = " +
                                std::to_string(norm_squared()) + ")");
  }
}

StateVector StateVector::unnormalized(Dimension dim, std::size_t n_wires,
                                      std::vector<Complex> amplitudes) {
  if (n_wires == 0) throw std::invalid_argument("state vector needs at least one wire");
  if (amplitudes.size() != total_dimension(dim, n_wires)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes.size()) +
                                " does not match d^n");
  }
  StateVector s(dim, n_wires);
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

StateVector::StateVector(Dimension dim, std::size_t n_wires) : dim_(dim), n_wires_(n_wires) {}

StateVector StateVector::basis(Dimension dim, std::span<const int> digits) {
  return basis(dim, digits.size(), compose_index(digits, dim));
}

StateVector StateVector::basis(Dimension dim, std::size_t n_wires, std::size_t index) {
  std::vector<Complex> amps(total_dimension(dim, n_wires));
  amps.at(index) = 1.0;
  return unnormalized(dim, n_wires, std::move(amps));
}

double StateVector::norm_squared() const { return kernels::norm_squared(amplitudes_); }

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor of states with different d");
  std::vector<Complex> amps;
  amps.reserve(a.size() * b.size());
  for (Complex x : a.amplitudes())
    for (Complex y : b.amplitudes()) amps.push_back(x * y);
  return StateVector::unnormalized(a.dim(), a.n_wires() + b.n_wires(), std::move(amps));
}

namespace {
void require_same_shape(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim() || a.n_wires() != b.n_wires()) {
    throw std::invalid_argument("state shape mismatch");
  }
}
}  // namespace

Complex state_overlap(const StateVector& a, const StateVector& b) {
  require_same_shape(a, b);
  return kernels::inner_product(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(state_overlap(a, b));
}

double state_distance(const StateVector& a, const StateVector& b) {
  require_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// Labels

std::string to_string(const StateLabel& label) {
  if (auto* b = std::get_if<BasisLabel>(&label)) return std::to_string(b->value);
  if (std::holds_alternative<ChiLabel>(label)) return "chi";
  return "psi";
}

StateLabel parse_state_label(const std::string& text) {
  if (text == "chi") return ChiLabel{};
  if (text == "psi") return PsiLabel{};
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    return BasisLabel{std::stoi(text)};
  }
  throw std::invalid_argument("unknown state label '" + text + "'");
}

bool is_fixed(const StateLabel& label) { return !std::holds_alternative<PsiLabel>(label); }

StateVector label_state(const StateLabel& label, Dimension dim) {
  if (auto* b = std::get_if<BasisLabel>(&label)) {
    int digit = b->value;
    return StateVector::basis(dim, std::span<const int>(&digit, 1));
  }
  if (std::holds_alternative<ChiLabel>(label)) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim.value()));
    return StateVector(dim, 1, std::vector<Complex>(dim.levels(), amp));
  }
  throw std::invalid_argument("psi has no fixed state");
}

std::optional<StateLabel> match_label(const StateVector& state) {
  if (state.n_wires() != 1) return std::nullopt;
  std::vector<StateLabel> candidates{ChiLabel{}};
  for (int k = 0; k < state.dim().value(); ++k) candidates.emplace_back(BasisLabel{k});
  for (const auto& label : candidates) {
    if (state_distance(label_state(label, state.dim()), state) < tolerance()) return label;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gate metadata

std::string_view mnemonic(GateId g) {
  switch (g) {
    case GateId::X: return "X";
    case GateId::XD: return "XD";
    case GateId::Z: return "Z";
    case GateId::ZD: return "ZD";
    case GateId::H: return "H";
    case GateId::F: return "F";
    case GateId::FD: return "FD";
    case GateId::CX: return "CX";
    case GateId::CXD: return "CXD";
    case GateId::CZ: return "CZ";
    case GateId::CZD: return "CZD";
  }
  throw std::logic_error("unreachable gate id");
}

std::optional<GateId> parse_mnemonic(std::string_view text) {
  for (GateId g : kAllGates) {
    if (mnemonic(g) == text) return g;
  }
  return std::nullopt;
}

std::size_t gate_arity(GateId g) {
  switch (g) {
    case GateId::CX:
    case GateId::CXD:
    case GateId::CZ:
    case GateId::CZD:
      return 2;
    default:
      return 1;
  }
}

GateId adjoint(GateId g) {
  switch (g) {
    case GateId::X: return GateId::XD;
    case GateId::XD: return GateId::X;
    case GateId::Z: return GateId::ZD;
    case GateId::ZD: return GateId::Z;
    case GateId::H: return GateId::H;
    case GateId::F: return GateId::FD;
    case GateId::FD: return GateId::F;
    case GateId::CX: return GateId::CXD;
    case GateId::CXD: return GateId::CX;
    case GateId::CZ: return GateId::CZD;
    case GateId::CZD: return GateId::CZ;
  }
  throw std::logic_error("unreachable gate id");
}

GateId adjoint(GateId g, Dimension dim) {
  if (dim.value() == 2) {
    switch (g) {
      case GateId::X:
      case GateId::Z:
      case GateId::CX:
      case GateId::CZ:
        return g;
      default:
        break;
    }
  }
  return adjoint(g);
}

// ---------------------------------------------------------------------------
// Instructions and circuits

std::vector<Wire> instruction_wires(const Instruction& instr) {
  if (auto* g = std::get_if<GateOp>(&instr)) return g->wires;
  if (auto* m = std::get_if<MeasureOp>(&instr)) return {m->wire};
  return {std::get<ClassicalGateOp>(instr).wire};
}

Circuit::Circuit(Dimension dim, std::size_t n_wires)
    : dim_(dim), n_wires_(n_wires), inputs_(n_wires), outputs_(n_wires) {
  if (n_wires == 0) throw std::invalid_argument("circuit needs at least one wire");
  (void)qswap::total_dimension(dim, n_wires);
}

void Circuit::check(const Instruction& instr) const {
  const auto wires = instruction_wires(instr);
  for (Wire w : wires) {
    if (w >= n_wires_) {
      throw std::out_of_range("wire " + std::to_string(w) + " out of range for " +
                              std::to_string(n_wires_) + "-wire circuit");
    }
  }
  std::set<Wire> distinct(wires.begin(), wires.end());
  if (distinct.size() != wires.size()) {
    throw std::invalid_argument("duplicate wires in one instruction");
  }
  auto check_gate = [&](GateId g) {
    if (g == GateId::H && dim_.value() != 2) {
      throw std::invalid_argument("H is only defined for d = 2; use F/FD");
    }
  };
  if (auto* g = std::get_if<GateOp>(&instr)) {
    check_gate(g->gate);
    if (g->wires.size() != gate_arity(g->gate)) {
      throw std::invalid_argument(std::string(mnemonic(g->gate)) + " expects " +
                                  std::to_string(gate_arity(g->gate)) + " wire(s), got " +
                                  std::to_string(g->wires.size()));
    }
  } else if (auto* m = std::get_if<MeasureOp>(&instr)) {
    if (m->reg.empty()) throw std::invalid_argument("measurement needs a register name");
  } else {
    const auto& cg = std::get<ClassicalGateOp>(instr);
    check_gate(cg.base);
    if (gate_arity(cg.base) != 1) {
      throw std::invalid_argument("classically controlled gate must be single-wire");
    }
    if (cg.reg.empty()) throw std::invalid_argument("classical control needs a register name");
  }
}

Circuit& Circuit::gate(GateId g, std::vector<Wire> wires) {
  return append(GateOp{g, std::move(wires)});
}

Circuit& Circuit::measure(Wire wire, std::string reg) {
  return append(MeasureOp{wire, std::move(reg)});
}

Circuit& Circuit::classical_gate(std::string reg, GateId base, Wire wire) {
  return append(ClassicalGateOp{std::move(reg), base, wire});
}

Circuit& Circuit::append(Instruction instr) {
  check(instr);
  instructions_.push_back(std::move(instr));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.dim_ != dim_ || other.n_wires_ != n_wires_) {
    throw std::invalid_argument("cannot concatenate circuits of different shape");
  }
  for (const auto& instr : other.instructions_) instructions_.push_back(instr);
  return *this;
}

Circuit& Circuit::insert(std::size_t pos, Instruction instr) {
  if (pos > instructions_.size()) throw std::out_of_range("insert position out of range");
  check(instr);
  instructions_.insert(instructions_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(instr));
  return *this;
}

Circuit& Circuit::erase(std::size_t pos) {
  if (pos >= instructions_.size()) throw std::out_of_range("erase position out of range");
  instructions_.erase(instructions_.begin() + static_cast<std::ptrdiff_t>(pos));
  return *this;
}

Circuit& Circuit::replace(std::size_t pos, std::vector<Instruction> with) {
  if (pos >= instructions_.size()) throw std::out_of_range("replace position out of range");
  for (const auto& instr : with) check(instr);
  erase(pos);
  instructions_.insert(instructions_.begin() + static_cast<std::ptrdiff_t>(pos),
                       std::make_move_iterator(with.begin()), std::make_move_iterator(with.end()));
  return *this;
}

namespace {
void check_label(const std::optional<StateLabel>& label, Dimension dim) {
  if (!label) return;
  if (auto* b = std::get_if<BasisLabel>(&*label)) {
    if (b->value < 0 || b->value >= dim.value()) {
      throw std::out_of_range("basis label " + std::to_string(b->value) + " outside [0, d)");
    }
  }
}
}  // namespace

Circuit& Circuit::set_input(Wire w, std::optional<StateLabel> label) {
  check_label(label, dim_);
  inputs_.at(w) = label;
  return *this;
}

Circuit& Circuit::set_output(Wire w, std::optional<StateLabel> label) {
  check_label(label, dim_);
  outputs_.at(w) = label;
  return *this;
}

bool Circuit::has_measurements() const {
  return std::any_of(instructions_.begin(), instructions_.end(), [](const Instruction& i) {
    return !std::holds_alternative<GateOp>(i);
  });
}

std::vector<std::string> Circuit::registers() const {
  std::vector<std::string> regs;
  for (const auto& instr : instructions_) {
    if (auto* m = std::get_if<MeasureOp>(&instr)) regs.push_back(m->reg);
  }
  return regs;
}

void validate(const Circuit& c) {
  std::set<std::string> written;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& instr = c[i];
    const std::string where = "instruction " + std::to_string(i) + ": ";
    for (Wire w : instruction_wires(instr)) {
      if (w >= c.n_wires()) throw std::invalid_argument(where + "wire out of range");
    }
    if (auto* m = std::get_if<MeasureOp>(&instr)) {
      if (!written.insert(m->reg).second) {
        throw std::invalid_argument(where + "register '" + m->reg + "' written twice");
      }
    } else if (auto* cg = std::get_if<ClassicalGateOp>(&instr)) {
      if (!written.contains(cg->reg)) {
        throw std::invalid_argument(where + "register '" + cg->reg +
                                    "' read before any measurement writes it");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Rng

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_normal_) {
    double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

StateVector haar_random_state(Dimension dim, std::size_t n_wires, Rng& rng) {
  std::vector<Complex> amps(total_dimension(dim, n_wires));
  double norm2 = 0.0;
  for (auto& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = Complex(re, im);
    norm2 += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  return StateVector(dim, n_wires, std::move(amps));
}

}  // namespace qswap
