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

#include "qswap/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace qswap {

namespace {

Circuit& add(Circuit& c, GateStyle style, GateId g, std::vector<Wire> wires) {
  return c.gate(styled(g, style), std::move(wires));
}

StateVector three_wire_input(const StateVector& psi) {
  const Dimension dim = psi.dim();
  const int zero = 0;
  const auto ket0 = StateVector::basis(dim, std::span<const int>(&zero, 1));
  return tensor(tensor(psi, ket0), ket0);
}

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t += ch;
  }
  if (t.empty()) throw std::invalid_argument("empty amplitude");
  auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad amplitude '" + text + "'");
    return v;
  };
  if (t.back() != 'i') return {parse_real(t), 0.0};
  t.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {parse_real(t.substr(0, split)), imag_part(t.substr(split))};
}

}  // namespace

Circuit build_swap(Dimension dim) {
  Circuit c(dim, 2);
  if (dim.value() == 2) {
    c.gate(GateId::CX, {0, 1}).gate(GateId::CX, {1, 0}).gate(GateId::CX, {0, 1});
  } else {
    c.gate(GateId::CX, {0, 1}).gate(GateId::CXD, {1, 0}).gate(GateId::CX, {0, 1});
    c.gate(GateId::F, {0}).gate(GateId::F, {0});
  }
  return c;
}

Circuit build_half_swap(Dimension dim) {
  const GateStyle style = default_style(dim);
  Circuit c(dim, 2);
  add(c, style, GateId::CX, {0, 1});
  add(c, style, GateId::CXD, {1, 0});
  c.set_input(0, PsiLabel{}).set_input(1, BasisLabel{0});
  c.set_output(0, BasisLabel{0}).set_output(1, PsiLabel{});
  return c;
}

EprPreparation build_epr(Dimension dim) {
  const GateStyle style = default_style(dim);
  Circuit c(dim, 2);
  add(c, style, GateId::F, {0});
  add(c, style, GateId::CX, {0, 1});
  c.set_input(0, BasisLabel{0}).set_input(1, BasisLabel{0});

  const std::size_t d = dim.levels();
  std::vector<Complex> amps(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t z = 0; z < d; ++z) amps[z * d + z] = amp;
  return {std::move(c), StateVector(dim, 2, std::move(amps))};
}

Circuit build_bbc(Dimension dim) { return build_bbc(dim, default_style(dim)); }

Circuit build_bbc(Dimension dim, GateStyle style) {
  require_style(style, dim);
  Circuit c(dim, 3);
  add(c, style, GateId::F, {kAncillaWire});
  add(c, style, GateId::CX, {kAncillaWire, kDestinationWire});
  add(c, style, GateId::CXD, {kSourceWire, kAncillaWire});
  add(c, style, GateId::FD, {kSourceWire});
  add(c, style, GateId::CXD, {kAncillaWire, kDestinationWire});
  add(c, style, GateId::CZD, {kSourceWire, kDestinationWire});
  c.set_input(kSourceWire, PsiLabel{})
      .set_input(kAncillaWire, BasisLabel{0})
      .set_input(kDestinationWire, BasisLabel{0});
  c.set_output(kSourceWire, ChiLabel{})
      .set_output(kAncillaWire, ChiLabel{})
      .set_output(kDestinationWire, PsiLabel{});
  return c;
}

Circuit build_teleport(Dimension dim) { return build_teleport(dim, default_style(dim)); }

Circuit build_teleport(Dimension dim, GateStyle style) {
  require_style(style, dim);
  Circuit c(dim, 3);
  add(c, style, GateId::F, {kAncillaWire});
  add(c, style, GateId::CX, {kAncillaWire, kDestinationWire});
  add(c, style, GateId::CXD, {kSourceWire, kAncillaWire});
  add(c, style, GateId::FD, {kSourceWire});
  c.measure(kAncillaWire, kAncillaRegister);
  c.measure(kSourceWire, kSourceRegister);
  c.classical_gate(kAncillaRegister, styled(GateId::XD, style), kDestinationWire);
  c.classical_gate(kSourceRegister, styled(GateId::ZD, style), kDestinationWire);
  c.set_input(kSourceWire, PsiLabel{})
      .set_input(kAncillaWire, BasisLabel{0})
      .set_input(kDestinationWire, BasisLabel{0});
  c.set_output(kDestinationWire, PsiLabel{});
  return c;
}

Matrix reduced_density(const StateVector& state, std::span<const Wire> keep) {
  const Dimension dim = state.dim();
  const std::size_t n = state.n_wires();
  std::vector<bool> kept(n, false);
  for (Wire w : keep) {
    if (w >= n || kept[w]) throw std::invalid_argument("bad wire list for reduced density");
    kept[w] = true;
  }
  const std::size_t k = total_dimension(dim, keep.size());
  Matrix rho(k);
  // rho[a][b] = sum over traced digits t of psi(a,t) conj(psi(b,t)).
  std::vector<std::size_t> local(state.size());
  std::vector<std::size_t> rest(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    const auto digits = decompose_index(i, dim, n);
    std::size_t l = 0;
    for (Wire w : keep) l = l * dim.levels() + static_cast<std::size_t>(digits[w]);
    std::size_t r = 0;
    for (Wire w = 0; w < n; ++w) {
      if (!kept[w]) r = r * dim.levels() + static_cast<std::size_t>(digits[w]);
    }
    local[i] = l;
    rest[i] = r;
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = 0; j < state.size(); ++j) {
      if (rest[i] == rest[j]) rho(local[i], local[j]) += state[i] * std::conj(state[j]);
    }
  }
  return rho;
}

namespace {

double expectation(const Matrix& rho, const StateVector& v) {
  Complex sum{};
  for (std::size_t r = 0; r < rho.size(); ++r)
    for (std::size_t c = 0; c < rho.size(); ++c) sum += std::conj(v[r]) * rho(r, c) * v[c];
  return sum.real();
}

TeleportOutcome finish_trial(Dimension dim, const StateVector& psi, RunResult run) {
  const std::size_t d = dim.levels();
  const Wire bob = kDestinationWire;
  const Matrix rho_bob = reduced_density(run.final_state, std::span<const Wire>(&bob, 1));

  // Alice's wires are basis states after measurement; read Bob's amplitudes there.
  const auto a_t = static_cast<std::size_t>(run.registers.read(kSourceRegister));
  const auto a_m = static_cast<std::size_t>(run.registers.read(kAncillaRegister));
  std::vector<Complex> bob_amps(d);
  for (std::size_t z = 0; z < d; ++z) bob_amps[z] = run.final_state[(a_t * d + a_m) * d + z];

  // Alice's leftover state in the coherent form of the same protocol.
  ForcedOutcomes no_measurements({});
  const StateVector coherent =
      run_circuit(build_bbc(dim), three_wire_input(psi), no_measurements).final_state;
  const std::vector<Wire> alice{kSourceWire, kAncillaWire};
  const auto chi = label_state(ChiLabel{}, dim);

  TeleportOutcome out{psi,
                      std::move(run.record),
                      StateVector(dim, 1, std::move(bob_amps)),
                      expectation(rho_bob, psi),
                      expectation(reduced_density(coherent, alice), tensor(chi, chi))};
  return out;
}

}  // namespace

TeleportOutcome teleport_trial(Dimension dim, const StateVector& psi, std::uint64_t seed) {
  if (psi.dim() != dim || psi.n_wires() != 1) {
    throw std::invalid_argument("teleported state must be a single wire of the same d");
  }
  SampledOutcomes source(seed);
  return finish_trial(dim, psi, run_circuit(build_teleport(dim), three_wire_input(psi), source));
}

TeleportOutcome teleport_branch(Dimension dim, const StateVector& psi, int ancilla_outcome,
                                int source_outcome) {
  if (psi.dim() != dim || psi.n_wires() != 1) {
    throw std::invalid_argument("teleported state must be a single wire of the same d");
  }
  ForcedOutcomes source({ancilla_outcome, source_outcome});
  return finish_trial(dim, psi, run_circuit(build_teleport(dim), three_wire_input(psi), source));
}

StateVector parse_state_spec(const std::string& spec, Dimension dim) {
  if (spec == "chi") return label_state(ChiLabel{}, dim);
  if (spec.rfind("haar:", 0) == 0) {
    Rng rng(std::stoull(spec.substr(5)));
    return haar_random_state(dim, 1, rng);
  }
  if (spec.rfind("psi:[", 0) == 0 && spec.back() == ']') {
    const std::string body = spec.substr(5, spec.size() - 6);
    std::vector<Complex> amps;
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::size_t end = comma == std::string::npos ? body.size() : comma;
      amps.push_back(parse_complex(body.substr(start, end - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (amps.size() != dim.levels()) {
      throw std::invalid_argument("psi amplitude list needs " + std::to_string(dim.value()) +
                                  " entries, got " + std::to_string(amps.size()));
    }
    return StateVector(dim, 1, std::move(amps));
  }
  const StateLabel label = parse_state_label(spec);
  if (!is_fixed(label)) throw std::invalid_argument("bare 'psi' needs an amplitude list");
  const auto* b = std::get_if<BasisLabel>(&label);
  if (b && (b->value >= dim.value())) {
    throw std::out_of_range("basis state " + spec + " outside [0, d)");
  }
  return label_state(label, dim);
}

}  // namespace qswap
