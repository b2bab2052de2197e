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

// Builders for the swap and teleportation circuits.
//
// Three-wire circuits use wire 0 = source (Alice's input), wire 1 = ancilla
// (Alice's half of the entangled pair), wire 2 = destination (Bob).

#ifndef QSWAP_PROTOCOLS_HPP
#define QSWAP_PROTOCOLS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qswap/core.hpp"
#include "qswap/gates.hpp"
#include "qswap/sim.hpp"

namespace qswap {

inline constexpr Wire kSourceWire = 0;
inline constexpr Wire kAncillaWire = 1;
inline constexpr Wire kDestinationWire = 2;

inline constexpr const char* kAncillaRegister = "a_m";
inline constexpr const char* kSourceRegister = "a_t";

/// Full exchange |x,y> -> |y,x>.
///
/// d = 2: CX(0,1) CX(1,0) CX(0,1).
/// d > 2: controlled additions alone have determinant 1 over Z_d and cannot
/// produce the swap, so the three couplings CX(0,1) CXD(1,0) CX(0,1) give
/// |x,y> -> |-y,x>, and F F on wire 0 (F^2|y> = |-y>) undoes the negation.
Circuit build_swap(Dimension dim);

/// |x>|0> -> |0>|x>: CX(0,1) then CX(1,0) (CXD(1,0) for d > 2).
/// Declares input psi,0 and output 0,psi.
Circuit build_half_swap(Dimension dim);

struct EprPreparation {
  Circuit circuit;       // wire 0 = ancilla, wire 1 = destination, both from |0>
  StateVector expected;  // d^{-1/2} sum_z |z>|z>
};
EprPreparation build_epr(Dimension dim);

/// Measurement-free teleportation circuit.
/// Qubit style: H(1) CX(1,2) CX(0,1) H(0) CX(1,2) CZ(0,2).
/// Qudit style: F(1) CX(1,2) CXD(0,1) FD(0) CXD(1,2) CZD(0,2).
/// Declares inputs psi,0,0 and outputs chi,chi,psi.
Circuit build_bbc(Dimension dim);
Circuit build_bbc(Dimension dim, GateStyle style);

/// Teleportation with measurements and classically controlled corrections:
/// entangler, Alice's basis rotation, Measure(1 -> a_m), Measure(0 -> a_t),
/// then X^{a_m} and Z^{a_t} on the destination (XD, ZD in qudit style).
Circuit build_teleport(Dimension dim);
Circuit build_teleport(Dimension dim, GateStyle style);

/// Density matrix of the listed wires (listed order) after tracing out the rest.
Matrix reduced_density(const StateVector& state, std::span<const Wire> keep);

struct TeleportOutcome {
  StateVector input;
  OutcomeRecord record;
  /// Destination state, read off the post-measurement product state.
  StateVector bob_state;
  /// <psi| rho_bob |psi>
  double fidelity;
  /// <chi chi| rho_alice |chi chi>
  double alice_chi_overlap;
};

/// Runs build_teleport(dim) on psi (x) |0> (x) |0> with sampled measurements.
TeleportOutcome teleport_trial(Dimension dim, const StateVector& psi, std::uint64_t seed);

/// Same, with the two measurement outcomes forced (ancilla first, then source).
TeleportOutcome teleport_branch(Dimension dim, const StateVector& psi, int ancilla_outcome,
                                int source_outcome);

/// Single-wire state from a spec: a digit k, "chi", "psi:[a,b,...]" or
/// "haar:<seed>". Amplitudes are "re", "re+imi", "imi".
StateVector parse_state_spec(const std::string& spec, Dimension dim);

}  // namespace qswap

#endif  // QSWAP_PROTOCOLS_HPP
