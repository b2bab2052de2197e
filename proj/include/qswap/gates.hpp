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

// Matrices for the qudit gate set. Conventions, with all arithmetic mod d:
//
//   X |y>      = |y + 1>               XD = X^dagger
//   Z |y>      = e^{-2 pi i y / d} |y> ZD = Z^dagger
//   F |y>      = d^{-1/2} sum_z e^{+2 pi i z y / d} |z>
//   CX |x>|y>  = |x>|y + x>            (first wire is the control)
//   CZ |x>|y>  = e^{-2 pi i x y / d} |x>|y>
//   H          = F at d = 2 (only defined there)
//
// Z carries the minus sign so that a classically controlled Z^x on the target
// reproduces CZ exactly once the control has collapsed to |x>.

#ifndef QSWAP_GATES_HPP
#define QSWAP_GATES_HPP

#include <span>

#include "qswap/core.hpp"

namespace qswap {

Matrix make_x(Dimension dim);
Matrix make_xd(Dimension dim);
Matrix make_z(Dimension dim);
Matrix make_zd(Dimension dim);
/// d = 2 only.
Matrix make_hadamard(Dimension dim = Dimension(2));
Matrix make_fourier(Dimension dim);
Matrix make_fourier_adj(Dimension dim);
Matrix make_cx(Dimension dim);
Matrix make_cxd(Dimension dim);
Matrix make_cz(Dimension dim);
Matrix make_czd(Dimension dim);

/// Matrix for any gate id at the given dimension.
Matrix gate_matrix(GateId g, Dimension dim);

/// g^power for a single-wire gate; power is reduced mod d for X/Z families.
Matrix gate_power(GateId g, int power, Dimension dim);

/// e^{2 pi i k / d}, computed directly from the angle for each k.
Complex root_of_unity(long long k, Dimension dim);

/// The n-wire matrix acting as u on `wires` (listed order) and identity elsewhere.
Matrix tensor_embed(const Matrix& u, std::span<const Wire> wires, std::size_t n_wires,
                    Dimension dim);

/// Two-wire controlled gate built as |x><x| (x) base^x.
Matrix controlled_from_power(GateId base, Dimension dim);

/// Spelling used when emitting gates. Qubit style (d = 2 only) writes the
/// self-inverse names: F, FD -> H; XD -> X; ZD -> Z; CXD -> CX; CZD -> CZ.
enum class GateStyle { kQubit, kQudit };

/// Qubit style at d = 2, qudit style otherwise.
GateStyle default_style(Dimension dim);
GateId styled(GateId g, GateStyle style);
/// Throws if qubit style is requested for d != 2.
void require_style(GateStyle style, Dimension dim);

}  // namespace qswap

#endif  // QSWAP_GATES_HPP
