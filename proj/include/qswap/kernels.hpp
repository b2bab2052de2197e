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

// Dense numeric kernels. Each parallel kernel has a serial *_reference twin
// that uses a different, deliberately naive formulation; the tests compare
// the two and the benchmark times them against each other.
//
// Data layout for gate application: `data` holds `rows` rows of `row_len`
// contiguous entries, row r standing for computational basis index r of an
// n-wire register. A state vector is the row_len = 1 case; left-multiplying a
// d^n x d^n row-major matrix is the row_len = d^n case.

#ifndef QSWAP_KERNELS_HPP
#define QSWAP_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qswap::kernels {

using Complex = std::complex<double>;

/// Index bookkeeping for a k-wire gate inside an n-wire register.
struct GateLayout {
  std::size_t levels = 2;
  std::size_t n_wires = 0;
  std::vector<std::size_t> wires;
  /// offsets[local] = row offset of gate-local basis index `local` from a base row.
  std::vector<std::size_t> offsets;
  /// Every row whose digits on the gate wires are all zero.
  std::vector<std::size_t> bases;

  std::size_t gate_size() const { return offsets.size(); }
  std::size_t rows() const { return offsets.size() * bases.size(); }
};

GateLayout make_layout(std::span<const std::size_t> wires, std::size_t levels,
                       std::size_t n_wires);

/// data <- (gate embedded on layout.wires) * data. `gate` is k x k row-major,
/// k = levels^|wires|, first listed wire most significant in the local index.
void apply_rows(std::span<Complex> data, std::size_t row_len, std::span<const Complex> gate,
                const GateLayout& layout);
void apply_rows_reference(std::span<Complex> data, std::size_t row_len,
                          std::span<const Complex> gate, const GateLayout& layout);

/// out = a * b for n x n row-major matrices. `out` must not alias the inputs.
void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t n);
void matmul_reference(std::span<const Complex> a, std::span<const Complex> b,
                      std::span<Complex> out, std::size_t n);

double norm_squared(std::span<const Complex> v);
/// sum_i conj(a_i) b_i
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// Threads the parallel kernels will use (1 when built without OpenMP).
int max_threads();

}  // namespace qswap::kernels

#endif  // QSWAP_KERNELS_HPP
