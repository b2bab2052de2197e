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

#include "qswap/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qswap::kernels {

namespace {

// Below this many complex multiply-adds the thread fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 1 << 14;

std::size_t stride_of(std::size_t wire, std::size_t levels, std::size_t n_wires) {
  std::size_t stride = 1;
  for (std::size_t i = wire + 1; i < n_wires; ++i) stride *= levels;
  return stride;
}

}  // namespace

GateLayout make_layout(std::span<const std::size_t> wires, std::size_t levels,
                       std::size_t n_wires) {
  GateLayout layout;
  layout.levels = levels;
  layout.n_wires = n_wires;
  layout.wires.assign(wires.begin(), wires.end());

  std::vector<bool> on_gate(n_wires, false);
  for (std::size_t w : wires) {
    if (w >= n_wires) throw std::out_of_range("gate wire out of range");
    if (on_gate[w]) throw std::invalid_argument("duplicate gate wire");
    on_gate[w] = true;
  }

  std::size_t k = 1;
  for (std::size_t i = 0; i < wires.size(); ++i) k *= levels;
  layout.offsets.assign(k, 0);
  for (std::size_t local = 0; local < k; ++local) {
    std::size_t rest = local;
    std::size_t offset = 0;
    for (std::size_t j = wires.size(); j-- > 0;) {
      offset += (rest % levels) * stride_of(wires[j], levels, n_wires);
      rest /= levels;
    }
    layout.offsets[local] = offset;
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < n_wires; ++i) total *= levels;
  layout.bases.reserve(total / k);
  for (std::size_t row = 0; row < total; ++row) {
    std::size_t rest = row;
    bool zero_on_gate = true;
    for (std::size_t w = n_wires; w-- > 0;) {
      if (on_gate[w] && rest % levels != 0) {
        zero_on_gate = false;
        break;
      }
      rest /= levels;
    }
    if (zero_on_gate) layout.bases.push_back(row);
  }
  return layout;
}

void apply_rows(std::span<Complex> data, std::size_t row_len, std::span<const Complex> gate,
                const GateLayout& layout) {
  const std::size_t k = layout.gate_size();
  if (gate.size() != k * k) throw std::invalid_argument("gate matrix size mismatch");
  if (data.size() != layout.rows() * row_len) throw std::invalid_argument("data size mismatch");

  const auto n_bases = static_cast<std::ptrdiff_t>(layout.bases.size());
  const bool parallel = data.size() * k >= kParallelThreshold;
  (void)parallel;

#pragma omp parallel if (parallel)
  {
    std::vector<Complex> in(k * row_len);
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < n_bases; ++b) {
      const std::size_t base = layout.bases[static_cast<std::size_t>(b)];
      for (std::size_t j = 0; j < k; ++j) {
        const Complex* src = data.data() + (base + layout.offsets[j]) * row_len;
        std::copy(src, src + row_len, in.data() + j * row_len);
      }
      for (std::size_t i = 0; i < k; ++i) {
        Complex* dst = data.data() + (base + layout.offsets[i]) * row_len;
        std::fill(dst, dst + row_len, Complex{});
        for (std::size_t j = 0; j < k; ++j) {
          const Complex g = gate[i * k + j];
          if (g == Complex{}) continue;
          const Complex* src = in.data() + j * row_len;
          for (std::size_t c = 0; c < row_len; ++c) dst[c] += g * src[c];
        }
      }
    }
  }
}

void apply_rows_reference(std::span<Complex> data, std::size_t row_len,
                          std::span<const Complex> gate, const GateLayout& layout) {
  const std::size_t k = layout.gate_size();
  const std::size_t levels = layout.levels;
  const std::size_t n = layout.n_wires;
  const std::size_t rows = layout.rows();
  if (gate.size() != k * k) throw std::invalid_argument("gate matrix size mismatch");
  if (data.size() != rows * row_len) throw std::invalid_argument("data size mismatch");

  const std::vector<Complex> in(data.begin(), data.end());
  std::vector<std::size_t> digits(n);
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t rest = row;
    for (std::size_t w = n; w-- > 0;) {
      digits[w] = rest % levels;
      rest /= levels;
    }
    std::size_t local_out = 0;
    for (std::size_t w : layout.wires) local_out = local_out * levels + digits[w];

    for (std::size_t c = 0; c < row_len; ++c) data[row * row_len + c] = Complex{};
    for (std::size_t local_in = 0; local_in < k; ++local_in) {
      std::vector<std::size_t> src_digits = digits;
      std::size_t rest_in = local_in;
      for (std::size_t j = layout.wires.size(); j-- > 0;) {
        src_digits[layout.wires[j]] = rest_in % levels;
        rest_in /= levels;
      }
      std::size_t src_row = 0;
      for (std::size_t w = 0; w < n; ++w) src_row = src_row * levels + src_digits[w];
      const Complex g = gate[local_out * k + local_in];
      for (std::size_t c = 0; c < row_len; ++c) {
        data[row * row_len + c] += g * in[src_row * row_len + c];
      }
    }
  }
}

void matmul(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
            std::size_t n) {
  if (a.size() != n * n || b.size() != n * n || out.size() != n * n) {
    throw std::invalid_argument("matmul size mismatch");
  }
  const auto rows = static_cast<std::ptrdiff_t>(n);
  const bool parallel = n * n * n >= kParallelThreshold;
  (void)parallel;
  // i-k-j order keeps the inner loop contiguous in b and out.
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex* row_out = out.data() + i * n;
    std::fill(row_out, row_out + n, Complex{});
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{}) continue;
      const Complex* row_b = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) row_out[j] += aik * row_b[j];
    }
  }
}

void matmul_reference(std::span<const Complex> a, std::span<const Complex> b,
                      std::span<Complex> out, std::size_t n) {
  if (a.size() != n * n || b.size() != n * n || out.size() != n * n) {
    throw std::invalid_argument("matmul size mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += a[i * n + k] * b[k * n + j];
      out[i * n + j] = sum;
    }
  }
}

double norm_squared(std::span<const Complex> v) {
  double sum = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for reduction(+ : sum) if (v.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) sum += std::norm(v[static_cast<std::size_t>(i)]);
  return sum;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product size mismatch");
  double re = 0.0;
  double im = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for reduction(+ : re, im) if (a.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex term = std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qswap::kernels
