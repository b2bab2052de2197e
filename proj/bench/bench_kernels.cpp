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

// OpenMP kernels against their serial references.
//   ./bench_kernels --benchmark_filter=ApplyRows

#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "qswap/core.hpp"
#include "qswap/gates.hpp"
#include "qswap/kernels.hpp"

namespace {

using qswap::Complex;
using qswap::Dimension;

std::vector<Complex> random_block(std::size_t n, std::uint64_t seed) {
  qswap::Rng rng(seed);
  std::vector<Complex> v(n);
  for (auto& z : v) z = {rng.normal(), rng.normal()};
  return v;
}

// args: d, n_wires, row_len
template <bool kParallel>
void ApplyRows(benchmark::State& state) {
  const Dimension dim(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto row_len = static_cast<std::size_t>(state.range(2));
  const auto gate = qswap::make_cx(dim);
  const std::array<qswap::Wire, 2> wires{0, n - 1};
  const auto layout = qswap::kernels::make_layout(wires, dim.levels(), n);
  auto data = random_block(qswap::total_dimension(dim, n) * row_len, 1);
  for (auto _ : state) {
    if constexpr (kParallel) {
      qswap::kernels::apply_rows(data, row_len, gate.data(), layout);
    } else {
      qswap::kernels::apply_rows_reference(data, row_len, gate.data(), layout);
    }
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}
BENCHMARK(ApplyRows<true>)->Args({2, 11, 1})->Args({3, 6, 1})->Args({2, 8, 256})->Args({3, 5, 243});
BENCHMARK(ApplyRows<false>)->Args({2, 11, 1})->Args({3, 6, 1})->Args({2, 8, 256})->Args({3, 5, 243});

template <bool kParallel>
void Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_block(n * n, 2);
  const auto b = random_block(n * n, 3);
  std::vector<Complex> c(n * n);
  for (auto _ : state) {
    if constexpr (kParallel) {
      qswap::kernels::matmul(a, b, c, n);
    } else {
      qswap::kernels::matmul_reference(a, b, c, n);
    }
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(Matmul<true>)->Arg(64)->Arg(243)->Arg(512);
BENCHMARK(Matmul<false>)->Arg(64)->Arg(243)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
