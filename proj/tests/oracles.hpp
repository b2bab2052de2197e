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

// Brute-force reference models for the tests. Everything here works on
// plain nested vectors and digit arithmetic and never calls into the
// library's numeric code, so agreement with the library is real evidence.

#ifndef QSWAP_TESTS_ORACLES_HPP
#define QSWAP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "qswap/core.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Digits = std::vector<int>;

inline int ipow(int d, int n) {
  int r = 1;
  while (n-- > 0) r *= d;
  return r;
}

inline Digits digits_of(int index, int d, int n) {
  Digits out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = index % d;
    index /= d;
  }
  return out;
}

inline int index_of(const Digits& digits, int d) {
  int r = 0;
  for (int x : digits) r = r * d + x;
  return r;
}

inline int mod(int a, int d) { return ((a % d) + d) % d; }

inline C phase(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline Mat zeros(int size) { return Mat(size, std::vector<C>(size)); }

inline Mat eye(int size) {
  Mat m = zeros(size);
  for (int i = 0; i < size; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat dagger(const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat out = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = std::conj(a[j][i]);
  return out;
}

/// Matrix of a basis permutation given as a digit map.
inline Mat permutation(int d, int n, const std::function<Digits(const Digits&)>& f) {
  const int size = ipow(d, n);
  Mat m = zeros(size);
  for (int col = 0; col < size; ++col) m[index_of(f(digits_of(col, d, n)), d)][col] = 1.0;
  return m;
}

/// Diagonal matrix from a phase function (in turns) of the digits.
inline Mat diagonal(int d, int n, const std::function<double(const Digits&)>& turns) {
  const int size = ipow(d, n);
  Mat m = zeros(size);
  for (int i = 0; i < size; ++i) m[i][i] = phase(turns(digits_of(i, d, n)));
  return m;
}

inline Mat fourier(int d, int sign) {
  Mat m = zeros(d);
  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      m[z][y] = phase(sign * static_cast<double>(mod(z * y, d)) / d) / std::sqrt(double(d));
  return m;
}

/// Gate matrices straight from their defining action on basis states.
inline Mat gate(qswap::GateId g, int d) {
  using qswap::GateId;
  switch (g) {
    case GateId::X:
      return permutation(d, 1, [d](const Digits& x) { return Digits{mod(x[0] + 1, d)}; });
    case GateId::XD:
      return permutation(d, 1, [d](const Digits& x) { return Digits{mod(x[0] - 1, d)}; });
    case GateId::Z:
      return diagonal(d, 1, [d](const Digits& x) { return -double(x[0]) / d; });
    case GateId::ZD:
      return diagonal(d, 1, [d](const Digits& x) { return double(x[0]) / d; });
    case GateId::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {{s, s}, {s, -s}};
    }
    case GateId::F:
      return fourier(d, +1);
    case GateId::FD:
      return fourier(d, -1);
    case GateId::CX:
      return permutation(d, 2, [d](const Digits& x) { return Digits{x[0], mod(x[1] + x[0], d)}; });
    case GateId::CXD:
      return permutation(d, 2, [d](const Digits& x) { return Digits{x[0], mod(x[1] - x[0], d)}; });
    case GateId::CZ:
      return diagonal(d, 2, [d](const Digits& x) { return -double(mod(x[0] * x[1], d)) / d; });
    case GateId::CZD:
      return diagonal(d, 2, [d](const Digits& x) { return double(mod(x[0] * x[1], d)) / d; });
  }
  return {};
}

/// u acting on `wires` (listed order) of an n-wire register.
inline Mat embed(const Mat& u, const std::vector<std::size_t>& wires, int d, int n) {
  const int size = ipow(d, n);
  Mat m = zeros(size);
  for (int r = 0; r < size; ++r) {
    const Digits rd = digits_of(r, d, n);
    for (int c = 0; c < size; ++c) {
      const Digits cd = digits_of(c, d, n);
      bool rest_equal = true;
      for (int w = 0; w < n; ++w) {
        bool on_gate = false;
        for (auto gw : wires) on_gate |= static_cast<int>(gw) == w;
        if (!on_gate && rd[w] != cd[w]) rest_equal = false;
      }
      if (!rest_equal) continue;
      int lr = 0, lc = 0;
      for (auto gw : wires) {
        lr = lr * d + rd[gw];
        lc = lc * d + cd[gw];
      }
      m[r][c] = u[lr][lc];
    }
  }
  return m;
}

inline Mat power(const Mat& u, int k) {
  Mat r = eye(static_cast<int>(u.size()));
  for (int i = 0; i < k; ++i) r = mul(u, r);
  return r;
}

/// Projector onto digit v of `wire`.
inline Mat projector(int wire, int v, int d, int n) {
  const int size = ipow(d, n);
  Mat m = zeros(size);
  for (int i = 0; i < size; ++i)
    if (digits_of(i, d, n)[wire] == v) m[i][i] = 1.0;
  return m;
}

inline Mat unitary(const qswap::Circuit& c) {
  const int d = c.dim().value();
  const int n = static_cast<int>(c.n_wires());
  Mat u = eye(ipow(d, n));
  for (const auto& instr : c.instructions()) {
    const auto& g = std::get<qswap::GateOp>(instr);
    u = mul(embed(gate(g.gate, d), g.wires, d, n), u);
  }
  return u;
}

/// Kraus operators keyed by outcome values in sorted-register order, built by
/// enumerating every outcome string and multiplying projectors and gates.
inline std::map<std::vector<int>, Mat> kraus(const qswap::Circuit& c) {
  const int d = c.dim().value();
  const int n = static_cast<int>(c.n_wires());
  std::vector<std::string> regs;
  for (const auto& instr : c.instructions())
    if (auto* m = std::get_if<qswap::MeasureOp>(&instr)) regs.push_back(m->reg);
  std::vector<std::string> sorted = regs;
  std::sort(sorted.begin(), sorted.end());

  std::map<std::vector<int>, Mat> out;
  const int strings = ipow(d, static_cast<int>(regs.size()));
  for (int s = 0; s < strings; ++s) {
    const Digits values = digits_of(s, d, static_cast<int>(sorted.size()));
    std::map<std::string, int> value_of;
    for (std::size_t i = 0; i < sorted.size(); ++i) value_of[sorted[i]] = values[i];
    Mat k = eye(ipow(d, n));
    for (const auto& instr : c.instructions()) {
      if (auto* g = std::get_if<qswap::GateOp>(&instr)) {
        k = mul(embed(gate(g->gate, d), g->wires, d, n), k);
      } else if (auto* m = std::get_if<qswap::MeasureOp>(&instr)) {
        k = mul(projector(static_cast<int>(m->wire), value_of[m->reg], d, n), k);
      } else {
        const auto& cg = std::get<qswap::ClassicalGateOp>(instr);
        const Mat u = power(gate(cg.base, d), value_of[cg.reg]);
        k = mul(embed(u, {cg.wire}, d, n), k);
      }
    }
    out[values] = k;
  }
  return out;
}

inline double distance(const Mat& a, const Mat& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[i][j] - b[i][j]);
  return std::sqrt(s);
}

inline double distance(const qswap::Matrix& a, const Mat& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += std::norm(a(i, j) - b[i][j]);
  return std::sqrt(s);
}

inline std::vector<C> apply(const Mat& m, const std::vector<C>& v) {
  std::vector<C> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace oracle

#endif  // QSWAP_TESTS_ORACLES_HPP
