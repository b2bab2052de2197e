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

#include "qswap/gates.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qswap {

namespace {

std::size_t mod(long long a, int d) {
  long long r = a % d;
  if (r < 0) r += d;
  return static_cast<std::size_t>(r);
}

/// Two-wire basis permutation |x>|y> -> |x>|y + sign*x>.
Matrix controlled_shift(Dimension dim, int sign) {
  const std::size_t d = dim.levels();
  Matrix m(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t out = mod(static_cast<long long>(y) + sign * static_cast<long long>(x),
                                  dim.value());
      m(x * d + out, x * d + y) = 1.0;
    }
  }
  return m;
}

/// Two-wire diagonal |x>|y> -> root(sign * x y)|x>|y>.
Matrix controlled_phase(Dimension dim, int sign) {
  const std::size_t d = dim.levels();
  Matrix m(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      m(x * d + y, x * d + y) =
          root_of_unity(sign * static_cast<long long>(x * y), dim);
    }
  }
  return m;
}

Matrix shift(Dimension dim, int sign) {
  const std::size_t d = dim.levels();
  Matrix m(d);
  for (std::size_t y = 0; y < d; ++y) m(mod(static_cast<long long>(y) + sign, dim.value()), y) = 1.0;
  return m;
}

Matrix clock(Dimension dim, int sign) {
  const std::size_t d = dim.levels();
  Matrix m(d);
  for (std::size_t y = 0; y < d; ++y) m(y, y) = root_of_unity(sign * static_cast<long long>(y), dim);
  return m;
}

Matrix fourier(Dimension dim, int sign) {
  const std::size_t d = dim.levels();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix m(d);
  for (std::size_t z = 0; z < d; ++z) {
    for (std::size_t y = 0; y < d; ++y) {
      m(z, y) = scale * root_of_unity(sign * static_cast<long long>(z * y), dim);
    }
  }
  return m;
}

}  // namespace

Complex root_of_unity(long long k, Dimension dim) {
  const std::size_t r = mod(k, dim.value());
  const std::size_t d = dim.levels();
  // Quarter turns are returned exactly.
  if ((4 * r) % d == 0) {
    switch ((4 * r) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

Matrix make_x(Dimension dim) { return shift(dim, +1); }
Matrix make_xd(Dimension dim) { return shift(dim, -1); }
Matrix make_z(Dimension dim) { return clock(dim, -1); }
Matrix make_zd(Dimension dim) { return clock(dim, +1); }

Matrix make_hadamard(Dimension dim) {
  if (dim.value() != 2) {
    throw std::invalid_argument("H is only defined for d = 2; use F/FD for general d");
  }
  const double s = 1.0 / std::sqrt(2.0);
  return Matrix(2, {s, s, s, -s});
}

Matrix make_fourier(Dimension dim) { return fourier(dim, +1); }
Matrix make_fourier_adj(Dimension dim) { return fourier(dim, -1); }
Matrix make_cx(Dimension dim) { return controlled_shift(dim, +1); }
Matrix make_cxd(Dimension dim) { return controlled_shift(dim, -1); }
Matrix make_cz(Dimension dim) { return controlled_phase(dim, -1); }
Matrix make_czd(Dimension dim) { return controlled_phase(dim, +1); }

Matrix gate_matrix(GateId g, Dimension dim) {
  switch (g) {
    case GateId::X: return make_x(dim);
    case GateId::XD: return make_xd(dim);
    case GateId::Z: return make_z(dim);
    case GateId::ZD: return make_zd(dim);
    case GateId::H: return make_hadamard(dim);
    case GateId::F: return make_fourier(dim);
    case GateId::FD: return make_fourier_adj(dim);
    case GateId::CX: return make_cx(dim);
    case GateId::CXD: return make_cxd(dim);
    case GateId::CZ: return make_cz(dim);
    case GateId::CZD: return make_czd(dim);
  }
  throw std::logic_error("unreachable gate id");
}

Matrix gate_power(GateId g, int power, Dimension dim) {
  if (gate_arity(g) != 1) throw std::invalid_argument("gate_power needs a single-wire gate");
  if (power < 0) throw std::invalid_argument("gate_power needs a non-negative power");
  switch (g) {
    case GateId::X: return shift(dim, static_cast<int>(mod(power, dim.value())));
    case GateId::XD: return shift(dim, -static_cast<int>(mod(power, dim.value())));
    case GateId::Z: return clock(dim, -static_cast<int>(mod(power, dim.value())));
    case GateId::ZD: return clock(dim, static_cast<int>(mod(power, dim.value())));
    default: break;
  }
  Matrix result = Matrix::identity(dim.levels());
  const Matrix base = gate_matrix(g, dim);
  for (int i = 0; i < power; ++i) result = base * result;
  return result;
}

Matrix tensor_embed(const Matrix& u, std::span<const Wire> wires, std::size_t n_wires,
                    Dimension dim) {
  std::set<Wire> distinct(wires.begin(), wires.end());
  if (distinct.size() != wires.size()) throw std::invalid_argument("duplicate wires in embed");
  for (Wire w : wires) {
    if (w >= n_wires) throw std::out_of_range("embed wire out of range");
  }
  const std::size_t k = total_dimension(dim, wires.size());
  if (u.size() != k) throw std::invalid_argument("gate dimension does not match d^k");

  const std::size_t total = total_dimension(dim, n_wires);
  Matrix out(total);
  for (std::size_t row = 0; row < total; ++row) {
    const auto rd = decompose_index(row, dim, n_wires);
    for (std::size_t col = 0; col < total; ++col) {
      const auto cd = decompose_index(col, dim, n_wires);
      bool spectators_agree = true;
      for (std::size_t w = 0; w < n_wires && spectators_agree; ++w) {
        if (!distinct.contains(w) && rd[w] != cd[w]) spectators_agree = false;
      }
      if (!spectators_agree) continue;
      std::size_t lr = 0;
      std::size_t lc = 0;
      for (Wire w : wires) {
        lr = lr * dim.levels() + static_cast<std::size_t>(rd[w]);
        lc = lc * dim.levels() + static_cast<std::size_t>(cd[w]);
      }
      out(row, col) = u(lr, lc);
    }
  }
  return out;
}

Matrix controlled_from_power(GateId base, Dimension dim) {
  const std::size_t d = dim.levels();
  Matrix m(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    const Matrix block = gate_power(base, static_cast<int>(x), dim);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(x * d + r, x * d + c) = block(r, c);
  }
  return m;
}

GateStyle default_style(Dimension dim) {
  return dim.value() == 2 ? GateStyle::kQubit : GateStyle::kQudit;
}

GateId styled(GateId g, GateStyle style) {
  if (style == GateStyle::kQudit) return g;
  switch (g) {
    case GateId::F:
    case GateId::FD:
      return GateId::H;
    case GateId::XD: return GateId::X;
    case GateId::ZD: return GateId::Z;
    case GateId::CXD: return GateId::CX;
    case GateId::CZD: return GateId::CZ;
    default: return g;
  }
}

void require_style(GateStyle style, Dimension dim) {
  if (style == GateStyle::kQubit && dim.value() != 2) {
    throw std::invalid_argument("qubit gate style needs d = 2");
  }
}

}  // namespace qswap
