// Copyright 2026 The rdct Authors.
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

#include "rdct/transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rdct/error.hpp"
#include "rdct/kernels.hpp"

namespace rdct {
namespace {

constexpr int kTableCount = kMaxTransformSide - kMinTransformSide + 1;
constexpr double kFlushRelative = 1e-12;

struct BasisTables {
  std::array<std::vector<double>, kTableCount> forward;     // D
  std::array<std::vector<double>, kTableCount> transposed;  // D^T
  std::array<std::vector<int>, kTableCount> zigzag;
};

std::vector<int> BuildZigzag(int n) {
  std::vector<int> rank(static_cast<size_t>(n) * n);
  int next = 0;
  for (int s = 0; s <= 2 * (n - 1); ++s) {
    const int lo = std::max(0, s - (n - 1));
    const int hi = std::min(s, n - 1);
    if (s % 2 == 0) {
      for (int row = hi; row >= lo; --row) rank[row * n + (s - row)] = next++;
    } else {
      for (int row = lo; row <= hi; ++row) rank[row * n + (s - row)] = next++;
    }
  }
  return rank;
}

const BasisTables& Tables() {
  static const BasisTables tables = [] {
    BasisTables t;
    for (int n = kMinTransformSide; n <= kMaxTransformSide; ++n) {
      const size_t slot = n - kMinTransformSide;
      std::vector<double> d(static_cast<size_t>(n) * n);
      std::vector<double> dt(d.size());
      for (int i = 0; i < n; ++i) {
        const double scale = std::sqrt((i == 0 ? 1.0 : 2.0) / n);
        for (int x = 0; x < n; ++x) {
          const double v =
              scale * std::cos(std::numbers::pi / n * (x + 0.5) * i);
          d[i * n + x] = v;
          dt[x * n + i] = v;
        }
      }
      t.forward[slot] = std::move(d);
      t.transposed[slot] = std::move(dt);
      t.zigzag[slot] = BuildZigzag(n);
    }
    return t;
  }();
  return tables;
}

size_t Slot(int side) {
  if (side < kMinTransformSide || side > kMaxTransformSide) {
    throw ArgumentError("transform side must be in [8, 12]");
  }
  return static_cast<size_t>(side - kMinTransformSide);
}

}  // namespace

std::span<const double> DctMatrix(int side) {
  return Tables().forward[Slot(side)];
}

std::span<const int> ZigzagRank(int side) { return Tables().zigzag[Slot(side)]; }

CoefficientGrid Dct2(const PixelBlock& block) {
  const int n = block.side();
  const size_t slot = Slot(n);
  const auto& t = Tables();
  std::array<double, kMaxTransformSide * kMaxTransformSide> tmp;
  CoefficientGrid out(n);
  kernels::MatMul(t.forward[slot], block.values(), tmp, n);
  kernels::MatMul(tmp, t.transposed[slot], out.values(), n);

  double energy = 0.0;
  for (double v : block.values()) energy += v * v;
  const double floor = kFlushRelative * std::sqrt(energy);
  for (double& c : out.values()) {
    if (std::abs(c) < floor) c = 0.0;
  }
  return out;
}

PixelBlock Idct2(const CoefficientGrid& coeffs) {
  const int n = coeffs.side();
  const size_t slot = Slot(n);
  const auto& t = Tables();
  std::array<double, kMaxTransformSide * kMaxTransformSide> tmp;
  PixelBlock out(n);
  kernels::MatMul(t.transposed[slot], coeffs.values(), tmp, n);
  kernels::MatMul(tmp, t.forward[slot], out.values(), n);
  return out;
}

CoefficientGrid KeepLargest(const CoefficientGrid& coeffs, int n) {
  const int count = static_cast<int>(coeffs.size());
  if (n < 0 || n > count) {
    throw ArgumentError("KeepLargest: n must be in [0, side*side]");
  }
  CoefficientGrid out(coeffs.side());
  if (n == 0) return out;
  if (n == count) return coeffs;

  const auto zigzag = ZigzagRank(coeffs.side());
  std::array<int, kMaxTransformSide * kMaxTransformSide> order;
  std::iota(order.begin(), order.begin() + count, 0);
  std::partial_sort(order.begin(), order.begin() + n, order.begin() + count,
                    [&](int a, int b) {
                      const double ma = std::abs(coeffs[a]);
                      const double mb = std::abs(coeffs[b]);
                      if (ma != mb) return ma > mb;
                      return zigzag[a] < zigzag[b];
                    });
  for (int k = 0; k < n; ++k) out[order[k]] = coeffs[order[k]];
  return out;
}

int CountNonzero(const CoefficientGrid& coeffs) {
  const auto values = coeffs.values();
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [](double v) { return v != 0.0; }));
}

}  // namespace rdct
