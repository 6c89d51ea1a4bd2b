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

#ifndef RDCT_GRID_HPP_
#define RDCT_GRID_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rdct/error.hpp"

namespace rdct {

// Square row-major grid of doubles. The tag keeps pixel blocks and
// coefficient grids from being mixed up.
template <typename Tag>
class SquareGrid {
 public:
  SquareGrid() = default;
  explicit SquareGrid(int side, double fill = 0.0)
      : side_(CheckedSide(side)),
        values_(static_cast<size_t>(side) * side, fill) {}
  SquareGrid(int side, std::vector<double> values)
      : side_(CheckedSide(side)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(side) * side) {
      throw ArgumentError("grid values do not match side*side");
    }
  }

  int side() const { return side_; }
  size_t size() const { return values_.size(); }

  double& at(int row, int col) { return values_[Index(row, col)]; }
  double at(int row, int col) const { return values_[Index(row, col)]; }
  double& operator[](size_t i) { return values_[i]; }
  double operator[](size_t i) const { return values_[i]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const SquareGrid&, const SquareGrid&) = default;

 private:
  static int CheckedSide(int side) {
    if (side < 1) throw ArgumentError("grid side must be positive");
    return side;
  }
  size_t Index(int row, int col) const {
    return static_cast<size_t>(row) * side_ + col;
  }

  int side_ = 0;
  std::vector<double> values_;
};

struct PixelTag {};
struct CoefficientTag {};

// Luminance samples; (row, col) = (y, x).
using PixelBlock = SquareGrid<PixelTag>;
// DCT coefficients; (row, col) = (vertical frequency, horizontal frequency).
using CoefficientGrid = SquareGrid<CoefficientTag>;

inline constexpr int kBlockSide = 8;
inline constexpr int kMinTransformSide = 8;
inline constexpr int kMaxTransformSide = 12;

}  // namespace rdct

#endif  // RDCT_GRID_HPP_
