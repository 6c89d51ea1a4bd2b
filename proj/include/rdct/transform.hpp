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

#ifndef RDCT_TRANSFORM_HPP_
#define RDCT_TRANSFORM_HPP_

#include <span>
#include <vector>

#include "rdct/grid.hpp"

namespace rdct {

// Orthonormal 2D DCT-II for sides 8..12:
//   C(i,j) = a(i) a(j) sum_{r,c} X(r,c) cos(pi/N (r+1/2) i) cos(pi/N (c+1/2) j)
// with a(0) = sqrt(1/N), a(k>0) = sqrt(2/N). Outputs whose magnitude is
// below 1e-12 of the block's L2 norm are flushed to exactly zero, so
// separable content yields exact zeros off its row/column.
CoefficientGrid Dct2(const PixelBlock& block);
// Exact inverse (and adjoint) of Dct2.
PixelBlock Idct2(const CoefficientGrid& coeffs);

// The orthonormal basis matrix D (row i = frequency i) for a side, row-major.
std::span<const double> DctMatrix(int side);

// Keeps the n largest-magnitude coefficients and zeroes the rest. Equal
// magnitudes are resolved by zigzag scan order (earlier wins).
CoefficientGrid KeepLargest(const CoefficientGrid& coeffs, int n);

int CountNonzero(const CoefficientGrid& coeffs);

// zigzag_rank[row * side + col] = position of (row, col) in the JPEG-style
// zigzag scan generalised to any side.
std::span<const int> ZigzagRank(int side);

}  // namespace rdct

#endif  // RDCT_TRANSFORM_HPP_
