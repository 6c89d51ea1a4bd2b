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

#ifndef RDCT_GEOMETRY_HPP_
#define RDCT_GEOMETRY_HPP_

#include <span>

#include "rdct/grid.hpp"
#include "rdct/imageio.hpp"

namespace rdct {

enum class StrategyKind { kConstantSamplingRate, kConstantBlockSize };

// How a rotated 8x8 block is resampled into its extended square.
struct RotationStrategy {
  StrategyKind kind = StrategyKind::kConstantSamplingRate;
  int fixedSide = kBlockSide;  // used by kConstantBlockSize; 8 or 12

  static RotationStrategy ConstantSamplingRate() { return {}; }
  static RotationStrategy ConstantBlockSize(int side = kBlockSide);

  friend bool operator==(const RotationStrategy&,
                         const RotationStrategy&) = default;
};

// ceil(8 (cos t + sin t)): side of the smallest square holding an 8x8 block
// rotated by t degrees, at unit sampling rate. In [8, 12] for t in [0, 90).
int ExtendedSide(double angle_deg);

// Output side for a strategy at an angle.
int ExtendedSideFor(const RotationStrategy& strategy, double angle_deg);

// Source-pixel spacing between adjacent extended-block samples: 1 for the
// constant-rate strategy, 8 (cos t + sin t) / side for constant size.
double SamplingStep(const RotationStrategy& strategy, double angle_deg);

struct ExtendedBlock {
  PixelBlock block;
  double angleDeg = 0.0;
  RotationStrategy strategy;
  int sourceSide = kBlockSide;
};

// Locates one 8x8 block of an image. The image must outlive the context.
struct BlockContext {
  const GrayImage& image;
  int blockRow = 0;
  int blockCol = 0;
};

// Read-only 2D field with clamp-to-edge extension.
struct FieldView {
  std::span<const double> data;
  int width = 0;
  int height = 0;

  static FieldView Of(const GrayImage& image) {
    return {image.samples(), image.width(), image.height()};
  }
  static FieldView Of(const PixelBlock& block) {
    return {block.values(), block.side(), block.side()};
  }
};

// Keys cubic convolution (a = -0.5) over the 4x4 neighbourhood of (x, y),
// where x is the column coordinate and y the row coordinate.
double BicubicSample(const FieldView& field, double x, double y);

// The 8x8 source block of a context (edge-replicated past image borders).
PixelBlock SourceBlock(const BlockContext& ctx);

// Builds the extended block by inverse-mapping every output sample into the
// full source image: the rotated block and the surrounding fill in one pass.
// Angle 0 at unit step is an exact copy.
ExtendedBlock RotateBlock(const BlockContext& ctx, double angle_deg,
                          const RotationStrategy& strategy);

// Resamples an extended block back onto the 8x8 source footprint.
PixelBlock DerotateBlock(const ExtendedBlock& decoded);

}  // namespace rdct

#endif  // RDCT_GEOMETRY_HPP_
