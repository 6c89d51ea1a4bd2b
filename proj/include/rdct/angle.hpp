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

#ifndef RDCT_ANGLE_HPP_
#define RDCT_ANGLE_HPP_

#include <array>
#include <span>
#include <vector>

#include "rdct/geometry.hpp"
#include "rdct/grid.hpp"

namespace rdct {

struct AngleSearchConfig {
  double stepDeg = 1.0;   // candidate spacing; 0 < step <= 45
  int nForSelection = 4;  // coefficients kept while scoring, 1..64
  RotationStrategy strategy;

  void Validate() const;
};

struct AngleDecision {
  double angleDeg = 0.0;
  double mse = 0.0;
  double mseAtZero = 0.0;
};

inline constexpr int kHistogramBins = 90;

// Bin b accumulates gradient magnitude at orientations [b, b + 1) degrees.
struct GradientHistogram {
  std::array<double, kHistogramBins> bins{};

  double Mass() const;
};

struct GradientSample {
  double angleDeg = 0.0;  // folded into [0, 90)
  double magnitude = 0.0;
};

// Rotate, transform, keep the n largest coefficients, invert, rotate back.
PixelBlock ReconstructAt(const BlockContext& ctx, double angle_deg, int n,
                         const RotationStrategy& strategy);

// Mean squared difference over the 64 samples of two 8x8 blocks.
double BlockMse(const PixelBlock& a, const PixelBlock& b);

// {0, step, 2 step, ...} below 90 degrees.
std::vector<double> AngleGrid(double step_deg);

// Scores every candidate and returns the minimiser; ties go to the earlier
// candidate. The first candidate must be 0.
template <typename ScoreFn>
AngleDecision SelectAngle(std::span<const double> candidates, ScoreFn&& score) {
  AngleDecision best;
  bool first = true;
  for (double angle : candidates) {
    const double mse = score(angle);
    if (first) {
      best = {angle, mse, mse};
      first = false;
    } else if (mse < best.mse) {
      best.angleDeg = angle;
      best.mse = mse;
    }
  }
  return best;
}

// Grid search of the rotation that minimises the footprint MSE of
// ReconstructAt at cfg.nForSelection coefficients.
AngleDecision EstimateAngleExhaustive(const BlockContext& ctx,
                                      const AngleSearchConfig& cfg);

// Central differences over the 8x8 window at (x0, y0) of a clamp-to-edge
// field, row-major. Zero-gradient pixels get magnitude 0 and orientation 0.
std::array<GradientSample, kBlockSide * kBlockSide> GradientOrientation(
    const FieldView& field, int x0, int y0);
// Same, with the block itself as the field.
std::array<GradientSample, kBlockSide * kBlockSide> GradientOrientation(
    const PixelBlock& block);

GradientHistogram BuildHistogram(std::span<const GradientSample> samples);

// Circular triangular-weighted moving average of odd width over the 90
// bins (weights 1, 2, .., h+1, .., 2, 1). Total mass is preserved and a
// single spike stays a strict peak.
GradientHistogram SmoothHistogram(const GradientHistogram& histogram,
                                  int width);

// Index of the largest bin (lowest index on ties).
int DominantBin(const GradientHistogram& histogram);

// Dominant folded gradient orientation, in whole degrees. This is the
// rotation that brings the dominant edge onto an axis. The context form
// takes derivatives from the surrounding image.
int EstimateAngleHistogram(const PixelBlock& block, int smooth_width = 5);
int EstimateAngleHistogram(const BlockContext& ctx, int smooth_width = 5);

}  // namespace rdct

#endif  // RDCT_ANGLE_HPP_
