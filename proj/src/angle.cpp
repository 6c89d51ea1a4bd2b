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

#include "rdct/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rdct/error.hpp"
#include "rdct/transform.hpp"

namespace rdct {

void AngleSearchConfig::Validate() const {
  if (!(stepDeg > 0.0 && stepDeg <= 45.0)) {
    throw ArgumentError("angle step must be in (0, 45]");
  }
  if (nForSelection < 1 || nForSelection > 64) {
    throw ArgumentError("nForSelection must be in [1, 64]");
  }
}

double GradientHistogram::Mass() const {
  return std::accumulate(bins.begin(), bins.end(), 0.0);
}

PixelBlock ReconstructAt(const BlockContext& ctx, double angle_deg, int n,
                         const RotationStrategy& strategy) {
  ExtendedBlock extended = RotateBlock(ctx, angle_deg, strategy);
  const CoefficientGrid kept = KeepLargest(Dct2(extended.block), n);
  extended.block = Idct2(kept);
  return DerotateBlock(extended);
}

double BlockMse(const PixelBlock& a, const PixelBlock& b) {
  if (a.side() != kBlockSide || b.side() != kBlockSide) {
    throw ArgumentError("BlockMse expects two 8x8 blocks");
  }
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

std::vector<double> AngleGrid(double step_deg) {
  if (!(step_deg > 0.0 && step_deg <= 45.0)) {
    throw ArgumentError("angle step must be in (0, 45]");
  }
  std::vector<double> grid;
  // Multiply rather than accumulate so grid points are exact multiples.
  for (int k = 0;; ++k) {
    const double angle = k * step_deg;
    if (angle >= 90.0) break;
    grid.push_back(angle);
  }
  return grid;
}

AngleDecision EstimateAngleExhaustive(const BlockContext& ctx,
                                      const AngleSearchConfig& cfg) {
  cfg.Validate();
  const PixelBlock source = SourceBlock(ctx);
  const std::vector<double> grid = AngleGrid(cfg.stepDeg);
  return SelectAngle(grid, [&](double angle) {
    return BlockMse(source,
                    ReconstructAt(ctx, angle, cfg.nForSelection, cfg.strategy));
  });
}

std::array<GradientSample, kBlockSide * kBlockSide> GradientOrientation(
    const FieldView& field, int x0, int y0) {
  auto at = [&](int x, int y) {
    x = std::clamp(x, 0, field.width - 1);
    y = std::clamp(y, 0, field.height - 1);
    return field.data[static_cast<size_t>(y) * field.width + x];
  };
  std::array<GradientSample, kBlockSide * kBlockSide> out{};
  for (int r = 0; r < kBlockSide; ++r) {
    for (int c = 0; c < kBlockSide; ++c) {
      const int x = x0 + c;
      const int y = y0 + r;
      const double dx = (at(x + 1, y) - at(x - 1, y)) / 2.0;
      const double dy = (at(x, y + 1) - at(x, y - 1)) / 2.0;
      GradientSample& s = out[r * kBlockSide + c];
      if (dx == 0.0 && dy == 0.0) continue;
      s.magnitude = std::sqrt(dx * dx + dy * dy);
      double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
      deg -= 90.0 * std::floor(deg / 90.0);
      if (deg >= 90.0) deg -= 90.0;
      s.angleDeg = std::max(deg, 0.0);
    }
  }
  return out;
}

std::array<GradientSample, kBlockSide * kBlockSide> GradientOrientation(
    const PixelBlock& block) {
  if (block.side() != kBlockSide) {
    throw ArgumentError("GradientOrientation expects an 8x8 block");
  }
  return GradientOrientation(FieldView::Of(block), 0, 0);
}

GradientHistogram BuildHistogram(std::span<const GradientSample> samples) {
  GradientHistogram h;
  for (const GradientSample& s : samples) {
    if (!std::isfinite(s.magnitude) || !std::isfinite(s.angleDeg) ||
        s.magnitude <= 0.0) {
      continue;
    }
    const int bin = std::clamp(static_cast<int>(std::floor(s.angleDeg)), 0,
                               kHistogramBins - 1);
    h.bins[bin] += s.magnitude;
  }
  return h;
}

GradientHistogram SmoothHistogram(const GradientHistogram& histogram,
                                  int width) {
  if (width < 1 || width % 2 == 0) {
    throw ArgumentError("smoothing width must be odd and positive");
  }
  if (width == 1) return histogram;
  const int half = width / 2;
  const double norm = static_cast<double>((half + 1) * (half + 1));
  GradientHistogram out;
  for (int b = 0; b < kHistogramBins; ++b) {
    double sum = 0.0;
    for (int k = -half; k <= half; ++k) {
      const double weight = half + 1 - std::abs(k);
      sum += weight * histogram.bins[((b + k) % kHistogramBins + kHistogramBins) %
                                     kHistogramBins];
    }
    out.bins[b] = sum / norm;
  }
  return out;
}

int DominantBin(const GradientHistogram& histogram) {
  // max_element returns the first maximum, i.e. the lowest index.
  return static_cast<int>(
      std::max_element(histogram.bins.begin(), histogram.bins.end()) -
      histogram.bins.begin());
}

int EstimateAngleHistogram(const PixelBlock& block, int smooth_width) {
  const auto samples = GradientOrientation(block);
  return DominantBin(SmoothHistogram(BuildHistogram(samples), smooth_width));
}

int EstimateAngleHistogram(const BlockContext& ctx, int smooth_width) {
  const auto samples = GradientOrientation(FieldView::Of(ctx.image),
                                           ctx.blockCol * kBlockSide,
                                           ctx.blockRow * kBlockSide);
  return DominantBin(SmoothHistogram(BuildHistogram(samples), smooth_width));
}

}  // namespace rdct
