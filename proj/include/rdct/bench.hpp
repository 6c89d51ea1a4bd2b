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

#ifndef RDCT_BENCH_HPP_
#define RDCT_BENCH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rdct/codec.hpp"
#include "rdct/grid.hpp"
#include "rdct/imageio.hpp"

namespace rdct {

// 10 log10(255^2 / MSE); +infinity when the images are identical.
double Psnr(const GrayImage& reference, const GrayImage& test);

struct RdPoint {
  CodecMode mode = CodecMode::kStandardDct;
  int n = 0;
  double coefficientsPerBlock = 0.0;  // mean stored coefficients
  double psnrDb = 0.0;                // +inf for a lossless point
  size_t bytesTotal = 0;              // serialized RDCT size

  bool infinite() const;
};

struct SweepConfig {
  std::vector<int> nValues;  // non-empty, strictly increasing
  std::vector<CodecMode> modes;
  int angleStepDeg = 1;
  Estimator estimator = Estimator::kExhaustive;
  int smoothWidth = 5;

  void Validate() const;
};

// Encode, decode and measure every (mode, n), rows in (mode, n) order.
std::vector<RdPoint> RunSweep(const GrayImage& image, const SweepConfig& cfg,
                              int threads = 1);

// One point of a sweep.
RdPoint MeasurePoint(const GrayImage& image, const CodecConfig& cfg,
                     int threads = 1);

// "mode,n,coeffs_per_block,psnr_db,bytes" then one row per point.
std::string EmitCsv(const std::vector<RdPoint>& points);
std::vector<RdPoint> ParseCsv(std::string_view text);

struct StepEdge {
  PixelBlock block;
  CoefficientGrid coeffs;
};

// 8x8 step edge through the block centre whose normal points at angle_deg
// (0 = varies along columns, 90 = varies along rows), anti-aliased by
// pixel-area coverage and scaled to [0, 255], together with its DCT.
StepEdge StepEdgeDemo(double angle_deg);

// Parallel anti-aliased stripes whose normal points at angle_deg, period
// in pixels, levels `low`/`high`.
GrayImage SyntheticStripes(int width, int height, double angle_deg,
                           double period, double low = 32.0,
                           double high = 224.0);

// One pixel per block; the chosen angle 0..89 scaled to 0..255.
GrayImage AngleMap(const GrayImage& image, const CodecConfig& cfg,
                   int threads = 1);

}  // namespace rdct

#endif  // RDCT_BENCH_HPP_
