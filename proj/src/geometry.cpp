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

#include "rdct/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rdct/error.hpp"

namespace rdct {
namespace {

constexpr double kKeysA = -0.5;
constexpr double kSourceCenter = (kBlockSide - 1) / 2.0;

double KeysWeight(double t) {
  t = std::abs(t);
  if (t <= 1.0) return ((kKeysA + 2.0) * t - (kKeysA + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((kKeysA * t - 5.0 * kKeysA) * t + 8.0 * kKeysA) * t - 4.0 * kKeysA;
  return 0.0;
}

void CheckAngle(double angle_deg) {
  if (!(angle_deg >= 0.0 && angle_deg < 90.0)) {
    throw ArgumentError("rotation angle must be in [0, 90)");
  }
}

double Radians(double deg) { return deg * std::numbers::pi / 180.0; }

bool IsIdentity(double angle_deg, int side, double step) {
  return angle_deg == 0.0 && side == kBlockSide && step == 1.0;
}

}  // namespace

RotationStrategy RotationStrategy::ConstantBlockSize(int side) {
  if (side != 8 && side != 12) {
    throw ArgumentError("constant block size must be 8 or 12");
  }
  return {StrategyKind::kConstantBlockSize, side};
}

int ExtendedSide(double angle_deg) {
  CheckAngle(angle_deg);
  const double t = Radians(angle_deg);
  const double extent = kBlockSide * (std::cos(t) + std::sin(t));
  // The guard keeps rounding noise from bumping an exact integer upward.
  return std::clamp(static_cast<int>(std::ceil(extent - 1e-9)), kBlockSide,
                    kMaxTransformSide);
}

int ExtendedSideFor(const RotationStrategy& strategy, double angle_deg) {
  if (strategy.kind == StrategyKind::kConstantBlockSize) {
    CheckAngle(angle_deg);
    return strategy.fixedSide;
  }
  return ExtendedSide(angle_deg);
}

double SamplingStep(const RotationStrategy& strategy, double angle_deg) {
  CheckAngle(angle_deg);
  if (strategy.kind == StrategyKind::kConstantSamplingRate) return 1.0;
  const double t = Radians(angle_deg);
  return kBlockSide * (std::cos(t) + std::sin(t)) / strategy.fixedSide;
}

double BicubicSample(const FieldView& field, double x, double y) {
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const double tx = x - fx;
  const double ty = y - fy;
  const std::array<double, 4> wx = {KeysWeight(1.0 + tx), KeysWeight(tx),
                                    KeysWeight(1.0 - tx), KeysWeight(2.0 - tx)};
  const std::array<double, 4> wy = {KeysWeight(1.0 + ty), KeysWeight(ty),
                                    KeysWeight(1.0 - ty), KeysWeight(2.0 - ty)};
  const int ix = static_cast<int>(fx);
  const int iy = static_cast<int>(fy);

  std::array<int, 4> cols;
  for (int k = 0; k < 4; ++k) cols[k] = std::clamp(ix - 1 + k, 0, field.width - 1);

  double acc = 0.0;
  for (int r = 0; r < 4; ++r) {
    const int row = std::clamp(iy - 1 + r, 0, field.height - 1);
    const double* line = field.data.data() + static_cast<size_t>(row) * field.width;
    double row_sum = 0.0;
    for (int k = 0; k < 4; ++k) row_sum += wx[k] * line[cols[k]];
    acc += wy[r] * row_sum;
  }
  return acc;
}

PixelBlock SourceBlock(const BlockContext& ctx) {
  PixelBlock block(kBlockSide);
  const int x0 = ctx.blockCol * kBlockSide;
  const int y0 = ctx.blockRow * kBlockSide;
  for (int r = 0; r < kBlockSide; ++r) {
    for (int c = 0; c < kBlockSide; ++c) {
      block.at(r, c) = ctx.image.clamped(x0 + c, y0 + r);
    }
  }
  return block;
}

ExtendedBlock RotateBlock(const BlockContext& ctx, double angle_deg,
                          const RotationStrategy& strategy) {
  const int side = ExtendedSideFor(strategy, angle_deg);
  const double step = SamplingStep(strategy, angle_deg);
  ExtendedBlock out{PixelBlock(side), angle_deg, strategy, kBlockSide};
  if (IsIdentity(angle_deg, side, step)) {
    out.block = SourceBlock(ctx);
    return out;
  }

  const double t = Radians(angle_deg);
  const double cs = std::cos(t) * step;
  const double sn = std::sin(t) * step;
  const double out_center = (side - 1) / 2.0;
  const double cx = ctx.blockCol * kBlockSide + kSourceCenter;
  const double cy = ctx.blockRow * kBlockSide + kSourceCenter;
  const FieldView field = FieldView::Of(ctx.image);
  for (int r = 0; r < side; ++r) {
    const double dv = r - out_center;
    for (int c = 0; c < side; ++c) {
      const double du = c - out_center;
      out.block.at(r, c) =
          BicubicSample(field, cx + cs * du - sn * dv, cy + sn * du + cs * dv);
    }
  }
  return out;
}

PixelBlock DerotateBlock(const ExtendedBlock& decoded) {
  const int side = decoded.block.side();
  const double step = SamplingStep(decoded.strategy, decoded.angleDeg);
  if (IsIdentity(decoded.angleDeg, side, step)) return decoded.block;

  const double t = Radians(decoded.angleDeg);
  const double cs = std::cos(t) / step;
  const double sn = std::sin(t) / step;
  const double out_center = (side - 1) / 2.0;
  const FieldView field = FieldView::Of(decoded.block);
  PixelBlock block(kBlockSide);
  for (int r = 0; r < kBlockSide; ++r) {
    const double py = r - kSourceCenter;
    for (int c = 0; c < kBlockSide; ++c) {
      const double px = c - kSourceCenter;
      block.at(r, c) = BicubicSample(field, out_center + cs * px + sn * py,
                                     out_center - sn * px + cs * py);
    }
  }
  return block;
}

}  // namespace rdct
