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

#include "rdct/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdct/error.hpp"
#include "rdct/parallel.hpp"
#include "rdct/transform.hpp"

namespace rdct {

std::string_view ModeName(CodecMode mode) {
  switch (mode) {
    case CodecMode::kStandardDct:
      return "std";
    case CodecMode::kRotatedConstRate:
      return "rot-rate";
    case CodecMode::kRotatedConstSize8:
      return "rot-size8";
    case CodecMode::kRotatedConstSize12:
      return "rot-size12";
  }
  return "unknown";
}

CodecMode ParseMode(std::string_view name) {
  for (CodecMode m : {CodecMode::kStandardDct, CodecMode::kRotatedConstRate,
                      CodecMode::kRotatedConstSize8,
                      CodecMode::kRotatedConstSize12}) {
    if (ModeName(m) == name) return m;
  }
  throw ArgumentError("unknown mode '" + std::string(name) + "'");
}

std::string_view EstimatorName(Estimator estimator) {
  return estimator == Estimator::kHistogram ? "histogram" : "exhaustive";
}

Estimator ParseEstimator(std::string_view name) {
  if (name == "exhaustive") return Estimator::kExhaustive;
  if (name == "histogram") return Estimator::kHistogram;
  throw ArgumentError("unknown estimator '" + std::string(name) + "'");
}

int MaxCoefficients(CodecMode mode) {
  switch (mode) {
    case CodecMode::kStandardDct:
    case CodecMode::kRotatedConstSize8:
      return kBlockSide * kBlockSide;
    case CodecMode::kRotatedConstRate:
    case CodecMode::kRotatedConstSize12:
      return kMaxTransformSide * kMaxTransformSide;
  }
  return 0;
}

RotationStrategy StrategyFor(CodecMode mode) {
  switch (mode) {
    case CodecMode::kRotatedConstSize8:
      return RotationStrategy::ConstantBlockSize(8);
    case CodecMode::kRotatedConstSize12:
      return RotationStrategy::ConstantBlockSize(12);
    case CodecMode::kStandardDct:
    case CodecMode::kRotatedConstRate:
      break;
  }
  return RotationStrategy::ConstantSamplingRate();
}

int RecordSide(CodecMode mode, int angle_code) {
  if (angle_code < 0 || angle_code >= 90) {
    throw CorruptionError("angle code out of range");
  }
  return ExtendedSideFor(StrategyFor(mode), angle_code);
}

void CodecConfig::Validate() const {
  if (n < 0 || n > MaxCoefficients(mode)) {
    throw ArgumentError("n out of range for mode " + std::string(ModeName(mode)));
  }
  if (angleStepDeg < 1 || angleStepDeg > 45) {
    throw ArgumentError("angle step must be a whole number of degrees in [1, 45]");
  }
  if (smoothWidth < 1 || smoothWidth % 2 == 0) {
    throw ArgumentError("smoothing width must be odd and positive");
  }
}

BlockRecord EncodeBlock(const BlockContext& ctx, int angle_code, CodecMode mode,
                        int n) {
  if (mode == CodecMode::kStandardDct && angle_code != 0) {
    throw ArgumentError("standard DCT blocks are never rotated");
  }
  const ExtendedBlock extended =
      RotateBlock(ctx, angle_code, StrategyFor(mode));
  const int cells = static_cast<int>(extended.block.size());
  const CoefficientGrid kept =
      KeepLargest(Dct2(extended.block), std::min(n, cells));
  BlockRecord record;
  record.angleCode = static_cast<uint8_t>(angle_code);
  for (int i = 0; i < cells; ++i) {
    const float value = static_cast<float>(kept[i]);
    if (value != 0.0f) {
      record.kept.push_back({static_cast<uint16_t>(i), value});
    }
  }
  return record;
}

PixelBlock DecodeBlock(const BlockRecord& record, CodecMode mode) {
  const int side = RecordSide(mode, record.angleCode);
  CoefficientGrid grid(side);
  for (const KeptCoefficient& k : record.kept) {
    if (k.index >= grid.size()) {
      throw CorruptionError("coefficient index outside the extended grid");
    }
    grid[k.index] = k.value;
  }
  ExtendedBlock extended{Idct2(grid), static_cast<double>(record.angleCode),
                         StrategyFor(mode), kBlockSide};
  PixelBlock block = DerotateBlock(extended);
  for (double& v : block.values()) v = ToByte(v);
  return block;
}

AngleDecision ChooseAngle(const BlockContext& ctx, const CodecConfig& cfg) {
  const PixelBlock source = SourceBlock(ctx);
  auto score = [&](double angle) {
    const BlockRecord record =
        EncodeBlock(ctx, static_cast<int>(angle), cfg.mode, cfg.n);
    return BlockMse(source, DecodeBlock(record, cfg.mode));
  };
  if (cfg.mode == CodecMode::kStandardDct) {
    const double zero[] = {0.0};
    return SelectAngle(zero, score);
  }
  if (cfg.estimator == Estimator::kHistogram) {
    const int estimate = EstimateAngleHistogram(ctx, cfg.smoothWidth);
    const int step = cfg.angleStepDeg;
    const int snapped = static_cast<int>(std::lround(
                            static_cast<double>(estimate) / step)) * step % 90;
    std::vector<double> candidates{0.0};
    if (snapped != 0) candidates.push_back(snapped);
    return SelectAngle(candidates, score);
  }
  return SelectAngle(AngleGrid(cfg.angleStepDeg), score);
}

CompressedImage Encode(const GrayImage& image, const CodecConfig& cfg,
                       int threads, EncodeReport* report) {
  cfg.Validate();
  CompressedImage out;
  out.header.width = static_cast<uint32_t>(image.width());
  out.header.height = static_cast<uint32_t>(image.height());
  out.header.mode = cfg.mode;
  out.header.n = static_cast<uint16_t>(cfg.n);
  out.header.angleStepTenths = static_cast<uint16_t>(cfg.angleStepDeg * 10);

  const int across = out.blocksAcross();
  const size_t count = static_cast<size_t>(across) * out.blocksDown();
  out.records.resize(count);
  std::vector<AngleDecision> decisions(count);
  ParallelFor(count, threads, [&](size_t i) {
    const BlockContext ctx{image, static_cast<int>(i / across),
                           static_cast<int>(i % across)};
    decisions[i] = ChooseAngle(ctx, cfg);
    out.records[i] = EncodeBlock(ctx, static_cast<int>(decisions[i].angleDeg),
                                 cfg.mode, cfg.n);
  });
  if (report != nullptr) report->decisions = std::move(decisions);
  return out;
}

void ValidateCompressed(const CompressedImage& c) {
  const CompressedHeader& h = c.header;
  if (h.version != kFormatVersion) throw FormatError("unsupported RDCT version");
  if (static_cast<uint8_t>(h.mode) > 3) throw FormatError("unknown RDCT mode");
  if (h.width == 0 || h.height == 0 || h.width > (1u << 24) ||
      h.height > (1u << 24)) {
    throw FormatError("RDCT image dimensions out of range");
  }
  if (h.n > MaxCoefficients(h.mode)) throw FormatError("RDCT n out of range");
  if (h.angleStepTenths == 0) throw FormatError("RDCT angle step is zero");
  const size_t expected = static_cast<size_t>(c.blocksAcross()) * c.blocksDown();
  if (c.records.size() != expected) {
    throw CorruptionError("RDCT record count does not match image size");
  }
  for (const BlockRecord& r : c.records) {
    const int side = RecordSide(h.mode, r.angleCode);  // rejects codes >= 90
    if (h.mode == CodecMode::kStandardDct && r.angleCode != 0) {
      throw CorruptionError("rotated block in a standard DCT stream");
    }
    if (r.kept.size() > h.n) throw CorruptionError("block keeps more than n");
    int previous = -1;
    for (const KeptCoefficient& k : r.kept) {
      if (static_cast<int>(k.index) <= previous || k.index >= side * side) {
        throw CorruptionError("coefficient indices invalid");
      }
      if (!std::isfinite(k.value)) {
        throw CorruptionError("non-finite coefficient");
      }
      previous = k.index;
    }
  }
}

GrayImage Decode(const CompressedImage& compressed, int threads) {
  ValidateCompressed(compressed);
  BlockGrid grid;
  grid.originalWidth = static_cast<int>(compressed.header.width);
  grid.originalHeight = static_cast<int>(compressed.header.height);
  grid.blocksAcross = compressed.blocksAcross();
  grid.blocksDown = compressed.blocksDown();
  grid.blocks.resize(compressed.records.size());
  ParallelFor(grid.blocks.size(), threads, [&](size_t i) {
    grid.blocks[i] = DecodeBlock(compressed.records[i], compressed.header.mode);
  });
  return Untile(grid);
}

}  // namespace rdct
