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

#ifndef RDCT_CODEC_HPP_
#define RDCT_CODEC_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rdct/angle.hpp"
#include "rdct/geometry.hpp"
#include "rdct/imageio.hpp"

namespace rdct {

enum class CodecMode : uint8_t {
  kStandardDct = 0,
  kRotatedConstRate = 1,
  kRotatedConstSize8 = 2,
  kRotatedConstSize12 = 3,
};

enum class Estimator { kExhaustive, kHistogram };

// CLI spellings: std, rot-rate, rot-size8, rot-size12.
std::string_view ModeName(CodecMode mode);
CodecMode ParseMode(std::string_view name);
std::string_view EstimatorName(Estimator estimator);
Estimator ParseEstimator(std::string_view name);

// Largest n accepted for a mode (64 or 144).
int MaxCoefficients(CodecMode mode);
RotationStrategy StrategyFor(CodecMode mode);
// Extended-grid side implied by mode and angle code.
int RecordSide(CodecMode mode, int angle_code);

struct CodecConfig {
  CodecMode mode = CodecMode::kStandardDct;
  int n = 4;
  int angleStepDeg = 1;  // whole degrees, 1..45
  Estimator estimator = Estimator::kExhaustive;
  int smoothWidth = 5;  // histogram estimator only

  void Validate() const;
};

struct KeptCoefficient {
  uint16_t index = 0;  // row-major position in the extended grid
  float value = 0.0f;

  friend bool operator==(const KeptCoefficient&,
                         const KeptCoefficient&) = default;
};

struct BlockRecord {
  uint8_t angleCode = 0;
  std::vector<KeptCoefficient> kept;  // strictly increasing indices

  friend bool operator==(const BlockRecord&, const BlockRecord&) = default;
};

inline constexpr uint8_t kFormatVersion = 1;

struct CompressedHeader {
  uint8_t version = kFormatVersion;
  uint32_t width = 0;
  uint32_t height = 0;
  CodecMode mode = CodecMode::kStandardDct;
  uint16_t n = 0;
  uint16_t angleStepTenths = 10;

  friend bool operator==(const CompressedHeader&,
                         const CompressedHeader&) = default;
};

struct CompressedImage {
  CompressedHeader header;
  std::vector<BlockRecord> records;  // row-major blocks

  int blocksAcross() const { return BlocksFor(static_cast<int>(header.width)); }
  int blocksDown() const { return BlocksFor(static_cast<int>(header.height)); }

  friend bool operator==(const CompressedImage&,
                         const CompressedImage&) = default;
};

// Per-block coding at a fixed angle: rotate, transform, keep n, and store
// the surviving coefficients as f32.
BlockRecord EncodeBlock(const BlockContext& ctx, int angle_code, CodecMode mode,
                        int n);
// Inverse chain of one record. Output samples are rounded to the nearest
// integer and clamped to [0, 255], exactly as a stored PGM holds them.
PixelBlock DecodeBlock(const BlockRecord& record, CodecMode mode);

// Angle choice for one block. The exhaustive estimator scores each grid
// angle through EncodeBlock/DecodeBlock, so the returned mse is exactly the
// error the decoder will produce. The histogram estimator scores only 0
// and its own (grid-quantised) angle.
AngleDecision ChooseAngle(const BlockContext& ctx, const CodecConfig& cfg);

struct EncodeReport {
  std::vector<AngleDecision> decisions;  // one per block, row-major
};

CompressedImage Encode(const GrayImage& image, const CodecConfig& cfg,
                       int threads = 1, EncodeReport* report = nullptr);
GrayImage Decode(const CompressedImage& compressed, int threads = 1);

// Throws FormatError/CorruptionError if the value breaks a format invariant.
void ValidateCompressed(const CompressedImage& compressed);

// RDCT stream, little-endian:
//   "RDCT" u8 version u32 width u32 height u8 mode u16 n u16 step_tenths
//   per block: u8 angle u16 count, count x (u16 index, f32 value)
std::vector<uint8_t> Serialize(const CompressedImage& compressed);
CompressedImage Deserialize(std::span<const uint8_t> bytes);

}  // namespace rdct

#endif  // RDCT_CODEC_HPP_
