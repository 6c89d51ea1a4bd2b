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

#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <random>

#include "rdct/codec.hpp"
#include "rdct/error.hpp"

namespace rdct {
namespace {

GrayImage RandomImage(int w, int h, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  GrayImage image(w, h);
  for (double& v : image.samples()) v = dist(rng);
  return image;
}

CompressedImage SmallEncode(uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 30);
  std::uniform_int_distribution<int> mode(0, 3);
  const GrayImage image = RandomImage(dim(rng), dim(rng), rng);
  CodecConfig cfg;
  cfg.mode = static_cast<CodecMode>(mode(rng));
  std::uniform_int_distribution<int> n(0, MaxCoefficients(cfg.mode));
  cfg.n = n(rng);
  cfg.angleStepDeg = 15;
  return Encode(image, cfg);
}

TEST(BitstreamTest, FixedLayout) {
  const GrayImage flat(8, 8, 2.0);
  CodecConfig cfg;
  cfg.n = 1;
  const auto bytes = Serialize(Encode(flat, cfg));
  const std::vector<uint8_t> header = {'R', 'D', 'C', 'T', 1,  8, 0, 0, 0, 8, 0,
                                       0,   0,   0,   1,   0, 10, 0};
  ASSERT_EQ(bytes.size(), header.size() + 3 + 6);
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  EXPECT_EQ(bytes[18], 0);  // angle code
  EXPECT_EQ(bytes[19], 1);  // kept count
  EXPECT_EQ(bytes[20], 0);
  EXPECT_EQ(bytes[21], 0);  // index
  EXPECT_EQ(bytes[22], 0);
  uint32_t bits = bytes[23] | bytes[24] << 8 | bytes[25] << 16 |
                  static_cast<uint32_t>(bytes[26]) << 24;
  EXPECT_NEAR(std::bit_cast<float>(bits), 16.0f, 1e-5f);
}

// Property: deserialize is a left inverse of serialize and re-serialization
// reproduces the bytes.
TEST(BitstreamTest, RoundTripIsByteExact) {
  for (uint32_t seed = 0; seed < 30; ++seed) {
    const CompressedImage c = SmallEncode(seed);
    const auto bytes = Serialize(c);
    const CompressedImage back = Deserialize(bytes);
    EXPECT_EQ(back, c);
    EXPECT_EQ(Serialize(back), bytes);
  }
}

TEST(BitstreamTest, RejectsDamagedStreams) {
  const auto good = Serialize(SmallEncode(3));
  EXPECT_THROW(Deserialize({}), FormatError);

  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(Deserialize(bad_magic), FormatError);

  auto bad_version = good;
  bad_version[4] = 9;
  EXPECT_THROW(Deserialize(bad_version), FormatError);

  auto bad_mode = good;
  bad_mode[13] = 7;
  EXPECT_THROW(Deserialize(bad_mode), FormatError);

  for (size_t cut : {size_t{5}, size_t{17}, good.size() - 1}) {
    EXPECT_THROW(Deserialize(std::span(good).first(cut)), TruncationError) << cut;
  }

  auto trailing = good;
  trailing.push_back(0);
  EXPECT_THROW(Deserialize(trailing), FormatError);
}

TEST(BitstreamTest, RejectsCorruptRecords) {
  GrayImage flat(8, 8, 50.0);
  CodecConfig cfg;
  cfg.mode = CodecMode::kRotatedConstRate;
  cfg.n = 2;
  CompressedImage c = Encode(flat, cfg);

  auto bytes = Serialize(c);
  bytes[18] = 200;  // angle code
  EXPECT_THROW(Deserialize(bytes), CorruptionError);

  CompressedImage too_many = c;
  too_many.records[0].kept = {{0, 1.0f}, {1, 1.0f}, {2, 1.0f}};
  EXPECT_THROW(Deserialize(Serialize(too_many)), CorruptionError);

  CompressedImage unordered = c;
  unordered.records[0].kept = {{5, 1.0f}, {3, 1.0f}};
  EXPECT_THROW(Deserialize(Serialize(unordered)), CorruptionError);

  CompressedImage outside = c;
  outside.records[0].kept = {{64, 1.0f}};  // side 8 at angle 0
  EXPECT_THROW(Deserialize(Serialize(outside)), CorruptionError);

  CompressedImage std_rotated = c;
  std_rotated.header.mode = CodecMode::kStandardDct;
  std_rotated.records[0].angleCode = 10;
  EXPECT_THROW(Deserialize(Serialize(std_rotated)), CorruptionError);
  EXPECT_THROW(Decode(std_rotated), CorruptionError);

  CompressedImage nan_value = c;
  nan_value.records[0].kept = {{0, std::nanf("")}};
  EXPECT_THROW(Deserialize(Serialize(nan_value)), CorruptionError);
}

TEST(BitstreamTest, HugeDimensionsDoNotAllocate) {
  std::vector<uint8_t> bytes = {'R', 'D', 'C', 'T', 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 4, 0, 10, 0};
  EXPECT_THROW(Deserialize(bytes), TruncationError);
}

}  // namespace
}  // namespace rdct
