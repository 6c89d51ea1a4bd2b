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

#include <bit>
#include <cstring>

#include "rdct/codec.hpp"
#include "rdct/error.hpp"

namespace rdct {
namespace {

constexpr char kMagic[4] = {'R', 'D', 'C', 'T'};

class ByteWriter {
 public:
  void U8(uint8_t v) { out_.push_back(v); }
  void U16(uint16_t v) {
    U8(static_cast<uint8_t>(v));
    U8(static_cast<uint8_t>(v >> 8));
  }
  void U32(uint32_t v) {
    U16(static_cast<uint16_t>(v));
    U16(static_cast<uint16_t>(v >> 16));
  }
  void F32(float v) { U32(std::bit_cast<uint32_t>(v)); }
  std::vector<uint8_t> Take() { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  uint8_t U8() {
    Need(1);
    return bytes_[pos_++];
  }
  uint16_t U16() {
    const uint16_t lo = U8();
    return static_cast<uint16_t>(lo | (U8() << 8));
  }
  uint32_t U32() {
    const uint32_t lo = U16();
    return lo | (static_cast<uint32_t>(U16()) << 16);
  }
  float F32() { return std::bit_cast<float>(U32()); }
  bool AtEnd() const { return pos_ == bytes_.size(); }
  size_t Remaining() const { return bytes_.size() - pos_; }

 private:
  void Need(size_t n) const {
    if (bytes_.size() - pos_ < n) throw TruncationError("RDCT stream truncated");
  }

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<uint8_t> Serialize(const CompressedImage& c) {
  ByteWriter w;
  for (char ch : kMagic) w.U8(static_cast<uint8_t>(ch));
  w.U8(c.header.version);
  w.U32(c.header.width);
  w.U32(c.header.height);
  w.U8(static_cast<uint8_t>(c.header.mode));
  w.U16(c.header.n);
  w.U16(c.header.angleStepTenths);
  for (const BlockRecord& r : c.records) {
    w.U8(r.angleCode);
    w.U16(static_cast<uint16_t>(r.kept.size()));
    for (const KeptCoefficient& k : r.kept) {
      w.U16(k.index);
      w.F32(k.value);
    }
  }
  return w.Take();
}

CompressedImage Deserialize(std::span<const uint8_t> bytes) {
  if (bytes.size() < sizeof(kMagic) ||
      std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("not an RDCT stream (bad magic)");
  }
  ByteReader r(bytes.subspan(sizeof(kMagic)));
  CompressedImage c;
  c.header.version = r.U8();
  if (c.header.version != kFormatVersion) {
    throw FormatError("unsupported RDCT version");
  }
  c.header.width = r.U32();
  c.header.height = r.U32();
  const uint8_t mode = r.U8();
  if (mode > 3) throw FormatError("unknown RDCT mode");
  c.header.mode = static_cast<CodecMode>(mode);
  c.header.n = r.U16();
  c.header.angleStepTenths = r.U16();
  if (c.header.width == 0 || c.header.height == 0 ||
      c.header.width > (1u << 24) || c.header.height > (1u << 24)) {
    throw FormatError("RDCT image dimensions out of range");
  }

  const size_t count = static_cast<size_t>(c.blocksAcross()) * c.blocksDown();
  // Each record needs at least its angle byte and count field.
  if (r.Remaining() / 3 < count) throw TruncationError("RDCT stream truncated");
  c.records.resize(count);
  for (BlockRecord& rec : c.records) {
    rec.angleCode = r.U8();
    if (rec.angleCode >= 90) throw CorruptionError("angle code out of range");
    const uint16_t kept = r.U16();
    rec.kept.resize(kept);
    for (KeptCoefficient& k : rec.kept) {
      k.index = r.U16();
      k.value = r.F32();
    }
  }
  if (!r.AtEnd()) throw FormatError("trailing bytes after RDCT records");
  ValidateCompressed(c);
  return c;
}

}  // namespace rdct
