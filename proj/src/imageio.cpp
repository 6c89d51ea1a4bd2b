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

#include "rdct/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "rdct/error.hpp"

namespace rdct {

GrayImage::GrayImage(int width, int height, double fill)
    : GrayImage(width, height,
                std::vector<double>(static_cast<size_t>(std::max(width, 0)) *
                                        std::max(height, 0),
                                    fill)) {}

GrayImage::GrayImage(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width < 1 || height < 1) {
    throw ArgumentError("image dimensions must be positive");
  }
  if (samples_.size() != static_cast<size_t>(width) * height) {
    throw ArgumentError("sample count does not match width*height");
  }
}

double GrayImage::clamped(int x, int y) const {
  x = std::clamp(x, 0, width_ - 1);
  y = std::clamp(y, 0, height_ - 1);
  return samples_[static_cast<size_t>(y) * width_ + x];
}

bool GrayImage::InRange() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](double v) { return v >= 0.0 && v <= 255.0; });
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  void SkipWhitespaceAndComments() {
    while (pos_ < bytes_.size()) {
      const uint8_t c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long ReadInteger(const char* what) {
    SkipWhitespaceAndComments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (1L << 30)) {
        throw FormatError(std::string("PGM header: ") + what + " too large");
      }
      ++pos_;
    }
    return value;
  }

  size_t pos() const { return pos_; }
  void Advance(size_t n) { pos_ += n; }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

GrayImage LoadPgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw FormatError("not a binary PGM (missing P5 magic)");
  }
  HeaderReader reader(bytes);
  reader.Advance(2);
  const long width = reader.ReadInteger("width");
  const long height = reader.ReadInteger("height");
  const long maxval = reader.ReadInteger("maxval");
  if (width < 1 || height < 1) throw FormatError("PGM header: zero dimension");
  if (maxval < 1) throw FormatError("PGM header: maxval must be positive");
  if (maxval > 255) {
    throw UnsupportedFormatError("PGM maxval above 255 is not supported");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (reader.pos() >= bytes.size() || !std::isspace(bytes[reader.pos()])) {
    throw FormatError("PGM header: missing separator before raster");
  }
  reader.Advance(1);

  const size_t count = static_cast<size_t>(width) * static_cast<size_t>(height);
  if (bytes.size() - reader.pos() < count) {
    throw TruncationError("PGM raster is shorter than declared");
  }
  std::vector<double> samples(count);
  const auto raster = bytes.subspan(reader.pos(), count);
  for (size_t i = 0; i < count; ++i) {
    if (raster[i] > maxval) throw FormatError("PGM sample exceeds maxval");
    samples[i] = maxval == 255 ? raster[i] : raster[i] * 255.0 / maxval;
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(samples));
}

uint8_t ToByte(double sample) {
  if (!(sample > 0.0)) return 0;  // also maps NaN to 0
  if (sample >= 255.0) return 255;
  return static_cast<uint8_t>(std::lround(sample));
}

std::vector<uint8_t> SavePgm(const GrayImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + image.samples().size());
  for (double v : image.samples()) out.push_back(ToByte(v));
  return out;
}

std::vector<uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed: " + path);
}

GrayImage ReadPgmFile(const std::string& path) {
  return LoadPgm(ReadFileBytes(path));
}

void WritePgmFile(const std::string& path, const GrayImage& image) {
  WriteFileBytes(path, SavePgm(image));
}

BlockGrid Tile(const GrayImage& image) {
  BlockGrid grid;
  grid.originalWidth = image.width();
  grid.originalHeight = image.height();
  grid.blocksAcross = BlocksFor(image.width());
  grid.blocksDown = BlocksFor(image.height());
  grid.blocks.reserve(static_cast<size_t>(grid.blocksAcross) * grid.blocksDown);
  for (int by = 0; by < grid.blocksDown; ++by) {
    for (int bx = 0; bx < grid.blocksAcross; ++bx) {
      PixelBlock block(kBlockSide);
      for (int r = 0; r < kBlockSide; ++r) {
        for (int c = 0; c < kBlockSide; ++c) {
          block.at(r, c) =
              image.clamped(bx * kBlockSide + c, by * kBlockSide + r);
        }
      }
      grid.blocks.push_back(std::move(block));
    }
  }
  return grid;
}

GrayImage Untile(const BlockGrid& grid) {
  if (grid.blocks.size() !=
      static_cast<size_t>(grid.blocksAcross) * grid.blocksDown) {
    throw ArgumentError("block count does not match grid dimensions");
  }
  if (BlocksFor(grid.originalWidth) != grid.blocksAcross ||
      BlocksFor(grid.originalHeight) != grid.blocksDown) {
    throw ArgumentError("original dimensions inconsistent with block grid");
  }
  GrayImage image(grid.originalWidth, grid.originalHeight);
  for (int y = 0; y < grid.originalHeight; ++y) {
    for (int x = 0; x < grid.originalWidth; ++x) {
      const auto& block =
          grid.blocks[static_cast<size_t>(y / kBlockSide) * grid.blocksAcross +
                      x / kBlockSide];
      if (block.side() != kBlockSide) {
        throw ArgumentError("untile expects 8x8 blocks");
      }
      image.at(x, y) = block.at(y % kBlockSide, x % kBlockSide);
    }
  }
  return image;
}

}  // namespace rdct
