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

#ifndef RDCT_IMAGEIO_HPP_
#define RDCT_IMAGEIO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdct/grid.hpp"

namespace rdct {

// Grayscale image with real-valued samples. Loaded and decoded images hold
// values in [0, 255]; intermediate images may stray outside and are clamped
// when stored.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);
  GrayImage(int width, int height, std::vector<double> samples);

  int width() const { return width_; }
  int height() const { return height_; }

  double at(int x, int y) const {
    return samples_[static_cast<size_t>(y) * width_ + x];
  }
  double& at(int x, int y) {
    return samples_[static_cast<size_t>(y) * width_ + x];
  }
  // Clamp-to-edge access for arbitrary integer coordinates.
  double clamped(int x, int y) const;

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  // True when every sample lies in [0, 255].
  bool InRange() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

struct BlockGrid {
  int blocksAcross = 0;
  int blocksDown = 0;
  std::vector<PixelBlock> blocks;  // row-major block order
  int originalWidth = 0;
  int originalHeight = 0;
};

// Binary PGM (P5), maxval <= 255. Comment lines are accepted in the header.
GrayImage LoadPgm(std::span<const uint8_t> bytes);
// Samples are rounded to nearest and clamped to [0, 255].
std::vector<uint8_t> SavePgm(const GrayImage& image);

GrayImage ReadPgmFile(const std::string& path);
void WritePgmFile(const std::string& path, const GrayImage& image);

std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const uint8_t> bytes);

uint8_t ToByte(double sample);

// Pads by edge replication to multiples of 8 and cuts into 8x8 blocks.
BlockGrid Tile(const GrayImage& image);
// Inverse of Tile; padding is cropped away.
GrayImage Untile(const BlockGrid& grid);

inline int BlocksFor(int pixels) { return (pixels + kBlockSide - 1) / kBlockSide; }

}  // namespace rdct

#endif  // RDCT_IMAGEIO_HPP_
