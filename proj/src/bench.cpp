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

#include "rdct/bench.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "rdct/error.hpp"
#include "rdct/transform.hpp"

namespace rdct {

double Psnr(const GrayImage& reference, const GrayImage& test) {
  if (reference.width() != test.width() ||
      reference.height() != test.height()) {
    throw ArgumentError("PSNR needs images of equal dimensions");
  }
  const auto a = reference.samples();
  const auto b = test.samples();
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  if (sum == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sum / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

bool RdPoint::infinite() const { return std::isinf(psnrDb); }

void SweepConfig::Validate() const {
  if (nValues.empty()) throw ArgumentError("sweep needs at least one n");
  for (size_t i = 1; i < nValues.size(); ++i) {
    if (nValues[i] <= nValues[i - 1]) {
      throw ArgumentError("sweep n values must be strictly increasing");
    }
  }
  if (modes.empty()) throw ArgumentError("sweep needs at least one mode");
}

RdPoint MeasurePoint(const GrayImage& image, const CodecConfig& cfg,
                     int threads) {
  const CompressedImage compressed = Encode(image, cfg, threads);
  const GrayImage decoded = Decode(compressed, threads);
  size_t kept = 0;
  for (const BlockRecord& r : compressed.records) kept += r.kept.size();
  RdPoint p;
  p.mode = cfg.mode;
  p.n = cfg.n;
  p.coefficientsPerBlock =
      static_cast<double>(kept) / static_cast<double>(compressed.records.size());
  p.psnrDb = Psnr(image, decoded);
  p.bytesTotal = Serialize(compressed).size();
  return p;
}

std::vector<RdPoint> RunSweep(const GrayImage& image, const SweepConfig& cfg,
                              int threads) {
  cfg.Validate();
  std::vector<RdPoint> points;
  for (CodecMode mode : cfg.modes) {
    for (int n : cfg.nValues) {
      CodecConfig codec;
      codec.mode = mode;
      codec.n = n;
      codec.angleStepDeg = cfg.angleStepDeg;
      codec.estimator = cfg.estimator;
      codec.smoothWidth = cfg.smoothWidth;
      points.push_back(MeasurePoint(image, codec, threads));
    }
  }
  return points;
}

std::string EmitCsv(const std::vector<RdPoint>& points) {
  std::string out = "mode,n,coeffs_per_block,psnr_db,bytes\n";
  char buf[160];
  for (const RdPoint& p : points) {
    char psnr[48];
    if (p.infinite()) {
      std::snprintf(psnr, sizeof(psnr), "inf");
    } else {
      std::snprintf(psnr, sizeof(psnr), "%.9f", p.psnrDb);
    }
    std::snprintf(buf, sizeof(buf), "%s,%d,%.9f,%s,%zu\n",
                  std::string(ModeName(p.mode)).c_str(), p.n,
                  p.coefficientsPerBlock, psnr, p.bytesTotal);
    out += buf;
  }
  return out;
}

std::vector<RdPoint> ParseCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "mode,n,coeffs_per_block,psnr_db,bytes") {
    throw FormatError("CSV header mismatch");
  }
  std::vector<RdPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw FormatError("CSV row must have 5 fields");
    RdPoint p;
    try {
      p.mode = ParseMode(fields[0]);
      p.n = std::stoi(fields[1]);
      p.coefficientsPerBlock = std::stod(fields[2]);
      p.psnrDb = fields[3] == "inf" ? std::numeric_limits<double>::infinity()
                                    : std::stod(fields[3]);
      p.bytesTotal = std::stoull(fields[4]);
    } catch (const std::logic_error&) {
      throw FormatError("CSV row has a malformed field: " + line);
    }
    points.push_back(p);
  }
  return points;
}

namespace {

// Fraction of the unit pixel [x, x+1] x [y, y+1] where inside(px, py) holds.
template <typename Inside>
double Coverage(int x, int y, int samples, Inside&& inside) {
  int hits = 0;
  for (int sy = 0; sy < samples; ++sy) {
    for (int sx = 0; sx < samples; ++sx) {
      if (inside(x + (sx + 0.5) / samples, y + (sy + 0.5) / samples)) ++hits;
    }
  }
  return static_cast<double>(hits) / (samples * samples);
}

}  // namespace

StepEdge StepEdgeDemo(double angle_deg) {
  if (!(angle_deg >= 0.0 && angle_deg <= 90.0)) {
    throw ArgumentError("step edge angle must be in [0, 90]");
  }
  const double t = angle_deg * std::numbers::pi / 180.0;
  const double nx = std::cos(t);
  const double ny = std::sin(t);
  const double center = kBlockSide / 2.0;
  PixelBlock block(kBlockSide);
  for (int r = 0; r < kBlockSide; ++r) {
    for (int c = 0; c < kBlockSide; ++c) {
      block.at(r, c) = 255.0 * Coverage(c, r, 32, [&](double px, double py) {
                         return (px - center) * nx + (py - center) * ny > 0.0;
                       });
    }
  }
  CoefficientGrid coeffs = Dct2(block);
  return {std::move(block), std::move(coeffs)};
}

GrayImage SyntheticStripes(int width, int height, double angle_deg,
                           double period, double low, double high) {
  if (!(period > 0.0)) throw ArgumentError("stripe period must be positive");
  const double t = angle_deg * std::numbers::pi / 180.0;
  const double nx = std::cos(t);
  const double ny = std::sin(t);
  GrayImage image(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double cover = Coverage(x, y, 8, [&](double px, double py) {
        const double phase = (px * nx + py * ny) / period;
        return phase - std::floor(phase) < 0.5;
      });
      image.at(x, y) = low + (high - low) * cover;
    }
  }
  return image;
}

GrayImage AngleMap(const GrayImage& image, const CodecConfig& cfg,
                   int threads) {
  EncodeReport report;
  const CompressedImage compressed = Encode(image, cfg, threads, &report);
  GrayImage map(compressed.blocksAcross(), compressed.blocksDown());
  for (size_t i = 0; i < report.decisions.size(); ++i) {
    map.samples()[i] =
        std::round(report.decisions[i].angleDeg * 255.0 / 89.0);
  }
  return map;
}

}  // namespace rdct
