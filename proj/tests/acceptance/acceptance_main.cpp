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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance [--angle-step D] [--threads T]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rdct/bench.hpp"
#include "rdct/codec.hpp"
#include "rdct/error.hpp"
#include "rdct/geometry.hpp"
#include "rdct/kernels.hpp"
#include "rdct/parallel.hpp"
#include "rdct/transform.hpp"

namespace {

using namespace rdct;

const std::vector<int> kSweepN = {1, 2, 4, 8, 16, 32};

int g_failures = 0;

void Report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

// Brute-force double sum, then orthonormal scale factors.
CoefficientGrid NaiveDct(const PixelBlock& block) {
  const int n = block.side();
  CoefficientGrid out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          sum += block.at(r, c) * std::cos(std::numbers::pi / n * (r + 0.5) * i) *
                 std::cos(std::numbers::pi / n * (c + 0.5) * j);
        }
      }
      out.at(i, j) = std::sqrt((i == 0 ? 1.0 : 2.0) / n) *
                     std::sqrt((j == 0 ? 1.0 : 2.0) / n) * sum;
    }
  }
  return out;
}

void CriterionExactness() {
  std::mt19937 rng(20260101);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  double round_trip = 0.0, oracle = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    PixelBlock b(8);
    for (double& v : b.values()) v = dist(rng);
    const CoefficientGrid c = Dct2(b);
    const PixelBlock back = Idct2(c);
    const CoefficientGrid ref = NaiveDct(b);
    for (size_t i = 0; i < 64; ++i) {
      round_trip = std::max(round_trip, std::abs(back[i] - b[i]));
      oracle = std::max(oracle, std::abs(c[i] - ref[i]));
    }
  }
  Report(1, "DCT exactness (200 random 8x8 blocks)",
         round_trip <= 1e-9 && oracle <= 1e-9,
         Fmt("max |idct(dct(B))-B| = %.3g, max |dct-naive| = %.3g, tol 1e-9",
             round_trip, oracle));
}

int Significant(const CoefficientGrid& g) {
  int count = 0;
  for (double v : g.values()) count += std::abs(v) > 1e-9;
  return count;
}

void CriterionStepEdge() {
  const int at0 = Significant(StepEdgeDemo(0.0).coeffs);
  const int at45 = Significant(StepEdgeDemo(45.0).coeffs);
  const int at90 = Significant(StepEdgeDemo(90.0).coeffs);
  Report(2, "step-edge compaction", at0 <= 8 && at90 <= 8 && at45 > at0 && at45 > at90,
         Fmt("significant coefficients: 0deg=%.0f 45deg=%.0f 90deg=%.0f", at0, at45, at90));
}

struct Sweeps {
  std::map<std::pair<CodecMode, int>, double> natural;
  std::map<std::pair<CodecMode, int>, double> synthetic;
};

std::map<std::pair<CodecMode, int>, double> Measure(const GrayImage& image,
                                                     const std::vector<CodecMode>& modes,
                                                     const std::vector<int>& ns,
                                                     int step, int threads) {
  SweepConfig cfg;
  cfg.modes = modes;
  cfg.nValues = ns;
  cfg.angleStepDeg = step;
  std::map<std::pair<CodecMode, int>, double> out;
  for (const RdPoint& p : RunSweep(image, cfg, threads)) out[{p.mode, p.n}] = p.psnrDb;
  return out;
}

void CriterionDominance(const Sweeps& s, int step) {
  bool pass = true;
  std::string detail;
  for (const auto* table : {&s.natural, &s.synthetic}) {
    detail += table == &s.natural ? "natural:" : " synthetic:";
    for (int n : kSweepN) {
      const double rot = table->at({CodecMode::kRotatedConstRate, n});
      const double std_db = table->at({CodecMode::kStandardDct, n});
      pass = pass && rot >= std_db;
      detail += Fmt(" n=%.0f %+.3f", n, rot - std_db);
    }
  }
  Report(3, Fmt("dominance PSNR(rot-rate) >= PSNR(std), %.0f-degree grid", step), pass,
         detail + " dB");
}

void CriterionLowRate(const Sweeps& s) {
  auto gain = [](const auto& t, int n) {
    return t.at({CodecMode::kRotatedConstRate, n}) - t.at({CodecMode::kStandardDct, n});
  };
  const double syn2 = gain(s.synthetic, 2), syn4 = gain(s.synthetic, 4);
  const double nat2 = gain(s.natural, 2), nat4 = gain(s.natural, 4);
  Report(4, "low-rate improvement",
         syn2 >= 1.0 && syn4 >= 1.0 && nat2 >= 0.2 && nat4 >= 0.2,
         Fmt("synthetic n=2 %+.3f n=4 %+.3f (>= 1.0); natural n=2 %+.3f n=4 %+.3f (>= 0.2) dB",
             syn2, syn4, nat2, nat4));
}

void CriterionTrend(const Sweeps& s) {
  auto gain = [&](int n) {
    return s.natural.at({CodecMode::kRotatedConstRate, n}) -
           s.natural.at({CodecMode::kStandardDct, n});
  };
  Report(5, "diminishing advantage", gain(32) <= gain(2),
         Fmt("gain n=32 %+.4f <= gain n=2 %+.4f dB", gain(32), gain(2)));
}

void CriterionStrategies(const Sweeps& s) {
  bool pass = true;
  std::string detail;
  for (int n : {2, 4}) {
    const double diff = std::abs(s.natural.at({CodecMode::kRotatedConstRate, n}) -
                                 s.natural.at({CodecMode::kRotatedConstSize8, n}));
    pass = pass && diff <= 1.0;
    detail += Fmt("n=%.0f |rate-size8| = %.3f dB; ", n, diff);
  }
  Report(6, "constant rate vs constant size", pass, detail + "tol 1.0 dB");
}

void CriterionSizeFormula() {
  const int s0 = ExtendedSide(0.0);
  const int s45 = ExtendedSide(45.0);
  const double step = SamplingStep(RotationStrategy::ConstantBlockSize(8), 45.0);
  const double reduction = 1.0 - 1.0 / step;
  const double expected = 1.0 - 8.0 / (8.0 * (std::cos(std::numbers::pi / 4) +
                                              std::sin(std::numbers::pi / 4)));
  Report(7, "extended-size contract",
         s0 == 8 && s45 == 12 && std::abs(reduction - 0.293) <= 0.001 &&
             std::abs(reduction - expected) <= 1e-12,
         Fmt("side(0)=%.0f side(45)=%.0f, size-8 sampling loss at 45deg = %.4f%%", s0, s45,
             reduction * 100.0));
}

void CriterionHistogram() {
  bool pass = true;
  std::string detail;
  for (int alpha : {0, 15, 30, 45, 60, 75}) {
    const double t = alpha * std::numbers::pi / 180.0;
    GrayImage ramp(32, 32);
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) ramp.at(x, y) = 60 + 2.5 * (x * std::cos(t) + y * std::sin(t));
    }
    const int got = EstimateAngleHistogram(BlockContext{ramp, 1, 1});
    pass = pass && std::abs(got - alpha) <= 1;
    detail += Fmt("%.0f->%.0f ", alpha, got);
  }
  Report(8, "histogram estimator on ramps (+-1 bin)", pass, detail);
}

template <typename E>
bool Throws(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

void CriterionBitstream() {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 48), mode(0, 3), pixel(0, 255);
  int exact = 0;
  for (int trial = 0; trial < 50; ++trial) {
    GrayImage image(dim(rng), dim(rng));
    for (double& v : image.samples()) v = pixel(rng);
    CodecConfig cfg;
    cfg.mode = static_cast<CodecMode>(mode(rng));
    cfg.n = std::uniform_int_distribution<int>(0, MaxCoefficients(cfg.mode))(rng);
    cfg.angleStepDeg = std::uniform_int_distribution<int>(5, 45)(rng);
    const CompressedImage c = Encode(image, cfg);
    const auto bytes = Serialize(c);
    const CompressedImage back = Deserialize(bytes);
    exact += back == c && Serialize(back) == bytes;
  }
  CodecConfig cfg;
  cfg.mode = CodecMode::kRotatedConstRate;
  cfg.n = 3;
  const auto good = Serialize(Encode(GrayImage(16, 16, 90.0), cfg));
  auto magic = good;
  magic[1] = 'X';
  auto angle = good;
  angle[18] = 90;
  const bool magic_ok = Throws<FormatError>([&] { Deserialize(magic); });
  const bool trunc_ok =
      Throws<TruncationError>([&] { Deserialize(std::span(good).first(good.size() - 2)); });
  const bool angle_ok = Throws<CorruptionError>([&] { Deserialize(angle); });
  Report(9, "bitstream round trip and errors",
         exact == 50 && magic_ok && trunc_ok && angle_ok,
         Fmt("%.0f/50 byte-exact; magic->FormatError %.0f, truncation->TruncationError %.0f, "
             "angle>=90->CorruptionError %.0f",
             exact, magic_ok, trunc_ok, angle_ok));
}

void CriterionDeterminism(const GrayImage& natural) {
  GrayImage crop(128, 128);
  for (int y = 0; y < 128; ++y) {
    for (int x = 0; x < 128; ++x) crop.at(x, y) = natural.at(192 + x, 160 + y);
  }
  CodecConfig cfg;
  cfg.mode = CodecMode::kRotatedConstRate;
  cfg.n = 4;
  const auto ref = Serialize(Encode(crop, cfg, 1));
  bool encode_ok = Serialize(Encode(crop, cfg, 1)) == ref;
  for (int threads : {2, 4, 7}) encode_ok = encode_ok && Serialize(Encode(crop, cfg, threads)) == ref;
  const kernels::Isa saved = kernels::ActiveIsa();
  for (kernels::Isa isa : kernels::SupportedIsas()) {
    kernels::SetIsa(isa);
    encode_ok = encode_ok && Serialize(Encode(crop, cfg, 3)) == ref;
  }
  kernels::SetIsa(saved);

  SweepConfig sweep;
  sweep.modes = {CodecMode::kStandardDct, CodecMode::kRotatedConstRate,
                 CodecMode::kRotatedConstSize8};
  sweep.nValues = {2, 4};
  sweep.angleStepDeg = 5;
  const std::string csv = EmitCsv(RunSweep(crop, sweep, 1));
  bool sweep_ok = EmitCsv(RunSweep(crop, sweep, 1)) == csv;
  for (int threads : {3, 8}) sweep_ok = sweep_ok && EmitCsv(RunSweep(crop, sweep, threads)) == csv;
  Report(10, "determinism across runs, --threads and ISAs", encode_ok && sweep_ok,
         Fmt("encode identical %.0f, sweep CSV identical %.0f", encode_ok, sweep_ok));
}

}  // namespace

int main(int argc, char** argv) {
  int step = 1;
  int threads = DefaultThreads();
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--angle-step") == 0) step = std::atoi(argv[i + 1]);
    if (std::strcmp(argv[i], "--threads") == 0) threads = std::atoi(argv[i + 1]);
  }
  const auto start = std::chrono::steady_clock::now();
  std::printf("acceptance: angle grid %d deg, %d thread(s), kernels %s\n", step, threads,
              std::string(kernels::IsaName(kernels::ActiveIsa())).c_str());

  CriterionExactness();
  CriterionStepEdge();

  const GrayImage natural = ReadPgmFile(std::string(RDCT_DATA_DIR) + "/camera.pgm");
  const GrayImage synthetic = SyntheticStripes(512, 512, 45.0, 24.0);
  Sweeps sweeps;
  sweeps.natural = Measure(natural, {CodecMode::kStandardDct, CodecMode::kRotatedConstRate},
                           kSweepN, step, threads);
  for (const auto& [key, value] :
       Measure(natural, {CodecMode::kRotatedConstSize8}, {2, 4}, step, threads)) {
    sweeps.natural[key] = value;
  }
  sweeps.synthetic = Measure(synthetic,
                             {CodecMode::kStandardDct, CodecMode::kRotatedConstRate},
                             kSweepN, step, threads);

  CriterionDominance(sweeps, step);
  CriterionLowRate(sweeps);
  CriterionTrend(sweeps);
  CriterionStrategies(sweeps);
  CriterionSizeFormula();
  CriterionHistogram();
  CriterionBitstream();
  CriterionDeterminism(natural);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance: %d failure(s), %.1f s\n", g_failures, seconds);
  return g_failures == 0 ? 0 : 1;
}
