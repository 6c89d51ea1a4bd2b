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

// rdct: command-line front end for the rotated-block DCT codec.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdct/bench.hpp"
#include "rdct/codec.hpp"
#include "rdct/error.hpp"
#include "rdct/imageio.hpp"
#include "rdct/parallel.hpp"
#include "rdct/transform.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int WholeDegrees(double step) {
  if (step != std::floor(step)) {
    throw rdct::ArgumentError("--angle-step must be a whole number of degrees");
  }
  return static_cast<int>(step);
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  rdct::WriteFileBytes(path, std::span(reinterpret_cast<const uint8_t*>(text.data()),
                                       text.size()));
}

void PrintDemo(std::ostream& out) {
  for (double angle : {0.0, 45.0, 90.0}) {
    const rdct::StepEdge edge = rdct::StepEdgeDemo(angle);
    char line[32];
    out << "step edge at " << angle << " degrees\n";
    for (int r = 0; r < rdct::kBlockSide; ++r) {
      for (int c = 0; c < rdct::kBlockSide; ++c) {
        std::snprintf(line, sizeof(line), "%7.1f", edge.block.at(r, c));
        out << line;
      }
      out << '\n';
    }
    int significant = 0;
    out << "log|DCT| (. = zero)\n";
    for (int r = 0; r < rdct::kBlockSide; ++r) {
      for (int c = 0; c < rdct::kBlockSide; ++c) {
        const double mag = std::abs(edge.coeffs.at(r, c));
        if (mag > 1e-9) {
          ++significant;
          std::snprintf(line, sizeof(line), "%7.2f", std::log(mag));
        } else {
          std::snprintf(line, sizeof(line), "%7s", ".");
        }
        out << line;
      }
      out << '\n';
    }
    out << "significant coefficients: " << significant << "\n\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotated-block DCT codec and rate-distortion harness"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (output is independent of this)")
      ->check(CLI::Range(1, 256));

  std::string in_path, out_path, ref_path, test_path;
  std::string mode_name = "std";
  std::string estimator_name = "exhaustive";
  double angle_step = 1.0;
  int n = 0;
  int smooth_width = 5;
  std::vector<int> n_values;
  std::vector<std::string> mode_names;

  auto add_codec_flags = [&](CLI::App* cmd, bool n_required) {
    cmd->add_option("--mode", mode_name, "std | rot-rate | rot-size8 | rot-size12")
        ->capture_default_str();
    auto* n_opt = cmd->add_option("--n", n, "Coefficients kept per block");
    if (n_required) n_opt->required();
    cmd->add_option("--angle-step", angle_step, "Angle grid spacing in degrees")
        ->capture_default_str();
    cmd->add_option("--estimator", estimator_name, "exhaustive | histogram")
        ->capture_default_str();
    cmd->add_option("--smooth-width", smooth_width, "Histogram smoothing width (odd)")
        ->capture_default_str();
  };

  auto* encode = app.add_subcommand("encode", "Compress a PGM image to an RDCT stream");
  encode->add_option("--in", in_path, "Input PGM")->required();
  encode->add_option("--out", out_path, "Output RDCT stream")->required();
  add_codec_flags(encode, true);

  auto* decode = app.add_subcommand("decode", "Decompress an RDCT stream to PGM");
  decode->add_option("--in", in_path, "Input RDCT stream")->required();
  decode->add_option("--out", out_path, "Output PGM")->required();

  auto* sweep = app.add_subcommand("sweep", "PSNR per coefficient sweep as CSV");
  sweep->add_option("--in", in_path, "Input PGM")->required();
  sweep->add_option("--out", out_path, "Output CSV (default: stdout)");
  sweep->add_option("--modes", mode_names, "Comma-separated modes")
      ->delimiter(',')
      ->default_str("std,rot-rate,rot-size8");
  sweep->add_option("--n", n_values, "Comma-separated n values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--angle-step", angle_step, "Angle grid spacing in degrees")
      ->capture_default_str();
  sweep->add_option("--estimator", estimator_name, "exhaustive | histogram")
      ->capture_default_str();
  sweep->add_option("--smooth-width", smooth_width, "Histogram smoothing width (odd)")
      ->capture_default_str();

  auto* anglemap = app.add_subcommand("anglemap", "Per-block angle map as PGM");
  anglemap->add_option("--in", in_path, "Input PGM")->required();
  anglemap->add_option("--out", out_path, "Output PGM")->required();
  add_codec_flags(anglemap, false);

  auto* demo = app.add_subcommand("demo", "Step-edge compaction at 0/45/90 degrees");

  auto* psnr = app.add_subcommand("psnr", "PSNR between two PGM images");
  psnr->add_option("--ref", ref_path, "Reference PGM")->required();
  psnr->add_option("--test", test_path, "Test PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (encode->parsed() || anglemap->parsed()) {
      rdct::CodecConfig cfg;
      cfg.mode = rdct::ParseMode(mode_name);
      cfg.n = n;
      cfg.angleStepDeg = WholeDegrees(angle_step);
      cfg.estimator = rdct::ParseEstimator(estimator_name);
      cfg.smoothWidth = smooth_width;
      if (anglemap->parsed()) {
        if (anglemap->count("--mode") == 0) cfg.mode = rdct::CodecMode::kRotatedConstRate;
        if (anglemap->count("--n") == 0) cfg.n = 4;
      }
      cfg.Validate();
      const rdct::GrayImage image = rdct::ReadPgmFile(in_path);
      if (encode->parsed()) {
        rdct::WriteFileBytes(out_path,
                             rdct::Serialize(rdct::Encode(image, cfg, threads)));
      } else {
        rdct::WritePgmFile(out_path, rdct::AngleMap(image, cfg, threads));
      }
    } else if (decode->parsed()) {
      const auto compressed = rdct::Deserialize(rdct::ReadFileBytes(in_path));
      rdct::WritePgmFile(out_path, rdct::Decode(compressed, threads));
    } else if (sweep->parsed()) {
      rdct::SweepConfig cfg;
      if (mode_names.empty()) mode_names = {"std", "rot-rate", "rot-size8"};
      for (const auto& name : mode_names) cfg.modes.push_back(rdct::ParseMode(name));
      cfg.nValues = n_values;
      cfg.angleStepDeg = WholeDegrees(angle_step);
      cfg.estimator = rdct::ParseEstimator(estimator_name);
      cfg.smoothWidth = smooth_width;
      cfg.Validate();
      for (rdct::CodecMode m : cfg.modes) {
        for (int v : cfg.nValues) {
          rdct::CodecConfig c;
          c.mode = m;
          c.n = v;
          c.angleStepDeg = cfg.angleStepDeg;
          c.smoothWidth = cfg.smoothWidth;
          c.Validate();
        }
      }
      const rdct::GrayImage image = rdct::ReadPgmFile(in_path);
      WriteText(out_path, rdct::EmitCsv(rdct::RunSweep(image, cfg, threads)));
    } else if (demo->parsed()) {
      PrintDemo(std::cout);
    } else if (psnr->parsed()) {
      const double db =
          rdct::Psnr(rdct::ReadPgmFile(ref_path), rdct::ReadPgmFile(test_path));
      if (std::isinf(db)) {
        std::cout << "inf\n";
      } else {
        std::printf("%.4f\n", db);
      }
    }
  } catch (const rdct::ArgumentError& e) {
    std::cerr << "rdct: " << e.what() << '\n';
    return kExitUsage;
  } catch (const rdct::Error& e) {
    std::cerr << "rdct: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
