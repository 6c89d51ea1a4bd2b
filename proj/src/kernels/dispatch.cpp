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

#include "rdct/kernels.hpp"

#include <atomic>

#include "rdct/error.hpp"

namespace rdct::kernels {
namespace {

Isa DetectIsa() {
  if (avx2::Available()) return Isa::kAvx2;
  if (neon::Available()) return Isa::kNeon;
  return Isa::kScalar;
}

std::atomic<Isa>& ActiveSlot() {
  static std::atomic<Isa> slot{DetectIsa()};
  return slot;
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> SupportedIsas() {
  std::vector<Isa> isas{Isa::kScalar};
  if (avx2::Available()) isas.push_back(Isa::kAvx2);
  if (neon::Available()) isas.push_back(Isa::kNeon);
  return isas;
}

Isa ActiveIsa() { return ActiveSlot().load(std::memory_order_relaxed); }

void SetIsa(Isa isa) {
  if ((isa == Isa::kAvx2 && !avx2::Available()) ||
      (isa == Isa::kNeon && !neon::Available())) {
    throw ArgumentError("instruction set not available on this machine");
  }
  ActiveSlot().store(isa, std::memory_order_relaxed);
}

void MatMul(std::span<const double> a, std::span<const double> b,
            std::span<double> out, int n) {
  const size_t count = static_cast<size_t>(n) * n;
  if (n < 1 || n > 16 || a.size() < count || b.size() < count ||
      out.size() < count) {
    throw ArgumentError("MatMul: bad matrix dimensions");
  }
  switch (ActiveIsa()) {
    case Isa::kAvx2:
      avx2::MatMul(a.data(), b.data(), out.data(), n);
      return;
    case Isa::kNeon:
      neon::MatMul(a.data(), b.data(), out.data(), n);
      return;
    case Isa::kScalar:
      break;
  }
  scalar::MatMul(a.data(), b.data(), out.data(), n);
}

}  // namespace rdct::kernels
