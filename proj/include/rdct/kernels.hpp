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

#ifndef RDCT_KERNELS_HPP_
#define RDCT_KERNELS_HPP_

#include <span>
#include <string_view>
#include <vector>

namespace rdct::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

// Instruction sets usable on this machine, scalar first.
std::vector<Isa> SupportedIsas();
// Best supported ISA; chosen once at startup unless overridden.
Isa ActiveIsa();
// Overrides the dispatch target. Throws ArgumentError if unsupported.
void SetIsa(Isa isa);

// out = a * b for n x n row-major matrices (1 <= n <= 16).
//
// Every variant accumulates each output element as
//   ((0 + a[i,0]*b[0,j]) + a[i,1]*b[1,j]) + ...
// in the same order without fused multiply-add, so results are
// bit-identical across ISAs.
void MatMul(std::span<const double> a, std::span<const double> b,
            std::span<double> out, int n);

namespace scalar {
void MatMul(const double* a, const double* b, double* out, int n);
}
namespace avx2 {
bool Available();
void MatMul(const double* a, const double* b, double* out, int n);
}
namespace neon {
bool Available();
void MatMul(const double* a, const double* b, double* out, int n);
}

}  // namespace rdct::kernels

#endif  // RDCT_KERNELS_HPP_
