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

#if defined(__aarch64__) && defined(__ARM_NEON)
#define RDCT_HAVE_NEON 1
#include <arm_neon.h>
#endif

namespace rdct::kernels::neon {

#if defined(RDCT_HAVE_NEON)

// Advanced SIMD is mandatory on AArch64.
bool Available() { return true; }

void MatMul(const double* a, const double* b, double* out, int n) {
  const int vec_end = n - n % 2;
  for (int i = 0; i < n; ++i) {
    const double* row = a + i * n;
    for (int j = 0; j < vec_end; j += 2) {
      float64x2_t acc = vdupq_n_f64(0.0);
      for (int k = 0; k < n; ++k) {
        const float64x2_t prod =
            vmulq_f64(vdupq_n_f64(row[k]), vld1q_f64(b + k * n + j));
        acc = vaddq_f64(acc, prod);
      }
      vst1q_f64(out + i * n + j, acc);
    }
    for (int j = vec_end; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += row[k] * b[k * n + j];
      out[i * n + j] = acc;
    }
  }
}

#else

bool Available() { return false; }

void MatMul(const double* a, const double* b, double* out, int n) {
  scalar::MatMul(a, b, out, n);
}

#endif

}  // namespace rdct::kernels::neon
