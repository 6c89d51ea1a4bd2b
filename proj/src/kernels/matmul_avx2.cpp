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

#if defined(__x86_64__) || defined(__i386__)
#define RDCT_HAVE_X86 1
#include <immintrin.h>
#endif

namespace rdct::kernels::avx2 {

#if defined(RDCT_HAVE_X86)

bool Available() { return __builtin_cpu_supports("avx2"); }

// Only the ISA extension is enabled here (no "fma"), so mul and add stay
// separately rounded like the scalar reference.
__attribute__((target("avx2"))) void MatMul(const double* a, const double* b,
                                            double* out, int n) {
  const int vec_end = n - n % 4;
  for (int i = 0; i < n; ++i) {
    const double* row = a + i * n;
    for (int j = 0; j < vec_end; j += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (int k = 0; k < n; ++k) {
        const __m256d prod =
            _mm256_mul_pd(_mm256_set1_pd(row[k]), _mm256_loadu_pd(b + k * n + j));
        acc = _mm256_add_pd(acc, prod);
      }
      _mm256_storeu_pd(out + i * n + j, acc);
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

}  // namespace rdct::kernels::avx2
