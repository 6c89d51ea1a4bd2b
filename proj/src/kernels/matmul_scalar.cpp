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

namespace rdct::kernels::scalar {

void MatMul(const double* a, const double* b, double* out, int n) {
  for (int i = 0; i < n; ++i) {
    const double* row = a + i * n;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += row[k] * b[k * n + j];
      out[i * n + j] = acc;
    }
  }
}

}  // namespace rdct::kernels::scalar
