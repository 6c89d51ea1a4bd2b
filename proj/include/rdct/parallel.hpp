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

#ifndef RDCT_PARALLEL_HPP_
#define RDCT_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace rdct {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Callers write
// results by index, so output never depends on scheduling. The first
// exception thrown by any job is rethrown on the calling thread.
void ParallelFor(size_t count, int threads,
                 const std::function<void(size_t)>& fn);

// hardware_concurrency with a floor of 1.
int DefaultThreads();

}  // namespace rdct

#endif  // RDCT_PARALLEL_HPP_
