// Copyright 2026 The Stylolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STYLOLAB_COMMON_PARALLEL_H_
#define STYLOLAB_COMMON_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace stylolab {

// Worker count from STYLOLAB_THREADS, else the hardware concurrency.
// Always >= 1.
int DefaultWorkerCount();

// Calls fn(i) for every i in [0, n) using up to `workers` threads.
// Each index is processed exactly once; callers write results by index, so
// output order never depends on scheduling. The first exception thrown by
// any call is rethrown after all workers have stopped.
void ParallelFor(std::size_t n, int workers,
                 const std::function<void(std::size_t)>& fn);

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_PARALLEL_H_
