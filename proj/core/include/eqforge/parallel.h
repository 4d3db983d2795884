// Copyright 2026 The eqforge Authors
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

#ifndef EQFORGE_PARALLEL_H_
#define EQFORGE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace eqforge {

// EQFORGE_THREADS when set to a positive integer, otherwise the hardware
// concurrency (at least one).
int WorkerCount();

// Splits [0, count) into contiguous chunks and runs body(begin, end) on each
// from its own thread. Exceptions propagate after all workers join.
void ParallelFor(int64_t count,
                 const std::function<void(int64_t, int64_t)>& body,
                 int workers = WorkerCount());

}  // namespace eqforge

#endif  // EQFORGE_PARALLEL_H_
