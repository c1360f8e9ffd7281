// Copyright 2026 The Authors.
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

#ifndef SARR_PARALLEL_H_
#define SARR_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace sarr {

// SARR_THREADS when it holds a positive integer, else the hardware
// concurrency (at least 1).
int WorkerCount();

// Runs body(i) for every i in [0, count) on up to WorkerCount() threads.
// The first exception thrown by a worker is rethrown on the caller.
void ParallelFor(size_t count, const std::function<void(size_t)>& body);

}  // namespace sarr

#endif  // SARR_PARALLEL_H_
