// Copyright 2026 The stforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace stforge {

// Worker count: STFORGE_THREADS env var when set, hardware concurrency
// otherwise, always >= 1.
size_t num_threads();

// Runs fn(i) for i in [0, n) on the shared pool and waits for completion.
// Tasks write to disjoint outputs; no reduction happens inside the pool, so
// results are bitwise independent of the worker count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

// Like parallel_for but hands each worker a contiguous [begin, end) block.
void parallel_blocks(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace stforge
