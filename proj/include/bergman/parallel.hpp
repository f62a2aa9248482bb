// Copyright 2026 The Bergman Kernels Authors
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

#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace bergman {

// Worker count: BK_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int worker_count();

// Runs body(block) for every block in [0, blocks) on up to worker_count()
// threads. Blocks are claimed dynamically, so callers must write results into
// per-block slots and combine them in block order to stay deterministic. The
// first exception thrown by any block is rethrown after all workers join.
void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body);

}  // namespace bergman
