// Copyright 2026 The specmode Authors
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

#ifndef SPECMODE_PARALLEL_HPP
#define SPECMODE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace specmode {

/// Worker count: SPECMODE_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency(). `requested` > 0 overrides both but is
/// still capped by SPECMODE_THREADS.
unsigned worker_count(unsigned requested = 0);

/// Runs body(chunk) for every chunk in [0, chunks) on up to `workers`
/// threads. Chunks are independent; callers store per-chunk results and
/// combine them in chunk order, so output does not depend on scheduling.
/// The first exception thrown by any chunk is rethrown.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body,
                     unsigned workers = 0);

}  // namespace specmode

#endif  // SPECMODE_PARALLEL_HPP
