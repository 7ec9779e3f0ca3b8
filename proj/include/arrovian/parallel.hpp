// Copyright 2026 The Arrovian Agreement Authors
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

#ifndef ARROVIAN_PARALLEL_HPP_
#define ARROVIAN_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace arrovian {

/// Worker cap for sweeps: AAL_MAX_WORKERS when set to a positive integer,
/// otherwise the hardware concurrency.
int max_workers();

/**
 * Runs `body(begin, end, chunk)` over contiguous chunks of [0, count).
 *
 * Chunk c always covers the same index range for a given (count, chunks)
 * pair, so callers that merge per-chunk results in chunk order get output
 * independent of scheduling. The first exception thrown by any chunk is
 * rethrown on the calling thread.
 */
void parallel_chunks(std::size_t count, int chunks,
                     const std::function<void(std::size_t, std::size_t, int)>& body);

}  // namespace arrovian

#endif  // ARROVIAN_PARALLEL_HPP_
