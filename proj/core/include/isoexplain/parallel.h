/*
 * Copyright 2026 The isoexplain Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOEXPLAIN_PARALLEL_H_
#define ISOEXPLAIN_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace isoexplain {

// Number of workers used when a caller asks for `requested` threads; 0 means
// "all hardware threads".
int ResolveThreads(int requested);

// Calls body(i) for every i in [0, n) using up to `threads` workers. Items
// are claimed dynamically; callers must write results into per-index slots
// so the output never depends on scheduling. The first exception thrown by
// a body is rethrown on the calling thread after all workers stop.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& body);

}  // namespace isoexplain

#endif  // ISOEXPLAIN_PARALLEL_H_
