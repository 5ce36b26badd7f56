// Copyright 2026 The srte Authors.
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

#ifndef SRTE_PARALLEL_H_
#define SRTE_PARALLEL_H_

#include <functional>

namespace srte {

// Worker count: $SRTE_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int DefaultThreadCount();

// Calls body(i) for every i in [0, count) on up to `threads` workers.
// Iterations must be independent; the first exception thrown is rethrown
// after all workers finish.
void ParallelFor(int count, const std::function<void(int)>& body,
                 int threads = DefaultThreadCount());

}  // namespace srte

#endif  // SRTE_PARALLEL_H_
