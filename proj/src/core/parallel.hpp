/*
 * Copyright 2026 The hmul Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HMUL_CORE_PARALLEL_HPP
#define HMUL_CORE_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace hmul {

// Worker count: HMUL_THREADS if set (>=1), otherwise hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one per
// worker; callers must write only to disjoint slots so results do not depend
// on scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace hmul

#endif
