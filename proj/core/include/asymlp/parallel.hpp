// Copyright 2026 The asymlp Authors
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

#ifndef ASYMLP_PARALLEL_HPP
#define ASYMLP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace asymlp {

/// Number of worker threads used by parallel_for. Defaults to the hardware
/// concurrency; 0 restores the default.
std::size_t thread_count() noexcept;
void set_thread_count(std::size_t n) noexcept;

/// Calls body(i) for i in [0, n), possibly concurrently. Results must be
/// written to per-index slots by the caller so assembly stays ordered. If
/// several calls throw, the exception from the lowest index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace asymlp

#endif  // ASYMLP_PARALLEL_HPP
