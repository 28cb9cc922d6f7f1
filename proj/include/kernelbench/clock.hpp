// Copyright 2026 The kernelbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <vector>

namespace kernelbench {

using Clock = std::chrono::steady_clock;
using Timestamp = Clock::time_point;

static_assert(Clock::is_steady);
static_assert(std::ratio_less_equal_v<Clock::period, std::micro>,
              "frame timing needs at least microsecond resolution");

inline Timestamp now() noexcept { return Clock::now(); }

/// Milliseconds between two timestamps. Exact for any whole number of
/// clock ticks below 2^53.
inline double elapsed_ms(Timestamp from, Timestamp to) noexcept {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

/// Reads `n` consecutive timestamps and returns the median of the strictly
/// positive deltas, in milliseconds (0 if the clock never advanced).
inline double clock_resolution_ms(std::size_t n = 1000) {
  std::vector<Timestamp> reads(n);
  for (auto& t : reads) t = now();
  std::vector<double> deltas;
  for (std::size_t i = 1; i < reads.size(); ++i) {
    if (reads[i] > reads[i - 1]) deltas.push_back(elapsed_ms(reads[i - 1], reads[i]));
  }
  if (deltas.empty()) return 0.0;
  const auto mid = deltas.begin() + static_cast<std::ptrdiff_t>(deltas.size() / 2);
  std::nth_element(deltas.begin(), mid, deltas.end());
  return *mid;
}

}  // namespace kernelbench
