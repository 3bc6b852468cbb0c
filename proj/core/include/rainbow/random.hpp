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

#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace rainbow {

// Seeded RNG with self-contained bounded draws and shuffling. mt19937_64 is
// fully specified by the standard, so all generated instances are a function
// of (parameters, seed) alone; std::uniform_int_distribution and std::shuffle
// are not portable that way and are avoided.
class RandomEngine {
 public:
  explicit RandomEngine(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). Rejection sampling, no modulo bias.
  int below(int n) {
    assert(n > 0);
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return static_cast<int>(r % bound);
  }

  // Uniform in [lo, hi], inclusive.
  int in_range(int lo, int hi) {
    assert(lo <= hi);
    return lo + below(hi - lo + 1);
  }

  bool chance(int numerator, int denominator) {
    return below(denominator) < numerator;
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
      std::swap(values[static_cast<std::size_t>(i)],
                values[static_cast<std::size_t>(below(i + 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rainbow
