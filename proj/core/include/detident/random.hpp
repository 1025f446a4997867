/*
 * Copyright 2026 The detident Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "detident/matrix.hpp"
#include "detident/pfaffian.hpp"

namespace detident {

/// Reproducible integer stream used by the fuzz harness and the sampled
/// sweeps.
///
/// Stream (seed, t) is std::mt19937_64 seeded with
///   splitmix64(seed ^ splitmix64(t)),
/// where splitmix64(x) is one SplitMix64 step from state x:
///   z = x + 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z = z ^ (z >> 31)
/// A draw in [lo, hi] takes 64-bit outputs x until x < limit, with
/// span = hi - lo + 1 and limit = 2^64 - (2^64 mod span), and returns
/// lo + (x mod span).
class SeededStream {
 public:
  SeededStream(std::uint64_t seed, std::uint64_t stream);

  static std::uint64_t splitmix64(std::uint64_t x);

  std::uint64_t next() { return engine_(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// rows x cols matrix, entries uniform in [-bound, bound], row-major draws.
  Matrix integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound);
  Column integer_column(std::size_t length, std::int64_t bound);
  /// Strict upper triangle drawn row-major.
  AntisymmetricMatrix antisymmetric(std::size_t order, std::int64_t bound);
  /// Uniform k-subset of {1..n} (partial Fisher-Yates, then sorted).
  IndexSet subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace detident
