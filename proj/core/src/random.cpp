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

#include "detident/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "detident/errors.hpp"

namespace detident {

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t SeededStream::splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SeededStream::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  // 2^64 mod span, computed without overflow.
  const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  const std::uint64_t limit = 0 - rem;  // 2^64 - rem, with 0 meaning "no rejection"
  std::uint64_t x = next();
  while (limit != 0 && x >= limit) x = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

Matrix SeededStream::integer_matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.emplace_back(uniform(-bound, bound));
  return Matrix(rows, cols, std::move(entries));
}

Column SeededStream::integer_column(std::size_t length, std::int64_t bound) {
  Column out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) out.emplace_back(uniform(-bound, bound));
  return out;
}

AntisymmetricMatrix SeededStream::antisymmetric(std::size_t order, std::int64_t bound) {
  std::vector<Scalar> upper;
  const std::size_t count = order * (order == 0 ? 0 : order - 1) / 2;
  upper.reserve(count);
  for (std::size_t k = 0; k < count; ++k) upper.emplace_back(uniform(-bound, bound));
  return AntisymmetricMatrix::from_upper(order, std::move(upper));
}

IndexSet SeededStream::subset(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("subset: k > n");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  for (std::size_t p = 0; p < k; ++p) {
    const auto q = static_cast<std::size_t>(
        uniform(static_cast<std::int64_t>(p), static_cast<std::int64_t>(n) - 1));
    std::swap(pool[p], pool[q]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return IndexSet(std::move(pool));
}

}  // namespace detident
