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

#include "detident/index_set.hpp"

#include <algorithm>
#include <numeric>

#include "detident/errors.hpp"

namespace detident {
namespace {

void check_strictly_increasing(const std::vector<std::size_t>& v) {
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] == 0) throw DomainError("index sets are 1-based; got 0");
    if (p > 0 && v[p] <= v[p - 1]) throw DomainError("index set must be strictly increasing");
  }
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) : indices_(indices) {
  check_strictly_increasing(indices_);
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  check_strictly_increasing(indices_);
}

IndexSet IndexSet::from_unsorted(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  return IndexSet(std::move(indices));
}

IndexSet IndexSet::all(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  IndexSet out;
  out.indices_ = std::move(v);
  return out;
}

std::size_t IndexSet::sum() const {
  return std::accumulate(indices_.begin(), indices_.end(), std::size_t{0});
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSet IndexSet::complement(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    if (p > 0) s += ",";
    s += std::to_string(indices_[p]);
  }
  return s + "}";
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  std::iota(current.begin(), current.end(), std::size_t{1});
  while (true) {
    out.emplace_back(current);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t q = pos; q < k; ++q) current[q] = current[q - 1] + 1;
  }
  return out;
}

}  // namespace detident
