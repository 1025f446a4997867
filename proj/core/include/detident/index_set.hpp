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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace detident {

/// Strictly increasing list of 1-based indices. Bounds against a concrete
/// matrix are checked where the set is used.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  /// Sorts first; rejects zeros and duplicates.
  static IndexSet from_unsorted(std::vector<std::size_t> indices);
  /// {1, ..., n}
  static IndexSet all(std::size_t n);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t pos) const { return indices_[pos]; }
  std::size_t sum() const;
  bool contains(std::size_t index) const;
  /// Largest element, 0 for the empty set.
  std::size_t max() const { return indices_.empty() ? 0 : indices_.back(); }

  /// {1..n} minus this set.
  IndexSet complement(std::size_t n) const;

  const std::vector<std::size_t>& values() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);

}  // namespace detident
