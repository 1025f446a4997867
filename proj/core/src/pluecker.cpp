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

#include "detident/pluecker.hpp"

#include <string>
#include <unordered_map>

#include "detident/det.hpp"
#include "detident/errors.hpp"

namespace detident {
namespace {

std::uint64_t position_mask(const IndexSet& positions) {
  std::uint64_t mask = 0;
  for (std::size_t p : positions) mask |= std::uint64_t{1} << (p - 1);
  return mask;
}

}  // namespace

std::vector<SplitTerm> split_enumeration(std::size_t r) {
  if (r == 0) throw DomainError("split_enumeration needs r >= 1");
  std::vector<SplitTerm> terms;
  for (auto& left : k_subsets(2 * r, r)) {
    SplitTerm term;
    term.right = left.complement(2 * r);
    term.sign = left.sum() % 2 == 0 ? 1 : -1;
    term.left = std::move(left);
    terms.push_back(std::move(term));
  }
  return terms;
}

Scalar pluecker_sum(const Matrix& m, std::span<const Column> vectors) {
  if (vectors.empty() || vectors.size() % 2 != 0) {
    throw DomainError("pluecker_sum needs an even, nonzero number of vectors; got " +
                      std::to_string(vectors.size()));
  }
  const std::size_t r = vectors.size() / 2;
  if (r > 31) throw DomainError("pluecker_sum supports r <= 31");
  const std::size_t n = m.rows();
  if (n < r || m.cols() + r != n) {
    throw DimensionError("pluecker_sum needs M of shape n x (n-r); got " + std::to_string(n) +
                         "x" + std::to_string(m.cols()) + " with r=" + std::to_string(r));
  }
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionError("pluecker_sum vector length differs from M.rows()");
  }

  // Each r-subset of positions shows up once as a left and once as a right
  // factor, so determinants are cached by position mask.
  std::unordered_map<std::uint64_t, Scalar> dets;
  auto det_of = [&](const IndexSet& positions) -> const Scalar& {
    const std::uint64_t key = position_mask(positions);
    auto it = dets.find(key);
    if (it != dets.end()) return it->second;
    std::vector<Column> chosen;
    chosen.reserve(positions.size());
    for (std::size_t p : positions) chosen.push_back(vectors[p - 1]);
    return dets.emplace(key, det_bareiss(augment_columns(m, chosen))).first->second;
  };

  Scalar total;
  for (const auto& term : split_enumeration(r)) {
    const Scalar& left = det_of(term.left);
    if (left.is_zero()) continue;
    const Scalar product = left * det_of(term.right);
    if (term.sign > 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

Scalar three_term_residual(const Matrix& m, const Column& a, const Column& b, const Column& c,
                           const Column& d) {
  const std::size_t n = m.rows();
  if (n < 2 || m.cols() + 2 != n) {
    throw DimensionError("three_term_residual needs M of shape n x (n-2) with n >= 2");
  }
  for (const Column* v : {&a, &b, &c, &d}) {
    if (v->size() != n) throw DimensionError("three_term_residual vector length differs from n");
  }
  auto det2 = [&](const Column& x, const Column& y) {
    const Column pair[] = {x, y};
    return det_bareiss(augment_columns(m, pair));
  };
  return det2(a, b) * det2(c, d) - det2(a, c) * det2(b, d) + det2(a, d) * det2(b, c);
}

}  // namespace detident
