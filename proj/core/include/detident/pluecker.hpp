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
#include <span>
#include <vector>

#include "detident/index_set.hpp"
#include "detident/matrix.hpp"
#include "detident/scalar.hpp"

namespace detident {

/// One splitting of the positions {1..2r} into an increasing left r-set and
/// its increasing complement. sign = (-1)^(sum of left).
struct SplitTerm {
  IndexSet left;
  IndexSet right;
  int sign = 1;

  friend bool operator==(const SplitTerm&, const SplitTerm&) = default;
};

/// All C(2r, r) splittings, lexicographic by `left`. Throws DomainError for r == 0.
std::vector<SplitTerm> split_enumeration(std::size_t r);

/// Signed quadratic Plücker sum
///
///   sum over splittings  sign * |M a_left...| * |M a_right...|
///
/// for an n x (n-r) matrix M and 2r column vectors of length n. Signs come
/// from the positions 1..2r inside `vectors`. The global factor
/// (-1)^(n(n+1)/2) of the block Laplace expansion is omitted. The relation
/// says the result is 0; it is returned so callers can check that.
Scalar pluecker_sum(const Matrix& m, std::span<const Column> vectors);

/// |Mab||Mcd| - |Mac||Mbd| + |Mad||Mbc| for an n x (n-2) matrix M.
/// For the same operands, pluecker_sum(M, {a,b,c,d}) == -2 * this value.
Scalar three_term_residual(const Matrix& m, const Column& a, const Column& b, const Column& c,
                           const Column& d);

}  // namespace detident
