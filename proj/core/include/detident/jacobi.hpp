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
#include <string_view>
#include <utility>
#include <vector>

#include "detident/index_set.hpp"
#include "detident/matrix.hpp"
#include "detident/scalar.hpp"

namespace detident {

// Identities on the minors of a single square matrix. All minors use the
// unsigned deletion convention of complementary_minor(); every residual
// below is exactly zero for every input.

enum class IdentityKind { jacobi, minor_three_term, generalized_pluecker };

std::string_view identity_name(IdentityKind kind);

/// One evaluated index choice. For jacobi, rows = {i} and cols = {j} hold
/// the ordered pair; otherwise rows/cols are the deleted rows and the
/// chosen columns.
struct IndexChoice {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const IndexChoice&, const IndexChoice&) = default;
};

struct Witness {
  IndexChoice choice;
  Scalar residual;
};

struct IdentityReport {
  IdentityKind identity = IdentityKind::jacobi;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<IndexChoice> choices;
  std::size_t residuals_checked = 0;
  std::size_t nonzero_residuals = 0;
  /// Failing choices in evaluation order.
  std::vector<Witness> witnesses;

  bool passed() const { return nonzero_residuals == 0; }
};

/// M_ii M_jj - M_ij M_ji - comp(A;{i,j},{i,j}) det A.
/// Throws DomainError when i == j, BoundsError when out of range.
Scalar jacobi_residual(const Matrix& a, std::size_t i, std::size_t j);

/// jacobi_residual over every ordered pair i != j, row-major order.
IdentityReport verify_all_jacobi(const Matrix& a);

/// With comp(x,y) = comp(A; {i,j}, {x,y}) and cols = {k<l<s<r}:
///   comp(k,l) comp(s,r) - comp(k,s) comp(l,r) + comp(k,r) comp(l,s).
Scalar minor_three_term_residual(const Matrix& a, const IndexSet& row_pair, const IndexSet& cols);

/// Plücker sum over the 2r chosen columns of A with the r rows removed:
/// M = A minus (del_rows, chosen_cols), vectors = chosen columns restricted
/// to the surviving rows in ascending column order.
Scalar generalized_pluecker_residual(const Matrix& a, const IndexSet& del_rows,
                                     const IndexSet& chosen_cols);

/// Every (row pair, column quadruple) of an n x n matrix, lexicographic.
std::vector<std::pair<IndexSet, IndexSet>> minor_three_term_choices(std::size_t n);

/// Every (r rows, 2r columns) choice of an n x n matrix, lexicographic.
std::vector<std::pair<IndexSet, IndexSet>> generalized_pluecker_choices(std::size_t n,
                                                                       std::size_t r);

IdentityReport verify_minor_three_term(const Matrix& a,
                                       std::span<const std::pair<IndexSet, IndexSet>> choices);

IdentityReport verify_generalized_pluecker(
    const Matrix& a, std::span<const std::pair<IndexSet, IndexSet>> choices);

}  // namespace detident
