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

#include "detident/index_set.hpp"
#include "detident/matrix.hpp"
#include "detident/scalar.hpp"

namespace detident {

// Every engine throws DimensionError on a non-square argument and defines
// the determinant of the 0x0 matrix as 1.

/// Recursive first-row cofactor expansion. Exponential; meant as the
/// reference oracle for n <= 8.
Scalar det_laplace(const Matrix& a);

/// Fraction-free Bareiss elimination with row swaps on zero pivots.
/// Rows are scaled to integers first, so the inner loop never forms
/// fractions.
Scalar det_bareiss(const Matrix& a);

struct DodgsonResult {
  Scalar value;
  bool fallback_used = false;
  /// Condensation level n - k + 1 of the shallowest k x k block whose
  /// interior minor was zero; 0 when no fallback happened.
  std::size_t fallback_depth = 0;
};

/// Condensation: det A = (M_11 M_nn - M_1n M_n1) / M^{1n}_{1n}, applied
/// recursively over contiguous blocks. A block with a vanishing interior
/// minor is evaluated with det_bareiss instead.
DodgsonResult det_dodgson(const Matrix& a);

/// det(A with rows R and columns C deleted), unsigned. Deleting everything
/// gives 1. Throws ShapeError when |R| != |C|.
Scalar complementary_minor(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// Unsigned first minor M_ij.
Scalar first_minor(const Matrix& a, std::size_t i, std::size_t j);

/// (-1)^(sum R + sum C) * complementary_minor(A, R, C).
Scalar signed_cofactor(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

}  // namespace detident
