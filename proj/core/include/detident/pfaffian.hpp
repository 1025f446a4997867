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
#include <vector>

#include "detident/errors.hpp"
#include "detident/matrix.hpp"
#include "detident/scalar.hpp"

namespace detident {

/// Raised by AntisymmetricMatrix::from_matrix with the first (row-major)
/// offending 1-based position.
class AntisymmetryError : public DomainError {
 public:
  AntisymmetryError(std::size_t i, std::size_t j);
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Even-order skew-symmetric matrix stored as its strict upper triangle, so
/// A^T = -A and the zero diagonal hold by construction.
class AntisymmetricMatrix {
 public:
  AntisymmetricMatrix() = default;

  /// `upper` lists a_ij for i < j in row-major order. Throws DomainError on
  /// odd order and DimensionError on a wrong entry count.
  static AntisymmetricMatrix from_upper(std::size_t order, std::vector<Scalar> upper);

  /// Validates an explicit square matrix. Throws DimensionError when not
  /// square, DomainError on odd order and AntisymmetryError otherwise.
  static AntisymmetricMatrix from_matrix(const Matrix& m);

  std::size_t order() const { return order_; }
  /// Full entry a_ij, 1-based.
  Scalar at(std::size_t i, std::size_t j) const;
  Matrix to_matrix() const;
  const std::vector<Scalar>& upper() const { return upper_; }

  friend bool operator==(const AntisymmetricMatrix&, const AntisymmetricMatrix&) = default;

 private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  std::size_t order_ = 0;
  std::vector<Scalar> upper_;
};

/// Pf(A) = sum_{j=2}^{2n} (-1)^j a_1j Pf(A without rows/cols 1, j), memoized
/// over surviving index subsets. Pf of order 0 is 1. Orders above 64 throw
/// DomainError.
Scalar pfaffian(const AntisymmetricMatrix& a);

/// pfaffian(A)^2 - det A.
Scalar pfaffian_square_residual(const AntisymmetricMatrix& a);

/// The quantities of the perfect-square recurrence for an antisymmetric A.
struct RecurrenceTerms {
  Scalar m11;
  Scalar m22;
  Scalar m12;
  Scalar m21;
  Scalar comp12;  // comp(A; {1,2}, {1,2})
  Scalar det;

  /// M_11 = M_22 = 0 and M_12 = -M_21.
  bool minors_consistent() const { return m11.is_zero() && m22.is_zero() && m12 == -m21; }
  /// comp12 * det - m12^2
  Scalar residual() const { return comp12 * det - m12 * m12; }
};

RecurrenceTerms recurrence_terms(const AntisymmetricMatrix& a);

/// comp(A;{1,2},{1,2}) det A - M_12^2. Requires order >= 2.
Scalar jacobi_recurrence_residual(const AntisymmetricMatrix& a);

/// Order-2n antisymmetric matrix over the labels (1, ..., n, n*, ..., 1*)
/// with (i,j) = (i*,j*) = 0 and (i,j*) = -(j*,i) = a_ij. Its Pfaffian is det A.
AntisymmetricMatrix determinant_embedding(const Matrix& a);

/// Labels to drop from the embedding: `plain` holds the unstarred labels i,
/// `starred` the j of each j*. Accepted forms are {i, i*}, {i, j*} and
/// {i, j, i*, j*} with i < j.
struct LabelRemoval {
  std::vector<std::size_t> plain;
  std::vector<std::size_t> starred;
};

/// Pfaffian of the embedding restricted to the surviving labels. Equals
/// first_minor(A,i,i), first_minor(A,i,j) or comp(A,{i,j},{i,j}) for the
/// three removal forms. Throws DomainError on any other removal.
Scalar embedded_minor(const Matrix& a, const LabelRemoval& remove);

}  // namespace detident
