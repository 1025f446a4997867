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
#include <span>
#include <string>
#include <vector>

#include "detident/index_set.hpp"
#include "detident/scalar.hpp"

namespace detident {

using Column = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars. Every index taken or returned
/// through the public interface is 1-based. Zero-sized shapes (0x0, n x 0)
/// are legal values.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Column>& columns);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  /// Throws BoundsError outside 1..rows x 1..cols.
  const Scalar& at(std::size_t i, std::size_t j) const;

  /// Column j (1-based) as a vector of length rows().
  Column column(std::size_t j) const;

  Matrix transpose() const;
  /// Copy with every entry multiplied by c.
  Matrix scaled(const Scalar& c) const;

  /// Row-major view of all entries.
  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// A with the listed rows and columns removed, survivors kept in their
/// original relative order. Throws BoundsError on out-of-range indices.
Matrix submatrix_delete(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// Rows `rows` and columns `cols` of A, in increasing order.
Matrix submatrix_select(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// M with `vectors` appended as new rightmost columns in the given order.
/// Throws DimensionError if a vector's length differs from M.rows().
Matrix augment_columns(const Matrix& m, std::span<const Column> vectors);

/// Column with the listed (1-based) components removed.
Column restrict_column(const Column& v, const IndexSet& drop);

}  // namespace detident
