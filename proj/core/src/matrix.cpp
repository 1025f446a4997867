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

#include "detident/matrix.hpp"

#include <string>

#include "detident/errors.hpp"

namespace detident {
namespace {

void check_index_set(const IndexSet& set, std::size_t bound, const char* what) {
  if (set.max() > bound) {
    throw BoundsError(std::string(what) + " index " + std::to_string(set.max()) +
                      " out of range 1.." + std::to_string(bound));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix of shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " given " + std::to_string(entries_.size()) +
                         " entries");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Column>& columns) {
  return augment_columns(Matrix(rows, 0), columns);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.entries_[k * n + k] = Scalar(1);
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > rows_ || j > cols_) {
    throw BoundsError("index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return entries_[(i - 1) * cols_ + (j - 1)];
}

Column Matrix::column(std::size_t j) const {
  if (j == 0 || j > cols_) throw BoundsError("column " + std::to_string(j) + " out of range");
  Column out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(entries_[r * cols_ + (j - 1)]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  }
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

Matrix submatrix_delete(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  check_index_set(rows, a.rows(), "row");
  check_index_set(cols, a.cols(), "column");
  return submatrix_select(a, rows.complement(a.rows()), cols.complement(a.cols()));
}

Matrix submatrix_select(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  check_index_set(rows, a.rows(), "row");
  check_index_set(cols, a.cols(), "column");
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols.size());
  const auto all = a.entries();
  for (std::size_t i : rows) {
    for (std::size_t j : cols) entries.push_back(all[(i - 1) * a.cols() + (j - 1)]);
  }
  return Matrix(rows.size(), cols.size(), std::move(entries));
}

Matrix augment_columns(const Matrix& m, std::span<const Column> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != m.rows()) {
      throw DimensionError("column of length " + std::to_string(v.size()) +
                           " appended to matrix with " + std::to_string(m.rows()) + " rows");
    }
  }
  const std::size_t cols = m.cols() + vectors.size();
  std::vector<Scalar> entries;
  entries.reserve(m.rows() * cols);
  const auto src = m.entries();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(src[r * m.cols() + c]);
    for (const auto& v : vectors) entries.push_back(v[r]);
  }
  return Matrix(m.rows(), cols, std::move(entries));
}

Column restrict_column(const Column& v, const IndexSet& drop) {
  if (drop.max() > v.size()) throw BoundsError("component index out of range");
  Column out;
  out.reserve(v.size() - drop.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!drop.contains(k + 1)) out.push_back(v[k]);
  }
  return out;
}

}  // namespace detident
