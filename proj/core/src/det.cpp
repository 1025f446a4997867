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

#include "detident/det.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "detident/errors.hpp"

namespace detident {
namespace {

void require_square(const Matrix& a, const char* who) {
  if (!a.is_square()) {
    throw DimensionError(std::string(who) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
}

// Expansion along row `row` over the remaining columns `cols` (0-based).
Scalar laplace_expand(std::span<const Scalar> e, std::size_t n, std::size_t row,
                      std::vector<std::size_t>& cols) {
  if (cols.empty()) return Scalar(1);
  if (cols.size() == 1) return e[row * n + cols.front()];
  Scalar total;
  for (std::size_t p = 0; p < cols.size(); ++p) {
    const Scalar& entry = e[row * n + cols[p]];
    if (entry.is_zero()) continue;
    const std::size_t removed = cols[p];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(p));
    Scalar term = entry * laplace_expand(e, n, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(p), removed);
    if (p % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Bareiss elimination on an integer matrix, destroys `m`.
mpz_class bareiss_integer(std::vector<mpz_class>& m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m[k * n + c], m[swap_row * n + c]);
      sign = -sign;
    }
    const mpz_class& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class& lead = m[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& target = m[i * n + j];
        target = target * pivot - lead * m[k * n + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  mpz_class result = m[n * n - 1];
  if (sign < 0) result = -result;
  return result;
}

class Condenser {
 public:
  explicit Condenser(const Matrix& a)
      : a_(a), n_(a.rows()), memo_((n_ + 1) * (n_ + 1) * (n_ + 1)) {}

  Scalar block(std::size_t r0, std::size_t c0, std::size_t k) {
    if (k == 0) return Scalar(1);
    if (k == 1) return a_.entries()[r0 * n_ + c0];
    auto& slot = memo_[(k * (n_ + 1) + r0) * (n_ + 1) + c0];
    if (slot) return *slot;

    const Scalar interior = block(r0 + 1, c0 + 1, k - 2);
    Scalar value;
    if (interior.is_zero()) {
      const std::size_t level = n_ - k + 1;
      depth_ = depth_ == 0 ? level : std::min(depth_, level);
      value = det_bareiss(block_matrix(r0, c0, k));
    } else {
      const Scalar drop_first = block(r0 + 1, c0 + 1, k - 1);  // M_11
      const Scalar drop_last = block(r0, c0, k - 1);           // M_kk
      const Scalar first_row_last_col = block(r0 + 1, c0, k - 1);  // M_1k
      const Scalar last_row_first_col = block(r0, c0 + 1, k - 1);  // M_k1
      value = (drop_first * drop_last - first_row_last_col * last_row_first_col) / interior;
    }
    slot = value;
    return value;
  }

  std::size_t fallback_depth() const { return depth_; }

 private:
  Matrix block_matrix(std::size_t r0, std::size_t c0, std::size_t k) const {
    std::vector<Scalar> entries;
    entries.reserve(k * k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) entries.push_back(a_.entries()[(r0 + r) * n_ + c0 + c]);
    }
    return Matrix(k, k, std::move(entries));
  }

  const Matrix& a_;
  std::size_t n_;
  std::vector<std::optional<Scalar>> memo_;
  std::size_t depth_ = 0;
};

}  // namespace

Scalar det_laplace(const Matrix& a) {
  require_square(a, "det_laplace");
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return laplace_expand(a.entries(), a.cols(), 0, cols);
}

Scalar det_bareiss(const Matrix& a) {
  require_square(a, "det_bareiss");
  const std::size_t n = a.rows();
  const auto e = a.entries();

  // Clear denominators row by row: det A = det B / prod(row scale).
  std::vector<mpz_class> m(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const mpz_class den = e[r * n + c].denominator();
      if (den != 1) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = e[r * n + c].gmp();
      m[r * n + c] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return Scalar(mpq_class(bareiss_integer(m, n), scale));
}

DodgsonResult det_dodgson(const Matrix& a) {
  require_square(a, "det_dodgson");
  Condenser condenser(a);
  DodgsonResult out;
  out.value = condenser.block(0, 0, a.rows());
  out.fallback_depth = condenser.fallback_depth();
  out.fallback_used = out.fallback_depth != 0;
  return out;
}

Scalar complementary_minor(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  require_square(a, "complementary_minor");
  if (rows.size() != cols.size()) {
    throw ShapeError("complementary minor needs |rows| == |cols|, got " +
                     std::to_string(rows.size()) + " and " + std::to_string(cols.size()));
  }
  return det_bareiss(submatrix_delete(a, rows, cols));
}

Scalar first_minor(const Matrix& a, std::size_t i, std::size_t j) {
  require_square(a, "first_minor");
  if (i == 0 || j == 0 || i > a.rows() || j > a.cols()) {
    throw BoundsError("first minor index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range");
  }
  return complementary_minor(a, IndexSet{i}, IndexSet{j});
}

Scalar signed_cofactor(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  return parity_sign(rows.sum() + cols.sum()) * complementary_minor(a, rows, cols);
}

}  // namespace detident
