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

#include "detident/jacobi.hpp"

#include <string>

#include "detident/det.hpp"
#include "detident/errors.hpp"
#include "detident/pluecker.hpp"

namespace detident {
namespace {

void require_square(const Matrix& a, const char* who) {
  if (!a.is_square()) throw DimensionError(std::string(who) + ": matrix is not square");
}

void record(IdentityReport& report, IndexChoice choice, Scalar residual) {
  ++report.residuals_checked;
  if (!residual.is_zero()) {
    ++report.nonzero_residuals;
    report.witnesses.push_back({choice, std::move(residual)});
  }
  report.choices.push_back(std::move(choice));
}

std::vector<std::pair<IndexSet, IndexSet>> row_col_choices(std::size_t n, std::size_t row_count,
                                                           std::size_t col_count) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  const auto col_sets = k_subsets(n, col_count);
  for (const auto& rows : k_subsets(n, row_count)) {
    for (const auto& cols : col_sets) out.emplace_back(rows, cols);
  }
  return out;
}

}  // namespace

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::jacobi:
      return "jacobi";
    case IdentityKind::minor_three_term:
      return "minor-three-term";
    case IdentityKind::generalized_pluecker:
      return "generalized-pluecker";
  }
  return "unknown";
}

Scalar jacobi_residual(const Matrix& a, std::size_t i, std::size_t j) {
  require_square(a, "jacobi_residual");
  const std::size_t n = a.rows();
  if (i == 0 || j == 0 || i > n || j > n) {
    throw BoundsError("jacobi_residual index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range 1.." + std::to_string(n));
  }
  if (i == j) throw DomainError("jacobi_residual needs i != j");

  const IndexSet pair = IndexSet::from_unsorted({i, j});
  return first_minor(a, i, i) * first_minor(a, j, j) - first_minor(a, i, j) * first_minor(a, j, i) -
         complementary_minor(a, pair, pair) * det_bareiss(a);
}

IdentityReport verify_all_jacobi(const Matrix& a) {
  require_square(a, "verify_all_jacobi");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionError("verify_all_jacobi needs n >= 2");

  // Minors are shared between pairs; compute each once.
  std::vector<Scalar> minors(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) minors[(i - 1) * n + (j - 1)] = first_minor(a, i, j);
  }
  auto minor = [&](std::size_t i, std::size_t j) -> const Scalar& {
    return minors[(i - 1) * n + (j - 1)];
  };
  const Scalar det = det_bareiss(a);

  IdentityReport report;
  report.identity = IdentityKind::jacobi;
  report.rows = report.cols = n;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      const IndexSet pair = IndexSet::from_unsorted({i, j});
      Scalar residual = minor(i, i) * minor(j, j) - minor(i, j) * minor(j, i) -
                        complementary_minor(a, pair, pair) * det;
      record(report, IndexChoice{{i}, {j}}, std::move(residual));
    }
  }
  return report;
}

Scalar minor_three_term_residual(const Matrix& a, const IndexSet& row_pair, const IndexSet& cols) {
  require_square(a, "minor_three_term_residual");
  if (row_pair.size() != 2) throw DomainError("minor_three_term_residual needs exactly 2 rows");
  if (cols.size() != 4) throw DomainError("minor_three_term_residual needs exactly 4 columns");
  if (a.rows() < 4) throw DimensionError("minor_three_term_residual needs n >= 4");

  auto comp = [&](std::size_t x, std::size_t y) {
    return complementary_minor(a, row_pair, IndexSet{x, y});
  };
  const std::size_t k = cols[0], l = cols[1], s = cols[2], r = cols[3];
  return comp(k, l) * comp(s, r) - comp(k, s) * comp(l, r) + comp(k, r) * comp(l, s);
}

Scalar generalized_pluecker_residual(const Matrix& a, const IndexSet& del_rows,
                                     const IndexSet& chosen_cols) {
  require_square(a, "generalized_pluecker_residual");
  const std::size_t r = del_rows.size();
  if (r == 0) throw DomainError("generalized_pluecker_residual needs r >= 1");
  if (chosen_cols.size() != 2 * r) {
    throw DomainError("generalized_pluecker_residual needs 2r columns for r rows");
  }
  if (a.rows() < 2 * r) throw DimensionError("generalized_pluecker_residual needs n >= 2r");

  const Matrix m = submatrix_delete(a, del_rows, chosen_cols);
  std::vector<Column> vectors;
  vectors.reserve(chosen_cols.size());
  for (std::size_t c : chosen_cols) vectors.push_back(restrict_column(a.column(c), del_rows));
  return pluecker_sum(m, vectors);
}

std::vector<std::pair<IndexSet, IndexSet>> minor_three_term_choices(std::size_t n) {
  return row_col_choices(n, 2, 4);
}

std::vector<std::pair<IndexSet, IndexSet>> generalized_pluecker_choices(std::size_t n,
                                                                       std::size_t r) {
  return row_col_choices(n, r, 2 * r);
}

IdentityReport verify_minor_three_term(const Matrix& a,
                                       std::span<const std::pair<IndexSet, IndexSet>> choices) {
  IdentityReport report;
  report.identity = IdentityKind::minor_three_term;
  report.rows = a.rows();
  report.cols = a.cols();
  for (const auto& [rows, cols] : choices) {
    record(report, IndexChoice{rows.values(), cols.values()},
           minor_three_term_residual(a, rows, cols));
  }
  return report;
}

IdentityReport verify_generalized_pluecker(
    const Matrix& a, std::span<const std::pair<IndexSet, IndexSet>> choices) {
  IdentityReport report;
  report.identity = IdentityKind::generalized_pluecker;
  report.rows = a.rows();
  report.cols = a.cols();
  for (const auto& [rows, cols] : choices) {
    record(report, IndexChoice{rows.values(), cols.values()},
           generalized_pluecker_residual(a, rows, cols));
  }
  return report;
}

}  // namespace detident
