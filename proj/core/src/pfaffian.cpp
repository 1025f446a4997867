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

#include "detident/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "detident/det.hpp"
#include "detident/errors.hpp"

namespace detident {
namespace {

constexpr std::size_t kMaxPfaffianOrder = 64;

class PfaffianExpander {
 public:
  explicit PfaffianExpander(const AntisymmetricMatrix& a) : a_(a) {}

  // Pfaffian of the principal submatrix on the positions set in `mask`
  // (bit p <-> index p + 1).
  Scalar of(std::uint64_t mask) {
    if (mask == 0) return Scalar(1);
    if (std::popcount(mask) % 2 != 0) return Scalar(0);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    const int first = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    Scalar total;
    std::size_t position = 2;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1, ++position) {
      const int j = std::countr_zero(scan);
      const Scalar entry = a_.at(static_cast<std::size_t>(first) + 1, static_cast<std::size_t>(j) + 1);
      if (entry.is_zero()) continue;
      const Scalar term = entry * of(rest & ~(std::uint64_t{1} << j));
      if (position % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    memo_.emplace(mask, total);
    return total;
  }

 private:
  const AntisymmetricMatrix& a_;
  std::unordered_map<std::uint64_t, Scalar> memo_;
};

std::uint64_t full_mask(std::size_t order) {
  return order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

}  // namespace

AntisymmetryError::AntisymmetryError(std::size_t i, std::size_t j)
    : DomainError("matrix is not antisymmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")"),
      row_(i),
      col_(j) {}

AntisymmetricMatrix AntisymmetricMatrix::from_upper(std::size_t order, std::vector<Scalar> upper) {
  if (order % 2 != 0) {
    throw DomainError("antisymmetric matrix must have even order, got " + std::to_string(order));
  }
  const std::size_t expected = order * (order == 0 ? 0 : order - 1) / 2;
  if (upper.size() != expected) {
    throw DimensionError("order " + std::to_string(order) + " needs " + std::to_string(expected) +
                         " upper entries, got " + std::to_string(upper.size()));
  }
  AntisymmetricMatrix out;
  out.order_ = order;
  out.upper_ = std::move(upper);
  return out;
}

AntisymmetricMatrix AntisymmetricMatrix::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("antisymmetric matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j ? !m.at(i, j).is_zero() : m.at(j, i) != -m.at(i, j)) {
        throw AntisymmetryError(i, j);
      }
    }
  }
  if (n % 2 != 0) {
    throw DomainError("antisymmetric matrix must have even order, got " + std::to_string(n));
  }
  std::vector<Scalar> upper;
  upper.reserve(n * (n == 0 ? 0 : n - 1) / 2);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) upper.push_back(m.at(i, j));
  }
  return from_upper(n, std::move(upper));
}

std::size_t AntisymmetricMatrix::upper_index(std::size_t i, std::size_t j) const {
  // Rows 1..i-1 contribute (order - 1) + ... + (order - i + 1) entries.
  return (i - 1) * order_ - (i - 1) * i / 2 + (j - i - 1);
}

Scalar AntisymmetricMatrix::at(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > order_ || j > order_) {
    throw BoundsError("antisymmetric index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range");
  }
  if (i == j) return Scalar(0);
  if (i < j) return upper_[upper_index(i, j)];
  return -upper_[upper_index(j, i)];
}

Matrix AntisymmetricMatrix::to_matrix() const {
  std::vector<Scalar> entries;
  entries.reserve(order_ * order_);
  for (std::size_t i = 1; i <= order_; ++i) {
    for (std::size_t j = 1; j <= order_; ++j) entries.push_back(at(i, j));
  }
  return Matrix(order_, order_, std::move(entries));
}

Scalar pfaffian(const AntisymmetricMatrix& a) {
  if (a.order() > kMaxPfaffianOrder) {
    throw DomainError("pfaffian supports order <= 64, got " + std::to_string(a.order()));
  }
  PfaffianExpander expander(a);
  return expander.of(full_mask(a.order()));
}

Scalar pfaffian_square_residual(const AntisymmetricMatrix& a) {
  const Scalar pf = pfaffian(a);
  return pf * pf - det_bareiss(a.to_matrix());
}

RecurrenceTerms recurrence_terms(const AntisymmetricMatrix& a) {
  if (a.order() < 2) throw DomainError("recurrence needs order >= 2");
  const Matrix m = a.to_matrix();
  RecurrenceTerms t;
  t.m11 = first_minor(m, 1, 1);
  t.m22 = first_minor(m, 2, 2);
  t.m12 = first_minor(m, 1, 2);
  t.m21 = first_minor(m, 2, 1);
  t.comp12 = complementary_minor(m, IndexSet{1, 2}, IndexSet{1, 2});
  t.det = det_bareiss(m);
  return t;
}

Scalar jacobi_recurrence_residual(const AntisymmetricMatrix& a) {
  return recurrence_terms(a).residual();
}

AntisymmetricMatrix determinant_embedding(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant_embedding needs a square matrix");
  const std::size_t n = a.rows();
  const std::size_t order = 2 * n;
  // Label i sits at position i, label j* at position 2n + 1 - j. The only
  // nonzero upper entries pair an unstarred label with a starred one.
  std::vector<Scalar> upper;
  upper.reserve(order * (order == 0 ? 0 : order - 1) / 2);
  for (std::size_t p = 1; p <= order; ++p) {
    for (std::size_t q = p + 1; q <= order; ++q) {
      if (p <= n && q > n) {
        upper.push_back(a.at(p, order + 1 - q));
      } else {
        upper.emplace_back(0);
      }
    }
  }
  return AntisymmetricMatrix::from_upper(order, std::move(upper));
}

Scalar embedded_minor(const Matrix& a, const LabelRemoval& remove) {
  if (!a.is_square()) throw DimensionError("embedded_minor needs a square matrix");
  const std::size_t n = a.rows();
  auto in_range = [n](std::size_t k) { return k >= 1 && k <= n; };
  const auto& plain = remove.plain;
  const auto& starred = remove.starred;

  bool well_formed = false;
  if (plain.size() == 1 && starred.size() == 1) {
    well_formed = in_range(plain[0]) && in_range(starred[0]);
  } else if (plain.size() == 2 && starred.size() == 2) {
    well_formed = in_range(plain[0]) && in_range(plain[1]) && plain[0] < plain[1] &&
                  plain == starred;
  }
  if (!well_formed) {
    throw DomainError("label removal must be {i,i*}, {i,j*} or {i,j,i*,j*} with i<j");
  }

  const AntisymmetricMatrix b = determinant_embedding(a);
  std::uint64_t mask = full_mask(b.order());
  for (std::size_t i : plain) mask &= ~(std::uint64_t{1} << (i - 1));
  for (std::size_t j : starred) mask &= ~(std::uint64_t{1} << (b.order() - j));
  if (b.order() > kMaxPfaffianOrder) throw DomainError("embedding order exceeds 64");
  PfaffianExpander expander(b);
  return expander.of(mask);
}

}  // namespace detident
