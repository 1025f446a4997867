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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "detident/det.hpp"
#include "detident/errors.hpp"
#include "detident/pluecker.hpp"
#include "detident/random.hpp"
#include "oracle.hpp"

using namespace detident;

namespace {

// Independent evaluation of the signed sum: walks every bitmask with r
// bits, sign from the positions, determinants by Leibniz.
Scalar brute_pluecker(const Matrix& m, const std::vector<Column>& vs) {
  const std::size_t r = vs.size() / 2;
  Scalar total;
  for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    std::vector<Column> left, right;
    std::size_t position_sum = 0;
    for (std::size_t p = 0; p < vs.size(); ++p) {
      if (mask & (1u << p)) {
        left.push_back(vs[p]);
        position_sum += p + 1;
      } else {
        right.push_back(vs[p]);
      }
    }
    const Scalar term = oracle::leibniz_det(augment_columns(m, left)) *
                        oracle::leibniz_det(augment_columns(m, right));
    total += position_sum % 2 == 0 ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("split_enumeration") {
  const auto r1 = split_enumeration(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == SplitTerm{IndexSet{1}, IndexSet{2}, -1});
  CHECK(r1[1] == SplitTerm{IndexSet{2}, IndexSet{1}, +1});

  const auto r2 = split_enumeration(2);
  REQUIRE(r2.size() == 6);
  CHECK(r2[0] == SplitTerm{IndexSet{1, 2}, IndexSet{3, 4}, -1});

  CHECK(split_enumeration(3).size() == 20);
  CHECK(split_enumeration(4).size() == 70);
  CHECK_THROWS_AS(split_enumeration(0), DomainError);
}

TEST_CASE("split_enumeration sign involution") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto terms = split_enumeration(r);
    const int expected = (r * (2 * r + 1)) % 2 == 0 ? 1 : -1;
    for (const auto& t : terms) {
      CHECK(t.left.size() == r);
      CHECK(t.left.complement(2 * r) == t.right);
      const auto mirror = std::find_if(terms.begin(), terms.end(),
                                       [&](const SplitTerm& u) { return u.left == t.right; });
      REQUIRE(mirror != terms.end());
      CHECK(mirror->right == t.left);
      CHECK(t.sign * mirror->sign == expected);
    }
  }
}

TEST_CASE("pluecker_sum worked instance") {
  const Column a{1, 0}, b{0, 1}, c{1, 1}, d{1, -1};
  const Matrix empty(2, 0);
  auto det2 = [&](const Column& x, const Column& y) {
    return oracle::leibniz_det(Matrix::from_columns(2, {x, y}));
  };
  CHECK(det2(a, b) == Scalar(1));
  CHECK(det2(c, d) == Scalar(-2));
  CHECK(det2(a, c) == Scalar(1));
  CHECK(det2(b, d) == Scalar(-1));
  CHECK(det2(a, d) == Scalar(-1));
  CHECK(det2(b, c) == Scalar(-1));

  const std::vector<Column> vs{a, b, c, d};
  CHECK(brute_pluecker(empty, vs).is_zero());
  CHECK(pluecker_sum(empty, vs).is_zero());
  CHECK(three_term_residual(empty, a, b, c, d).is_zero());
}

TEST_CASE("pluecker_sum edge cases") {
  SeededStream rng(3, 0);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix m = rng.integer_matrix(n, n - 1, 9);
    const std::vector<Column> vs{rng.integer_column(n, 9), rng.integer_column(n, 9)};
    CHECK(pluecker_sum(m, vs).is_zero());
  }
  for (std::size_t r = 1; r <= 3; ++r) {
    const std::size_t n = r + 2;
    const Matrix m = rng.integer_matrix(n, n - r, 9);
    std::vector<Column> vs;
    for (std::size_t k = 0; k < 2 * r; ++k) vs.push_back(rng.integer_column(n, 9));
    vs[1] = vs[0];
    CHECK(pluecker_sum(m, vs).is_zero());
  }

  const Matrix m(3, 1);
  const std::vector<Column> odd{Column(3), Column(3), Column(3)};
  CHECK_THROWS_AS(pluecker_sum(m, odd), DomainError);
  CHECK_THROWS_AS(pluecker_sum(m, std::vector<Column>{}), DomainError);
  const std::vector<Column> four{Column(3), Column(3), Column(3), Column(3)};
  CHECK_THROWS_AS(pluecker_sum(Matrix(3, 2), four), DimensionError);
  const std::vector<Column> short_vs{Column(2), Column(2), Column(3), Column(3)};
  CHECK_THROWS_AS(pluecker_sum(m, short_vs), DimensionError);
}

TEST_CASE("three_term_residual") {
  const Matrix m{{1}, {0}, {0}};
  const Column a{0, 1, 0}, b{0, 0, 1}, c{0, 1, 1}, d{0, 1, -1};
  // brute-force the six 3x3 determinants
  auto det3 = [&](const Column& x, const Column& y) {
    const std::vector<Column> xy{x, y};
    return oracle::leibniz_det(augment_columns(m, xy));
  };
  CHECK((det3(a, b) * det3(c, d) - det3(a, c) * det3(b, d) + det3(a, d) * det3(b, c)).is_zero());
  CHECK(three_term_residual(m, a, b, c, d).is_zero());
  CHECK(three_term_residual(m, a, b, a, d).is_zero());
  CHECK_THROWS_AS(three_term_residual(Matrix(3, 2), a, b, c, d), DimensionError);
  CHECK_THROWS_AS(three_term_residual(m, Column{1, 2}, b, c, d), DimensionError);
}

TEST_CASE("Plücker relations vanish on seeded instances") {
  for (std::uint64_t t = 0; t < 90; ++t) {
    SeededStream rng(2024, t);
    const std::size_t r = 1 + t % 3;
    const auto n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(r), 6));
    const Matrix m = rng.integer_matrix(n, n - r, 9);
    std::vector<Column> vs;
    for (std::size_t k = 0; k < 2 * r; ++k) vs.push_back(rng.integer_column(n, 9));
    CAPTURE(t);
    CHECK(brute_pluecker(m, vs).is_zero());
    CHECK(pluecker_sum(m, vs).is_zero());
  }
  for (std::uint64_t t = 0; t < 60; ++t) {
    SeededStream rng(77, t);
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const Matrix m = rng.integer_matrix(n, n - 2, 9);
    const Column a = rng.integer_column(n, 9), b = rng.integer_column(n, 9),
                 c = rng.integer_column(n, 9), d = rng.integer_column(n, 9);
    CHECK(three_term_residual(m, a, b, c, d).is_zero());
    CHECK(three_term_residual(m, b, a, c, d).is_zero());
    const std::vector<Column> vs{a, b, c, d};
    CHECK(pluecker_sum(m, vs) == Scalar(-2) * three_term_residual(m, a, b, c, d));
  }
}

TEST_CASE("pluecker_sum equals -2 x three-term as a polynomial in the term values") {
  // The relation is structural: check it on the term layout of split_enumeration
  // with arbitrary stand-in values for the six determinants.
  SeededStream rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::vector<std::size_t>, Scalar> value;
    for (const auto& pair : k_subsets(4, 2)) value[pair.values()] = Scalar(rng.uniform(-9, 9));
    Scalar sum;
    for (const auto& t : split_enumeration(2)) {
      sum += Scalar(t.sign) * value[t.left.values()] * value[t.right.values()];
    }
    auto v = [&](std::size_t x, std::size_t y) { return value[{x, y}]; };
    const Scalar three = v(1, 2) * v(3, 4) - v(1, 3) * v(2, 4) + v(1, 4) * v(2, 3);
    CHECK(sum == Scalar(-2) * three);
  }
}
