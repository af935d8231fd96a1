//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "qhl/error.hpp"
#include "qhl/matrix.hpp"
#include "qhl/rational.hpp"

namespace qhl {
namespace {

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Matrix, ProductOfLiterals) {
  Matrix a{{1, 2}, {3, 4}};
  Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_THROW(a * Matrix(3, 1), InternalError);
}

TEST(Matrix, RankOfKnownMatrices) {
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Matrix(2, 5)), 0u);
}

// Random integer matrices: rank-nullity, kernel vectors are killed, and
// solve reproduces the right-hand side whenever it reports a solution.
TEST(Matrix, RandomPropertiesHold) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = size(rng), c = size(rng);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    Matrix k = null_space(m);
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(column_basis(m).cols(), rank(m));

    Matrix x(c, 1);
    for (std::size_t j = 0; j < c; ++j) x(j, 0) = entry(rng);
    Matrix b = m * x;
    auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, b);

    Matrix comp = complement_basis(column_basis(m));
    EXPECT_EQ(comp.cols() + rank(m), r);
    std::vector<Matrix> parts{column_basis(m), comp};
    EXPECT_EQ(rank(hstack(parts, r)), r);
  }
}

TEST(Matrix, SolveDetectsInconsistency) {
  Matrix a{{1}, {1}};
  Matrix b{{1}, {2}};
  EXPECT_FALSE(solve(a, b).has_value());
}

}  // namespace
}  // namespace qhl
