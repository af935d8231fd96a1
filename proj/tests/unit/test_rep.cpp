//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qhl/error.hpp"
#include "qhl/rep.hpp"

namespace qhl {
namespace {

using test::indec;
using test::mult;

Rep a2_rep(long scalar) {
  Rep m{DimVector({1, 1}), {}};
  m.maps.push_back(Matrix{{scalar}});
  return m;
}

TEST(HomSpace, A2Examples) {
  Quiver q = parse_quiver("1->2");
  Rep p1 = a2_rep(1);
  Rep s1{DimVector({1, 0}), {Matrix(0, 1)}};
  EXPECT_EQ(hom_dimension(q, p1, s1), 1u);
  EXPECT_EQ(hom_dimension(q, s1, p1), 0u);
  EXPECT_EQ(hom_dimension(q, p1, p1), 1u);
  // Every basis element really is a morphism.
  for (const Morphism& f : hom_space(q, p1, s1)) EXPECT_EQ(s1.maps[0] * f[0], f[1] * p1.maps[0]);
}

TEST(Indecomposable, Examples) {
  ARData a2(parse_quiver("1->2"));
  Rep u = build_indecomposable(a2, DimVector({1, 1}));
  EXPECT_FALSE(u.maps[0].is_zero());
  EXPECT_THROW(build_indecomposable(a2, DimVector({2, 0})), DomainError);

  Quiver q = parse_quiver("1->2<-3");
  ARData a3(q);
  Rep v = build_indecomposable(a3, DimVector({1, 1, 1}), 99);
  EXPECT_EQ(v.dims, DimVector({1, 1, 1}));
  for (const Matrix& m : v.maps) EXPECT_FALSE(m.is_zero());
  EXPECT_EQ(hom_dimension(q, v, v), 1u);
}

TEST(Decompose, A2Examples) {
  ARData ar(parse_quiver("1->2"));
  Catalog catalog(ar);
  EXPECT_EQ(decompose(ar, catalog, a2_rep(0)), mult(ar, "a11,a22"));
  EXPECT_EQ(decompose(ar, catalog, a2_rep(-3)), mult(ar, "a12"));
}

TEST(Decompose, RandomSumsRoundTrip) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 4)) {
    ARData ar(q);
    Catalog catalog(ar, 11);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      MultVector m = zero_mult(ar);
      for (int k = 0; k < 4; ++k) m[rng() % m.size()] += 1;
      Rep scrambled = scramble(q, realize(ar, catalog, m), rng);
      EXPECT_EQ(dimension(ar, m), scrambled.dims);
      EXPECT_EQ(decompose(ar, catalog, scrambled), m);
    }
  }
}

TEST(Decompose, DifferentSeedsAgree) {
  Quiver q = parse_quiver("1->2<-3->4");
  ARData ar(q);
  Catalog a(ar, 1), b(ar, 2);
  MultVector m = mult(ar, "a24:2,a11,a34");
  EXPECT_EQ(decompose(ar, b, realize(ar, a, m)), m);
}

TEST(OrbitDim, Examples) {
  ARData ar(parse_quiver("1->2"));
  EXPECT_EQ(orbit_dim(ar, mult(ar, "a12")), 1);
  EXPECT_EQ(orbit_dim(ar, mult(ar, "a11:2,a22:3")), 0);
}

// dim O_M = sum d_i^2 - dim End(M), cross-checked with the explicit solver.
TEST(OrbitDim, MatchesExplicitEnd) {
  Quiver q = parse_quiver("1->2->3");
  ARData ar(q);
  Catalog catalog(ar);
  for (const auto& m : enumerate_classes(ar, DimVector({1, 2, 1}))) {
    Rep module = realize(ar, catalog, m);
    long squares = 0;
    for (int d : module.dims.entries()) squares += d * d;
    EXPECT_EQ(orbit_dim(ar, m), squares - static_cast<long>(hom_dimension(q, module, module)));
  }
}

TEST(Rep, ValidationAndPaths) {
  Quiver q = parse_quiver("1->2->3");
  Rep bad{DimVector({1, 1, 1}), {Matrix{{1}}}};
  EXPECT_ANY_THROW(validate_rep(q, bad));
  Rep m{DimVector({1, 1, 1}), {Matrix{{2}}, Matrix{{3}}}};
  EXPECT_EQ(path_matrix(q, m, 0, 2), (Matrix{{6}}));
  Rep sum = direct_sum(m, zero_rep(q, DimVector({1, 0, 1})));
  EXPECT_EQ(sum.dims, DimVector({2, 1, 2}));
}

}  // namespace
}  // namespace qhl
