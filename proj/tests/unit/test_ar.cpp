//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qhl/ar_quiver.hpp"
#include "qhl/rep.hpp"

namespace qhl {
namespace {

using test::indec;

TEST(ARQuiver, A2Structure) {
  ARData ar(parse_quiver("1->2"));
  ASSERT_EQ(ar.size(), 3u);
  std::size_t s1 = indec(ar, "a11"), s2 = indec(ar, "a22"), p1 = indec(ar, "a12");
  EXPECT_TRUE(ar.indec(s2).projective);
  EXPECT_TRUE(ar.indec(p1).projective);
  EXPECT_FALSE(ar.indec(s1).projective);
  EXPECT_EQ(ar.indec(s1).tau, s2);
  EXPECT_EQ(ar.mesh(s1), (std::vector<std::size_t>{p1}));
  EXPECT_EQ(ar.hom(p1, s1), 1);
  EXPECT_EQ(ar.hom(s1, p1), 0);
  EXPECT_EQ(ar.hom(s2, p1), 1);
}

TEST(ARQuiver, A4EquiorientedCounts) {
  ARData ar(parse_quiver("1->2->3->4"));
  EXPECT_EQ(ar.size(), 10u);
  EXPECT_EQ(ar.nonprojectives().size(), 6u);
}

TEST(ARQuiver, A3ProjectivesOfTheWorkedExample) {
  ARData ar(parse_quiver("1->2<-3"));
  for (const char* p : {"a12", "a22", "a23"}) EXPECT_TRUE(ar.indec(indec(ar, p)).projective) << p;
  for (const char* u : {"a11", "a33", "a13"}) EXPECT_FALSE(ar.indec(indec(ar, u)).projective) << u;
}

// Projective P_i has (dim P_i)_j = 1 exactly when a path i -> j exists.
TEST(ARQuiver, ProjectiveDimensionsArePathCounts) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) {
    ARData ar(q);
    for (Vertex i = 0; i < q.num_vertices(); ++i) {
      const DimVector& d = ar.indec(ar.projective(i)).dim;
      for (Vertex j = 0; j < q.num_vertices(); ++j) EXPECT_EQ(d[j], q.has_path(i, j) ? 1 : 0);
    }
  }
}

TEST(ARQuiver, StructuralInvariants) {
  std::vector<Quiver> qs = test::orientations(DynkinType::kE, 6);
  for (const Quiver& q : test::orientations(DynkinType::kD, 6)) qs.push_back(q);
  for (const Quiver& q : qs) {
    ARData ar(q);
    RootSystem rs(q);
    CoxeterWord c = adapted_coxeter(q);
    EXPECT_EQ(ar.size(), rs.size());
    for (std::size_t u = 0; u < ar.size(); ++u) {
      const auto& x = ar.indec(u);
      EXPECT_EQ(ar.hom(u, u), 1);
      DimVector cu = coxeter_apply(rs, c, x.dim, Direction::kForward);
      EXPECT_EQ(x.projective, cu.is_nonpositive());
      if (x.projective) continue;
      EXPECT_EQ(ar.indec(*x.tau).dim, cu);
      DimVector sum = x.dim + ar.indec(*x.tau).dim;
      DimVector middle(q.num_vertices());
      for (std::size_t m : ar.mesh(u)) middle = middle + ar.indec(m).dim;
      EXPECT_EQ(middle, sum);
    }
    for (Vertex i = 0; i < q.num_vertices(); ++i)
      for (std::size_t v = 0; v < ar.size(); ++v) EXPECT_EQ(ar.hom(ar.projective(i), v), ar.indec(v).dim[i]);
  }
}

TEST(ARQuiver, TauCompatibilityOfHom) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) {
    ARData ar(q);
    for (std::size_t u : ar.nonprojectives()) {
      for (std::size_t v = 0; v < ar.size(); ++v) {
        auto up = ar.indec(v).tau_inv;
        if (!up) continue;
        EXPECT_EQ(ar.hom(v, *ar.indec(u).tau), ar.hom(*up, u));
      }
    }
  }
}

// Knitted hom numbers against the explicit-matrix solver.
TEST(ARQuiver, HomMatchesBruteForce) {
  std::vector<Quiver> qs;
  for (int n = 1; n <= 4; ++n)
    for (const Quiver& q : test::orientations(DynkinType::kA, n)) qs.push_back(q);
  for (const Quiver& q : test::orientations(DynkinType::kD, 4)) qs.push_back(q);
  for (const Quiver& q : qs) {
    ARData ar(q);
    Catalog catalog(ar);
    for (std::size_t u = 0; u < ar.size(); ++u)
      for (std::size_t v = 0; v < ar.size(); ++v)
        EXPECT_EQ(hom_dimension(q, catalog.model(u), catalog.model(v)), static_cast<std::size_t>(ar.hom(u, v)));
  }
}

TEST(Resolution, WorkedExamples) {
  ARData a2(parse_quiver("1->2"));
  auto r = min_proj_resolution(a2, indec(a2, "a11"));
  EXPECT_EQ(r.top, (std::vector<int>{1, 0}));
  EXPECT_EQ(r.syzygy, (std::vector<int>{0, 1}));

  ARData a3(parse_quiver("1->2<-3"));
  auto u = min_proj_resolution(a3, indec(a3, "a13"));
  EXPECT_EQ(u.top, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(u.syzygy, (std::vector<int>{0, 1, 0}));

  EXPECT_ANY_THROW(min_proj_resolution(a2, indec(a2, "a12")));
}

// For a simple S_j the resolution is P_j with syzygy the sum of P_k over
// arrows j -> k; in general the dimension vectors must balance.
TEST(Resolution, SimplesAndDimensionBalance) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) {
    ARData ar(q);
    const std::size_t n = q.num_vertices();
    for (Vertex j = 0; j < n; ++j) {
      if (q.is_sink(j)) continue;
      auto r = min_proj_resolution(ar, ar.simple(j));
      std::vector<int> top(n, 0), syz(n, 0);
      top[j] = 1;
      for (std::size_t a : q.out_arrows(j)) syz[q.arrow(a).target] += 1;
      EXPECT_EQ(r.top, top);
      EXPECT_EQ(r.syzygy, syz);
    }
    for (std::size_t u : ar.nonprojectives()) {
      auto r = min_proj_resolution(ar, u);
      DimVector balance = ar.indec(u).dim;
      for (Vertex i = 0; i < n; ++i)
        balance = balance - ar.indec(ar.projective(i)).dim.scaled(r.top[i] - r.syzygy[i]);
      EXPECT_TRUE(balance.is_zero());
    }
  }
}

TEST(HomDim, BilinearOnMultiplicities) {
  ARData ar(parse_quiver("1->2<-3"));
  MultVector m = test::mult(ar, "a13:2,a22:1");
  MultVector n = test::mult(ar, "a12:1,a11:1");
  long expected = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t s = 0; s < n.size(); ++s) expected += long(m[r]) * n[s] * ar.hom(ar.of_root(r), ar.of_root(s));
  EXPECT_EQ(hom_dim(ar, m, n), expected);
}

}  // namespace
}  // namespace qhl
