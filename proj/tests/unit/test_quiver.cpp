//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qhl/error.hpp"
#include "qhl/quiver.hpp"

namespace qhl {
namespace {

TEST(ParseQuiver, ChainWithMixedArrows) {
  Quiver q = parse_quiver("1->2<-3->4");
  ASSERT_EQ(q.num_vertices(), 4u);
  ASSERT_EQ(q.arrows().size(), 3u);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Arrow& a : q.arrows()) edges.insert({a.source, a.target});
  EXPECT_EQ(edges, (std::set<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}, {2, 3}}));
  EXPECT_EQ(dynkin_classify(q), (DynkinClass{DynkinType::kA, 4}));
}

TEST(ParseQuiver, EquiorientedA4) {
  Quiver q = parse_quiver("1->2->3->4");
  for (Vertex v = 0; v + 1 < 4; ++v) EXPECT_TRUE(q.adjacent(v, v + 1));
  EXPECT_TRUE(q.is_source(0));
  EXPECT_TRUE(q.is_sink(3));
}

TEST(ParseQuiver, EdgeListForD4AndE6) {
  Quiver d4 = parse_quiver("a:1->2; b:3->2; c:4->2");
  EXPECT_EQ(dynkin_classify(d4), (DynkinClass{DynkinType::kD, 4}));
  EXPECT_EQ(d4.arrow(*d4.find_arrow("b")).source, 2u);
  Quiver e6 = parse_quiver("a:1->2; b:2->3; c:3->4; d:4->5; e:3->6");
  EXPECT_EQ(dynkin_classify(e6), (DynkinClass{DynkinType::kE, 6}));
}

TEST(ParseQuiver, RejectsNonDynkin) {
  EXPECT_THROW(parse_quiver("1->1"), DomainError);
  EXPECT_THROW(parse_quiver("a:1->2; b:2->1"), DomainError);
  EXPECT_THROW(parse_quiver("a:1->2; b:2->3; c:3->1"), DomainError);
  // Star with four arms is affine D4, not Dynkin.
  EXPECT_THROW(parse_quiver("a:1->2; b:3->2; c:4->2; d:5->2"), DomainError);
  // Arms 2,2,2 give affine E6.
  EXPECT_THROW(parse_quiver("a:1->2; b:2->3; c:4->5; d:5->3; e:6->7; f:7->3"), DomainError);
  EXPECT_THROW(parse_quiver("1->2->"), ParseError);
  EXPECT_THROW(parse_quiver("1->3"), DomainError);
}

TEST(ParseQuiver, PrintParseRoundTrip) {
  for (const char* text : {"1->2<-3->4", "1->2->3", "1<-2"}) {
    Quiver q = parse_quiver(text);
    EXPECT_EQ(parse_quiver(print_quiver(q)), q) << text;
  }
  for (const Quiver& q : test::orientations(DynkinType::kE, 6)) EXPECT_EQ(parse_quiver(print_quiver(q)), q);
}

TEST(Classify, StandardShapes) {
  for (auto c : {DynkinClass{DynkinType::kA, 1}, DynkinClass{DynkinType::kA, 7}, DynkinClass{DynkinType::kD, 5},
                 DynkinClass{DynkinType::kE, 6}, DynkinClass{DynkinType::kE, 7}, DynkinClass{DynkinType::kE, 8}}) {
    EXPECT_EQ(dynkin_classify(standard_quiver(c)), c);
  }
}

TEST(Orientations, CountIsPowerOfTwo) {
  EXPECT_EQ(test::orientations(DynkinType::kA, 4).size(), 8u);
  EXPECT_EQ(test::orientations(DynkinType::kD, 5).size(), 16u);
  auto e6 = test::orientations(DynkinType::kE, 6);
  std::set<std::string> distinct;
  for (const Quiver& q : e6) distinct.insert(print_quiver(q));
  EXPECT_EQ(distinct.size(), 32u);
}

TEST(EulerForm, SmallValues) {
  Quiver a2 = parse_quiver("1->2");
  EXPECT_EQ(euler_form_kq(a2, DimVector({1, 1}), DimVector({1, 1})), 1);
  EXPECT_EQ(euler_form_kq(a2, DimVector({0, 0}), DimVector({3, 1})), 0);
  EXPECT_EQ(euler_form_kq(a2, DimVector({1, 0}), DimVector({0, 1})), -1);
}

// <dim U, dim V> = hom(U,V) - hom(V, tau U), with the second term absent
// when U is projective.
TEST(EulerForm, MatchesHomDifferences) {
  for (auto type : {DynkinType::kA, DynkinType::kD}) {
    for (const Quiver& q : test::orientations(type, type == DynkinType::kA ? 4 : 5)) {
      ARData ar(q);
      for (std::size_t u = 0; u < ar.size(); ++u) {
        for (std::size_t v = 0; v < ar.size(); ++v) {
          long expected = ar.hom(u, v);
          if (auto t = ar.indec(u).tau) expected -= ar.hom(v, *t);
          EXPECT_EQ(euler_form_kq(q, ar.indec(u).dim, ar.indec(v).dim), expected);
        }
      }
    }
  }
}

}  // namespace
}  // namespace qhl
