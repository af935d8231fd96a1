//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qhl/hl.hpp"

namespace qhl {
namespace {

struct Example {
  Quiver q;
  RootSystem rs;
  PhiTable t;
  Example(const char* text, std::vector<int> xi)
      : q(parse_quiver(text)), rs(q), t(phi_table(q, HeightFunction{std::move(xi)})) {}
  PhiValue value(const char* root, int level) const { return {*rs.index_of(rs.parse_name(root)), level}; }
};

TEST(Phi, A4Entries) {
  Example ex("1->2->3->4", {4, 3, 2, 1});
  EXPECT_EQ(ex.t.at(0, 4), ex.value("a11", 0));
  EXPECT_EQ(ex.t.at(1, 3), ex.value("a12", 0));
  EXPECT_EQ(ex.t.at(3, 1), ex.value("a14", 0));
  EXPECT_EQ(ex.t.at(3, -1), ex.value("a11", -1));
  EXPECT_EQ(ex.t.at(0, 6), ex.value("a14", 1));
  EXPECT_FALSE(ex.t.at(0, 5).has_value());
}

TEST(Phi, A3Entries) {
  Example ex("1->2<-3", {2, 1, 2});
  EXPECT_EQ(ex.t.at(1, 1), ex.value("a13", 0));
  EXPECT_EQ(ex.t.at(0, 0), ex.value("a23", 0));
  EXPECT_EQ(ex.t.at(2, -2), ex.value("a11", -1));
}

TEST(Phi, RejectsInvalidHeight) {
  Quiver q = parse_quiver("1->2");
  EXPECT_ANY_THROW(phi_table(q, HeightFunction{{1, 1}}));
}

// Recursion, parity and level-0 bijectivity on a spread of quivers.
TEST(Phi, InvariantsAcrossOrientations) {
  std::vector<Quiver> qs = test::orientations(DynkinType::kE, 6);
  for (const Quiver& q : test::orientations(DynkinType::kA, 5)) qs.push_back(q);
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) qs.push_back(q);
  for (const Quiver& q : qs) {
    RootSystem rs(q);
    CoxeterWord c = adapted_coxeter(q);
    HeightFunction xi = height_function(q);
    PhiTable t = phi_table(q, xi);
    auto gamma = gamma_roots(q);
    std::vector<int> level0(rs.size(), 0);
    for (const auto& [key, v] : t.entries) {
      auto [j, p] = key;
      EXPECT_EQ(((p - xi.xi[j]) % 2 + 2) % 2, 0);
      if (v.level == 0) level0[v.root] += 1;
      auto below = t.at(j, p - 2);
      if (!below) continue;
      DimVector image = coxeter_apply(rs, c, rs.root(v.root), Direction::kForward);
      if (rs.is_positive_root(image)) EXPECT_EQ(*below, (PhiValue{*rs.index_of(image), v.level}));
      else EXPECT_EQ(*below, (PhiValue{*rs.index_of(-image), v.level - 1}));
    }
    for (Vertex j = 0; j < q.num_vertices(); ++j)
      EXPECT_EQ(t.at(j, xi.xi[j]), (PhiValue{*rs.index_of(gamma[j]), 0}));
    for (int count : level0) EXPECT_EQ(count, 1);
  }
}

TEST(Phi, ShiftingTheHeightTranslatesKeys) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 4)) {
    HeightFunction xi = height_function(q), shifted = xi;
    for (int& x : shifted.xi) x += 6;
    PhiTable a = phi_table(q, xi), b = phi_table(q, shifted);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (const auto& [key, v] : a.entries) EXPECT_EQ(b.at(key.first, key.second + 6), v);
  }
}

// Non-projective U at level 0 is exactly where the next step down stays at
// level 0.
TEST(Phi, LevelDropDetectsProjectives) {
  for (const Quiver& q : test::orientations(DynkinType::kA, 4)) {
    ARData ar(q);
    PhiTable t = phi_table(q, height_function(q));
    for (const auto& [key, v] : t.entries) {
      if (v.level != 0) continue;
      auto below = t.at(key.first, key.second - 2);
      ASSERT_TRUE(below.has_value());
      EXPECT_EQ(below->level == 0, !ar.indec(ar.of_root(v.root)).projective);
    }
  }
}

TEST(HLQuiver, A4VerticesAndArrowKinds) {
  Example ex("1->2->3->4", {4, 3, 2, 1});
  BoundQuiver hl = hl_quiver(ex.q, ex.t);
  std::set<std::string> names;
  for (const auto& v : hl.vertices()) names.insert(v.name);
  EXPECT_EQ(names, (std::set<std::string>{"w_1(4)", "w_1(2)", "w_1(0)", "w_1(-2)", "v_1(3)", "v_1(1)", "v_1(-1)",
                                          "v_2(2)", "v_2(0)", "v_3(1)"}));
  int a = 0, b = 0, ladder = 0;
  for (const auto& arr : hl.arrows()) {
    a += arr.kind == EdgeKind::kHlA;
    b += arr.kind == EdgeKind::kHlB;
    ladder += arr.kind == EdgeKind::kHlLadder;
  }
  EXPECT_EQ(a, 3);
  EXPECT_EQ(b, 3);
  EXPECT_EQ(ladder, 6);
}

TEST(HLQuiver, A3Arrows) {
  Example ex("1->2<-3", {2, 1, 2});
  BoundQuiver hl = hl_quiver(ex.q, ex.t);
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& a : hl.arrows()) edges.insert({hl.vertex(a.source).name, hl.vertex(a.target).name});
  EXPECT_EQ(edges, (std::set<std::pair<std::string, std::string>>{{"w_1(2)", "v_1(1)"},
                                                                   {"v_1(1)", "v_2(0)"},
                                                                   {"v_2(0)", "w_2(-1)"},
                                                                   {"v_3(1)", "v_2(0)"},
                                                                   {"w_3(2)", "v_3(1)"}}));
  EXPECT_TRUE(hl.relations().empty());
}

std::map<std::vector<std::string>, Rational> terms_by_ids(const BoundQuiver& hl, const Relation& r) {
  std::map<std::vector<std::string>, Rational> out;
  for (const auto& t : r.terms) {
    std::vector<std::string> ids;
    for (std::size_t a : t.path) ids.push_back(hl.arrow(a).id);
    out[ids] = t.coeff;
  }
  return out;
}

TEST(HLRelations, A4Instances) {
  Example ex("1->2->3->4", {4, 3, 2, 1});
  BoundQuiver hl = hl_quiver(ex.q, ex.t);
  std::vector<std::map<std::vector<std::string>, Rational>> rels;
  for (const auto& r : hl.relations()) rels.push_back(terms_by_ids(hl, r));
  using T = std::map<std::vector<std::string>, Rational>;
  // a_1(2) b_1(3) = B_21(2) B_12(3), written in traversal order.
  T at13{{{"b_1(3)", "a_1(2)"}, 1}, {{"B_12(3)", "B_21(2)"}, -1}};
  // No w_2 vertex: the two ladder composites cancel.
  T at22{{{"B_21(2)", "B_12(1)"}, -1}, {{"B_23(2)", "B_32(1)"}, -1}};
  EXPECT_NE(std::find(rels.begin(), rels.end(), at13), rels.end());
  EXPECT_NE(std::find(rels.begin(), rels.end(), at22), rels.end());
  EXPECT_EQ(rels.size(), 3u);
}

TEST(HLRelations, CountMatchesMeshesWithNonprojectiveTranslate) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) {
    ARData ar(q);
    std::size_t expected = 0;
    for (std::size_t u : ar.nonprojectives()) expected += !ar.indec(*ar.indec(u).tau).projective;
    EXPECT_EQ(hl_quiver(q, phi_table(q, height_function(q))).relations().size(), expected);
  }
}

TEST(Signs, AllPlusStaysPlus) {
  Quiver q = parse_quiver("1->2->3->4");
  BoundQuiver hl = hl_quiver(q, phi_table(q, height_function(q)));
  SignMap eps;
  for (const Arrow& a : q.arrows()) eps[{a.source, a.target}] = eps[{a.target, a.source}] = 1;
  for (const auto& [key, s] : resolve_signs(hl, eps)) EXPECT_EQ(s, 1);
}

TEST(Signs, AlternatingDownTheA4Ladder) {
  Quiver q = parse_quiver("1->2->3->4");
  BoundQuiver hl = hl_quiver(q, phi_table(q, height_function(q)));
  SignMap eps{{{0, 1}, -1}, {{1, 0}, -1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 2}, 1}};
  ArrowTwist t = resolve_signs(hl, eps);
  EXPECT_EQ(t.at({0, 1, 3}), 1);
  EXPECT_EQ(t.at({1, 0, 2}), -1);
  EXPECT_EQ(t.at({0, 1, 1}), 1);
  EXPECT_EQ(t.at({1, 0, 0}), -1);
}

TEST(Signs, NoLadderArrowsOnA2) {
  Quiver q = parse_quiver("1->2");
  BoundQuiver hl = hl_quiver(q, phi_table(q, height_function(q)));
  EXPECT_TRUE(resolve_signs(hl, default_signs(q)).empty());
}

TEST(Signs, TwistTurnsSignedIntoUnsigned) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 5)) {
    BoundQuiver hl = hl_quiver(q, phi_table(q, height_function(q)));
    SignMap eps = default_signs(q);
    auto twisted = apply_twist(hl, hl_relations(hl, eps), resolve_signs(hl, eps));
    auto plain = hl_relations(hl);
    ASSERT_EQ(twisted.size(), plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) EXPECT_EQ(terms_by_ids(hl, twisted[i]), terms_by_ids(hl, plain[i]));
  }
}

}  // namespace
}  // namespace qhl
