//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "qhl/error.hpp"
#include "qhl/lambda.hpp"
#include "qhl/serialize.hpp"

namespace qhl {
namespace {

using nlohmann::json;

TEST(Json, QuiverSchema) {
  json j = json::parse(quiver_json(parse_quiver("1->2<-3")));
  EXPECT_EQ(j["vertices"], json::parse("[1,2,3]"));
  ASSERT_EQ(j["arrows"].size(), 2u);
  EXPECT_EQ(j["arrows"][1]["source"], 3);
  EXPECT_EQ(j["arrows"][1]["target"], 2);
  EXPECT_TRUE(j["arrows"][0]["id"].is_string());
}

TEST(Json, RelationTerms) {
  BoundQuiver bq = build_hat_quiver(ARData(parse_quiver("1->2->3")));
  json j = json::parse(bound_quiver_json(bq));
  ASSERT_EQ(j["relations"].size(), 1u);
  std::multiset<std::string> coeffs;
  for (const auto& t : j["relations"][0]["terms"]) {
    coeffs.insert(t["coeff"].get<std::string>());
    EXPECT_EQ(t["path"].size(), 2u);
  }
  EXPECT_EQ(coeffs, (std::multiset<std::string>{"1", "-1"}));
}

TEST(Json, RepRoundTrip) {
  Quiver q = parse_quiver("1->2<-3");
  Rep m{DimVector({2, 1, 1}), {Matrix(1, 2), Matrix(1, 1)}};
  m.maps[0](0, 0) = Rational(1, 3);
  m.maps[0](0, 1) = -2;
  m.maps[1](0, 0) = 5;
  std::string text = rep_json(q, m);
  EXPECT_NE(text.find("\"1/3\""), std::string::npos);
  Rep back = parse_rep_json(q, text);
  EXPECT_EQ(back.dims, m.dims);
  EXPECT_EQ(back.maps, m.maps);
  EXPECT_THROW(parse_rep_json(q, "{\"dims\":[1,1]}"), ParseError);
  EXPECT_THROW(parse_rep_json(q, "not json"), ParseError);
}

TEST(Json, BoundRepRoundTripRecomputesRelations) {
  Quiver q = parse_quiver("1->2->3");
  ARData ar(q);
  BoundQuiver bq = build_hat_quiver(ar);
  Catalog catalog(ar);
  LambdaContext ctx(ar, bq, catalog);
  BoundRep f = lambda_explicit(ctx, realize(ar, catalog, parse_mult(ar, "a13,a22")));
  BoundRep back = parse_bound_rep_json(bq, bound_rep_json(bq, f));
  EXPECT_EQ(back.dims, f.dims);
  EXPECT_EQ(back.maps, f.maps);
  EXPECT_TRUE(back.relations_hold);

  // A perturbed copy that claims to satisfy the relations is re-checked.
  bool tested = false;
  for (std::size_t a = 0; a < f.maps.size() && !tested; ++a) {
    for (std::size_t i = 0; i < f.maps[a].rows() && !tested; ++i) {
      for (std::size_t k = 0; k < f.maps[a].cols() && !tested; ++k) {
        BoundRep bad = f;
        bad.maps[a](i, k) += 1;
        if (check_relations(bq, bad).ok) continue;
        bad.relations_hold = true;
        EXPECT_FALSE(parse_bound_rep_json(bq, bound_rep_json(bq, bad)).relations_hold);
        tested = true;
      }
    }
  }
  EXPECT_TRUE(tested);
}

TEST(Mult, ParseForms) {
  ARData a3(parse_quiver("1->2<-3"));
  MultVector m = parse_mult(a3, "a12:1,a11:2, a13");
  EXPECT_EQ(m[*a3.roots().index_of(a3.roots().parse_name("a11"))], 2);
  EXPECT_EQ(mult_string(a3, m), mult_string(a3, parse_mult(a3, mult_string(a3, m))));
  EXPECT_EQ(mult_string(a3, zero_mult(a3)), "0");
  ARData d4(parse_quiver("a:1->2; b:3->2; c:4->2"));
  MultVector n = parse_mult(d4, "[1,1,0,0]:2,[1,2,1,1]");
  EXPECT_EQ(dimension(d4, n), DimVector({3, 4, 1, 1}));
  EXPECT_THROW(parse_mult(d4, "[2,0,0,0]"), ParseError);
  EXPECT_THROW(parse_mult(a3, "a11:x"), ParseError);
}

TEST(Dot, ArHasDashedTranslates) {
  ARData ar(parse_quiver("1->2->3"));
  std::string dot = ar_dot(ar);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t dashed = 0;
  for (std::size_t pos = dot.find("dashed"); pos != std::string::npos; pos = dot.find("dashed", pos + 1)) ++dashed;
  EXPECT_EQ(dashed, ar.nonprojectives().size());
}

}  // namespace
}  // namespace qhl
