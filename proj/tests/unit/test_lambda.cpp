//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qhl/error.hpp"
#include "qhl/lambda.hpp"

namespace qhl {
namespace {

using test::hat_vertex;
using test::indec;
using test::mult;

struct Fixture {
  Quiver q;
  ARData ar;
  BoundQuiver bq;
  Catalog catalog;
  LambdaContext ctx;
  explicit Fixture(const Quiver& quiver, std::uint64_t seed = kDefaultSeed)
      : q(quiver), ar(q), bq(build_hat_quiver(ar)), catalog(ar, seed), ctx(ar, bq, catalog) {}
  explicit Fixture(const char* text) : Fixture(parse_quiver(text)) {}
  Rep module(const char* m) const { return realize(ar, catalog, mult(ar, m)); }
  MultVector back(const BoundRep& f) const { return decompose(ar, catalog, res_explicit(bq, q, f)); }
};

TEST(Resolution, ExplicitA2Simple) {
  Fixture fx("1->2");
  ExplicitResolution r = min_proj_resolution_explicit(fx.ar, fx.module("a11"));
  EXPECT_EQ(r.pair.top, (std::vector<Vertex>{0}));
  EXPECT_EQ(r.pair.syzygy, (std::vector<Vertex>{1}));
  EXPECT_FALSE(r.pair.iota.is_zero());
  EXPECT_ANY_THROW(min_proj_resolution_explicit(fx.ar, fx.module("a12")));
}

TEST(Resolution, ExplicitA3Middle) {
  Fixture fx("1->2<-3");
  ExplicitResolution r = min_proj_resolution_explicit(fx.ar, fx.module("a13"));
  EXPECT_EQ(r.pair.top, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(r.pair.syzygy, (std::vector<Vertex>{1}));
  // iota lands in both summands, otherwise the cokernel would split.
  EXPECT_FALSE(is_zero(r.pair.iota(0, 0)));
  EXPECT_FALSE(is_zero(r.pair.iota(1, 0)));
}

TEST(Lambda, A2Examples) {
  Fixture fx("1->2");
  BoundRep p1 = lambda_explicit(fx.ctx, fx.module("a12"));
  EXPECT_EQ(p1.dims, (std::vector<int>{1, 1, 1}));
  for (const Matrix& m : p1.maps) EXPECT_FALSE(m.is_zero());
  BoundRep s1 = lambda_explicit(fx.ctx, fx.module("a11"));
  EXPECT_EQ(s1.dims[hat_vertex(fx.bq, "[1]")], 1);
  EXPECT_EQ(s1.dims[hat_vertex(fx.bq, "[a11]")], 0);
  EXPECT_EQ(s1.dims[hat_vertex(fx.bq, "[2]")], 0);
  EXPECT_EQ(fx.back(p1), mult(fx.ar, "a12"));
  EXPECT_EQ(fx.back(lambda_explicit(fx.ctx, fx.module("a11,a22"))), mult(fx.ar, "a11,a22"));
}

TEST(Res, ZeroRepresentationGivesSemisimple) {
  Fixture fx("1->2->3->4");
  HatDimVector d = hat_dim(fx.ar, mult(fx.ar, "a14,a23"));
  BoundRep zero;
  zero.dims = d.entries;
  for (const auto& a : fx.bq.arrows()) zero.maps.emplace_back(d[a.target], d[a.source]);
  EXPECT_TRUE(verify_relations(fx.bq, zero).ok);
  EXPECT_EQ(fx.back(zero), mult(fx.ar, "a11,a22:2,a33:2,a44"));
}

TEST(Res, RequiresVerifiedRelations) {
  Fixture fx("1->2");
  BoundRep f = lambda_explicit(fx.ctx, fx.module("a12"));
  f.relations_hold = false;
  EXPECT_ANY_THROW(res_explicit(fx.bq, fx.q, f));
}

TEST(Lambda, DimsMatchHatDimOnD4) {
  for (const Quiver& q : test::orientations(DynkinType::kD, 4)) {
    Fixture fx(q);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      MultVector m = zero_mult(fx.ar);
      for (int k = 0; k < 3; ++k) m[rng() % m.size()] += 1;
      Rep module = scramble(q, realize(fx.ar, fx.catalog, m), rng);
      BoundRep f = lambda_explicit(fx.ctx, module);
      EXPECT_EQ(f.dims, hat_dim(fx.ar, m).entries);
      EXPECT_TRUE(check_relations(fx.bq, f).ok);
      EXPECT_EQ(fx.back(f), m);
    }
  }
}

// Along any path [i] ~> [j] parallel to the restriction path of an arrow
// i -> j, Lambda(M) composes to c * M_alpha with c independent of M, and c
// vanishes exactly on paths in the relation ideal.
TEST(Lambda, PathIndependenceUpToScalars) {
  std::vector<Quiver> qs = test::orientations(DynkinType::kA, 4);
  for (const Quiver& q : test::orientations(DynkinType::kD, 4)) qs.push_back(q);
  for (const Quiver& q : qs) {
    Fixture fx(q);
    std::mt19937_64 rng(21);
    std::vector<Rep> modules;
    std::vector<BoundRep> images;
    for (int k = 0; k < 3; ++k) {
      MultVector m = zero_mult(fx.ar);
      for (int s = 0; s < 4; ++s) m[rng() % m.size()] += 1;
      modules.push_back(scramble(q, realize(fx.ar, fx.catalog, m), rng));
      images.push_back(lambda_explicit(fx.ctx, modules.back()));
    }
    auto paths = invariant_generator_paths(fx.bq, q);
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      for (const Path& p : paths[a]) {
        std::optional<Rational> scalar;
        bool consistent = true;
        for (std::size_t k = 0; k < modules.size(); ++k) {
          const Matrix& alpha = modules[k].maps[a];
          Matrix comp = path_composite(fx.bq, images[k], p);
          if (alpha.is_zero()) continue;
          // Find c with comp = c * alpha using the first nonzero entry.
          for (std::size_t r = 0; r < alpha.rows() && !scalar; ++r)
            for (std::size_t c = 0; c < alpha.cols() && !scalar; ++c)
              if (!is_zero(alpha(r, c))) scalar = comp(r, c) / alpha(r, c);
          if (comp != alpha.scaled(*scalar)) consistent = false;
        }
        EXPECT_TRUE(consistent) << path_string(fx.bq, p);
        ASSERT_TRUE(scalar.has_value());
        EXPECT_EQ(is_zero(*scalar), path_in_ideal(fx.bq, p)) << path_string(fx.bq, p);
      }
      Path rp = res_path(fx.bq, q, a);
      EXPECT_EQ(fx.ctx.path_morphism(rp).f_q.rows(), 1u);
      EXPECT_FALSE(is_zero(fx.ctx.res_scalar(a)));
    }
  }
}

TEST(Verify, ZeroAndPerturbed) {
  Fixture fx("1->2->3->4");
  BoundRep f = lambda_explicit(fx.ctx, fx.module("a11,a12,a13,a14,a22,a23,a24,a33,a34,a44"));
  BoundRep zero = f;
  for (auto& m : zero.maps) m = Matrix(m.rows(), m.cols());
  EXPECT_TRUE(check_relations(fx.bq, zero).ok);
  // Double one entry on the middle path of the mesh at [a22].
  const std::size_t s2 = hat_vertex(fx.bq, "[a22]");
  const Relation* mesh = nullptr;
  for (const auto& r : fx.bq.relations())
    if (r.source == s2) mesh = &r;
  ASSERT_NE(mesh, nullptr);
  std::size_t arrow = mesh->terms.back().path[1];
  bool broke = false;
  for (std::size_t i = 0; i < f.maps[arrow].rows() && !broke; ++i) {
    for (std::size_t j = 0; j < f.maps[arrow].cols() && !broke; ++j) {
      if (is_zero(f.maps[arrow](i, j))) continue;
      BoundRep bad = f;
      bad.maps[arrow](i, j) *= 2;
      RelationCheck c = verify_relations(fx.bq, bad);
      if (c.ok) continue;
      broke = true;
      EXPECT_EQ(&fx.bq.relations()[*c.witness], mesh);
      EXPECT_FALSE(bad.relations_hold);
    }
  }
  EXPECT_TRUE(broke);
}

TEST(F123, LambdaImagesAreFixed) {
  Fixture fx("1->2<-3->4");
  FunctorRep f = lambda_functor(fx.ctx, fx.module("a24,a11,a34:2"));
  F123 parts = f123(fx.bq, f);
  EXPECT_EQ(parts.f1.rep.dims, f.rep.dims);
  EXPECT_EQ(parts.f2.rep.dims, f.rep.dims);
  EXPECT_EQ(parts.f3.rep.dims, f.rep.dims);
}

TEST(F123, SimplesAreKilled) {
  Fixture fx("1->2->3");
  FunctorRep zero = lambda_functor(fx.ctx, zero_rep(fx.q, DimVector({0, 0, 0})));
  std::vector<int> extra(fx.bq.num_vertices(), 0);
  const std::size_t u = hat_vertex(fx.bq, "[a12]");
  extra[u] = 2;
  FunctorRep simple = add_simples(fx.bq, zero, extra);
  F123 parts = f123(fx.bq, simple);
  EXPECT_EQ(parts.f3.rep.dims[u], 0);

  FunctorRep lam = lambda_functor(fx.ctx, fx.module("a13,a22"));
  FunctorRep padded = add_simples(fx.bq, lam, extra);
  F123 p2 = f123(fx.bq, padded);
  EXPECT_EQ(p2.f3.rep.dims, lam.rep.dims);
  for (std::size_t v = 0; v < padded.rep.dims.size(); ++v) EXPECT_GE(padded.rep.dims[v], p2.f3.rep.dims[v]);

  std::vector<int> at_frame(fx.bq.num_vertices(), 0);
  at_frame[0] = 1;
  EXPECT_THROW(add_simples(fx.bq, lam, at_frame), DomainError);
}

TEST(OrbitData, EulerAndEndomorphisms) {
  Fixture fx("1->2<-3->4");
  for (const char* m : {"a24,a11", "a14:2", "a12,a23,a34"}) {
    HatOrbitData d = hat_orbit_data(fx.ctx, mult(fx.ar, m));
    EXPECT_EQ(d.euler, d.end_kq) << m;
    // Lambda is faithful on Hom, so End over Q-hat is at least End over kQ.
    EXPECT_GE(d.end_bound, d.end_kq) << m;
  }
}

}  // namespace
}  // namespace qhl
