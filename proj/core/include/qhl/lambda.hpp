//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhl/ar_quiver.hpp"
#include "qhl/bound_quiver.hpp"
#include "qhl/bq_algebra.hpp"
#include "qhl/matrix.hpp"
#include "qhl/rep.hpp"

namespace qhl {

// A monomorphism between sums of indecomposable projectives,
// P = (+)_a P_{syzygy[a]} -> Q = (+)_b P_{top[b]}.
//
// Hom(P_x, P_y) is one-dimensional when y reaches x and zero otherwise, so a
// map between such sums is a scalar matrix with one entry per summand pair.
struct PairObject {
  std::vector<Vertex> top;
  std::vector<Vertex> syzygy;
  Matrix iota;  // top.size() x syzygy.size()
};

struct ExplicitResolution {
  PairObject pair;
  // generators[b] spans a top summand of U at vertex pair.top[b] (a column of
  // length dim U_{top[b]}).
  std::vector<Matrix> generators;
};

// 0 -> P -> Q -> U -> 0 with Q -> U a projective cover. Throws DomainError
// for projective or decomposable U.
ExplicitResolution min_proj_resolution_explicit(const ARData& ar, const Rep& u);

// The projective representation (+)_a P_{summands[a]}.
Rep projective_rep(const Quiver& q, const std::vector<Vertex>& summands);

// The morphism of representations (+)_a P_{from[a]} -> (+)_b P_{to[b]} given by
// the scalar matrix `f` (to.size() x from.size()).
Morphism materialize(const Quiver& q, const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                     const Matrix& f);

// Precomposition with f as a map (+)_b M_{to[b]} -> (+)_a M_{from[a]}.
Matrix pullback(const Quiver& q, const Rep& m, const std::vector<Vertex>& from,
                const std::vector<Vertex>& to, const Matrix& f);

// A representation of Q-hat. maps[a] has shape dims[target] x dims[source].
struct BoundRep {
  std::vector<int> dims;
  std::vector<Matrix> maps;
  bool relations_hold = false;
};

// A Q-hat representation together with the actions of the canonical
// morphisms at each vertex X: g_action is F(Q_X = Q_X) -> F(X) and f_action
// is F(X) -> F(P_X = P_X), where F(Q = Q) = (+)_b F([top[b]]) and likewise
// for P.
struct FunctorRep {
  BoundRep rep;
  std::vector<Matrix> g_action;
  std::vector<Matrix> f_action;
};

// The chosen H_Q morphism for a Q-hat arrow [X] -> [Y], which goes from the
// object of Y to the object of X.
struct ArrowMorphism {
  Matrix f_p;  // |syzygy X| x |syzygy Y|
  Matrix f_q;  // |top X| x |top Y|
};

// The pair objects and arrow representatives used to evaluate Lambda. Keeps
// references to `ar`, `bq` and `catalog`, which must outlive it.
class LambdaContext {
 public:
  LambdaContext(const ARData& ar, const BoundQuiver& bq, const Catalog& catalog);

  const ARData& ar() const { return *ar_; }
  const BoundQuiver& bq() const { return *bq_; }
  const Catalog& catalog() const { return *catalog_; }
  const PairObject& object(std::size_t hat_vertex) const { return objects_[hat_vertex]; }
  const ArrowMorphism& arrow_morphism(std::size_t hat_arrow) const { return arrows_[hat_arrow]; }

  // res(Lambda(M)) at the arrow a of Q equals this scalar times M_a.
  const Rational& res_scalar(std::size_t q_arrow) const { return res_scalars_[q_arrow]; }

  // The H_Q morphism of a path of Q-hat, composed contravariantly.
  ArrowMorphism path_morphism(const Path& p) const;

 private:
  const ARData* ar_;
  const BoundQuiver* bq_;
  const Catalog* catalog_;
  std::vector<PairObject> objects_;
  std::vector<ExplicitResolution> resolutions_;  // module vertices only
  std::vector<ArrowMorphism> arrows_;
  std::vector<Rational> res_scalars_;

  void choose_arrows();
  void rescale();
};

FunctorRep lambda_functor(const LambdaContext& ctx, const Rep& m);
BoundRep lambda_explicit(const LambdaContext& ctx, const Rep& m);

// Composite of the matrices of `f` along a path.
Matrix path_composite(const BoundQuiver& bq, const BoundRep& f, const Path& p);

struct RelationCheck {
  bool ok = true;
  std::optional<std::size_t> witness;  // index of the first failing relation
};

RelationCheck check_relations(const BoundQuiver& bq, const BoundRep& f);

// As check_relations, and caches the result in f.relations_hold.
RelationCheck verify_relations(const BoundQuiver& bq, BoundRep& f);

// M_i = F([i]) and M_a the composite along res_path(a). Throws DomainError
// unless f.relations_hold.
Rep res_explicit(const BoundQuiver& bq, const Quiver& q, const BoundRep& f);

BoundRep direct_sum(const BoundRep& a, const BoundRep& b);

// F plus extra[v] copies of the simple at each vertex v, with zero canonical
// actions on the new summands.
FunctorRep add_simples(const BoundQuiver& bq, const FunctorRep& f, const std::vector<int>& extra);

struct F123 {
  FunctorRep f1;  // image of F(g)
  FunctorRep f2;  // F modulo the kernel of F(f)
  FunctorRep f3;  // image of F(g o f)
};

F123 f123(const BoundQuiver& bq, const FunctorRep& f);

struct HatOrbitData {
  HatDimVector dhat;
  long euler = 0;          // <dhat, dhat> for B_Q
  long end_kq = 0;         // dim End(M) over kQ
  long end_bound = 0;      // dim End(Lambda M) over Q-hat
  long orbit_dimension = 0;
};

HatOrbitData hat_orbit_data(const LambdaContext& ctx, const MultVector& m);

}  // namespace qhl
