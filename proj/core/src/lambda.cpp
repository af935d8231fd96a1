//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/lambda.hpp"

#include <algorithm>
#include <map>

#include "qhl/error.hpp"

namespace qhl {

namespace {

// Summand indices of (+)_a P_{summands[a]} that are nonzero at v.
std::vector<std::size_t> support_at(const Quiver& q, const std::vector<Vertex>& summands, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < summands.size(); ++a)
    if (q.has_path(summands[a], v)) out.push_back(a);
  return out;
}

Matrix flatten(const Morphism& phi) {
  std::size_t total = 0;
  for (const Matrix& m : phi) total += m.rows() * m.cols();
  Matrix out(total, 1);
  std::size_t k = 0;
  for (const Matrix& m : phi)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(k++, 0) = m(r, c);
  return out;
}

Matrix flatten(const Matrix& m) {
  Matrix out(m.rows() * m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r * m.cols() + c, 0) = m(r, c);
  return out;
}

Morphism compose(const Morphism& h, const Morphism& k) {
  Morphism out;
  for (std::size_t v = 0; v < h.size(); ++v) out.push_back(h[v] * k[v]);
  return out;
}

Matrix require(std::optional<Matrix> x, const char* what) {
  if (!x) throw InternalError(what);
  return std::move(*x);
}

// Top generators: a basis of a complement of sum_{a -> v} Im(maps[a]) in each
// space, expressed in its coordinates.
std::vector<std::pair<Vertex, Matrix>> top_generators(const ArrowShape& shape, const std::vector<int>& dims,
                                                      const std::vector<Matrix>& maps) {
  std::vector<std::pair<Vertex, Matrix>> out;
  for (Vertex v = 0; v < shape.num_vertices; ++v) {
    std::vector<Matrix> images;
    for (std::size_t a = 0; a < shape.arrows.size(); ++a)
      if (shape.arrows[a].second == v) images.push_back(maps[a]);
    Matrix rad = hstack(images, dims[v]);
    Matrix comp = complement_basis(column_basis(rad));
    for (std::size_t c = 0; c < comp.cols(); ++c) out.emplace_back(v, comp.column(c));
  }
  return out;
}

}  // namespace

Rep projective_rep(const Quiver& q, const std::vector<Vertex>& summands) {
  DimVector d(q.num_vertices());
  for (Vertex v = 0; v < q.num_vertices(); ++v) d[v] = static_cast<int>(support_at(q, summands, v).size());
  Rep p = zero_rep(q, d);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto src = support_at(q, summands, q.arrow(a).source);
    auto dst = support_at(q, summands, q.arrow(a).target);
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto it = std::find(dst.begin(), dst.end(), src[c]);
      p.maps[a](static_cast<std::size_t>(it - dst.begin()), c) = 1;
    }
  }
  return p;
}

Morphism materialize(const Quiver& q, const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                     const Matrix& f) {
  for (std::size_t b = 0; b < to.size(); ++b)
    for (std::size_t a = 0; a < from.size(); ++a)
      if (!is_zero(f(b, a)) && !q.has_path(to[b], from[a]))
        throw InternalError("scalar matrix is not a morphism of projectives");
  Morphism out;
  for (Vertex v = 0; v < q.num_vertices(); ++v) {
    auto cols = support_at(q, from, v);
    auto rows = support_at(q, to, v);
    out.push_back(f.select_rows(rows).select_columns(cols));
  }
  return out;
}

Matrix pullback(const Quiver& q, const Rep& m, const std::vector<Vertex>& from,
                const std::vector<Vertex>& to, const Matrix& f) {
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (Vertex x : from) row_off.push_back(row_off.back() + m.dims[x]);
  for (Vertex y : to) col_off.push_back(col_off.back() + m.dims[y]);
  Matrix out(row_off.back(), col_off.back());
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = 0; b < to.size(); ++b) {
      if (is_zero(f(b, a))) continue;
      out.set_block(row_off[a], col_off[b], path_matrix(q, m, to[b], from[a]).scaled(f(b, a)));
    }
  }
  return out;
}

ExplicitResolution min_proj_resolution_explicit(const ARData& ar, const Rep& u) {
  const Quiver& q = ar.quiver();
  validate_rep(q, u);
  auto idx = ar.of_dim(u.dims);
  if (!idx || hom_dimension(q, u, u) != 1) throw DomainError("representation is not indecomposable");
  if (ar.indec(*idx).projective) throw DomainError("resolution trivial: indecomposable is projective");
  const ArrowShape shape = shape_of(q);
  const std::size_t n = q.num_vertices();

  ExplicitResolution res;
  for (auto& [v, gen] : top_generators(shape, u.dims.entries(), u.maps)) {
    res.pair.top.push_back(v);
    res.generators.push_back(std::move(gen));
  }
  const auto& top = res.pair.top;

  // pi at v sends the summand b to U_{top[b] -> v} u_b; its kernel is the
  // syzygy, a subrepresentation of Q in the summand coordinates.
  std::vector<Matrix> kernel(n);
  std::vector<int> kdims(n);
  for (Vertex v = 0; v < n; ++v) {
    auto rows = support_at(q, top, v);
    Matrix pi(u.dims[v], rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
      pi.set_block(0, c, path_matrix(q, u, top[rows[c]], v) * res.generators[rows[c]]);
    kernel[v] = null_space(pi);
    kdims[v] = static_cast<int>(kernel[v].cols());
  }
  Rep cover = projective_rep(q, top);
  std::vector<Matrix> kmaps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arr = q.arrow(a);
    kmaps.push_back(require(solve(kernel[arr.target], cover.maps[a] * kernel[arr.source]),
                            "syzygy is not a subrepresentation"));
  }

  std::vector<std::pair<Vertex, Matrix>> ktop = top_generators(shape, kdims, kmaps);
  res.pair.iota = Matrix(top.size(), ktop.size());
  for (std::size_t c = 0; c < ktop.size(); ++c) {
    auto [x, k] = ktop[c];
    res.pair.syzygy.push_back(x);
    Matrix w = kernel[x] * k;
    auto rows = support_at(q, top, x);
    for (std::size_t r = 0; r < rows.size(); ++r) res.pair.iota(rows[r], c) = w(r, 0);
  }

  // The lift must be an isomorphism onto the syzygy.
  Morphism iota = materialize(q, res.pair.syzygy, top, res.pair.iota);
  for (Vertex v = 0; v < n; ++v) {
    if (iota[v].cols() != static_cast<std::size_t>(kdims[v]) || rank(iota[v]) != iota[v].cols()) {
      throw InternalError("syzygy lift is not an isomorphism");
    }
  }
  ProjectiveResolution mult = min_proj_resolution(ar, *idx);
  std::vector<int> top_count(n, 0), syz_count(n, 0);
  for (Vertex v : res.pair.top) ++top_count[v];
  for (Vertex v : res.pair.syzygy) ++syz_count[v];
  if (top_count != mult.top || syz_count != mult.syzygy) {
    throw InternalError("explicit resolution disagrees with the multiplicity count");
  }
  return res;
}

LambdaContext::LambdaContext(const ARData& ar, const BoundQuiver& bq, const Catalog& catalog)
    : ar_(&ar), bq_(&bq), catalog_(&catalog) {
  objects_.resize(bq.num_vertices());
  resolutions_.resize(bq.num_vertices());
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) {
    const auto& bv = bq.vertex(v);
    if (bv.kind == NodeKind::kFrame) {
      Vertex i = static_cast<Vertex>(bv.vertex);
      objects_[v] = {{i}, {i}, Matrix{{1}}};
    } else {
      resolutions_[v] = min_proj_resolution_explicit(ar, catalog.model(bv.indec));
      objects_[v] = resolutions_[v].pair;
    }
  }
  choose_arrows();
  rescale();

  const Quiver& q = ar.quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    ArrowMorphism m = path_morphism(res_path(bq, q, a));
    if (m.f_p.rows() != 1 || m.f_p.cols() != 1 || is_zero(m.f_p(0, 0))) {
      throw InternalError("res path of " + q.arrow(a).id + " does not restrict to the arrow");
    }
    res_scalars_.push_back(m.f_p(0, 0));
  }
}

ArrowMorphism LambdaContext::path_morphism(const Path& p) const {
  bq_->check_path(p);
  ArrowMorphism out = arrows_[p.front()];
  for (std::size_t k = 1; k < p.size(); ++k) {
    out.f_p = out.f_p * arrows_[p[k]].f_p;
    out.f_q = out.f_q * arrows_[p[k]].f_q;
  }
  return out;
}

void LambdaContext::choose_arrows() {
  const ARData& ar = *ar_;
  const Quiver& q = ar.quiver();
  const BoundQuiver& bq = *bq_;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Morphism>> homs;
  auto hom = [&](std::size_t x, std::size_t y) -> const std::vector<Morphism>& {
    auto it = homs.find({x, y});
    if (it == homs.end()) it = homs.emplace(std::make_pair(x, y), hom_space(q, catalog_->model(x), catalog_->model(y))).first;
    return it->second;
  };

  // An element of Hom(V, U) outside rad^2(V, U): the first basis element not
  // in the span of composites through a third indecomposable.
  auto irreducible = [&](std::size_t v, std::size_t u) -> Morphism {
    const auto& basis = hom(v, u);
    if (basis.empty()) throw InternalError("irreducible map with zero Hom space");
    if (basis.size() == 1) return basis[0];
    std::vector<Matrix> cols;
    for (const auto& phi : basis) cols.push_back(flatten(phi));
    Matrix flat = hstack(cols, cols.front().rows());
    std::vector<Matrix> rad2;
    for (std::size_t x = 0; x < ar.size(); ++x) {
      if (x == u || x == v) continue;
      for (const auto& k : hom(v, x))
        for (const auto& h : hom(x, u))
          rad2.push_back(require(solve(flat, flatten(compose(h, k))), "composite outside Hom space"));
    }
    Matrix comp = complement_basis(column_basis(hstack(rad2, basis.size())));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!is_zero(comp(k, 0))) return basis[k];
    throw InternalError("empty complement of rad^2");
  };

  // (f_p, f_q) lifting g : V -> U to the resolutions.
  auto lift = [&](std::size_t hv, std::size_t hu, const Morphism& g) -> ArrowMorphism {
    const ExplicitResolution& rv = resolutions_[hv];
    const ExplicitResolution& ru = resolutions_[hu];
    const Rep& mu = catalog_->model(bq.vertex(hu).indec);
    ArrowMorphism out{Matrix(ru.pair.syzygy.size(), rv.pair.syzygy.size()),
                      Matrix(ru.pair.top.size(), rv.pair.top.size())};
    for (std::size_t b = 0; b < rv.pair.top.size(); ++b) {
      Vertex y = rv.pair.top[b];
      std::vector<std::size_t> cands;
      std::vector<Matrix> cols;
      for (std::size_t c = 0; c < ru.pair.top.size(); ++c) {
        if (!q.has_path(ru.pair.top[c], y)) continue;
        cands.push_back(c);
        cols.push_back(path_matrix(q, mu, ru.pair.top[c], y) * ru.generators[c]);
      }
      Matrix x = require(solve(hstack(cols, mu.dims[y]), g[y] * rv.generators[b]), "top lift failed");
      for (std::size_t k = 0; k < cands.size(); ++k) out.f_q(cands[k], b) = x(k, 0);
    }
    Matrix rhs = out.f_q * rv.pair.iota;
    for (std::size_t c = 0; c < rv.pair.syzygy.size(); ++c) {
      std::vector<std::size_t> cands;
      for (std::size_t k = 0; k < ru.pair.syzygy.size(); ++k)
        if (q.has_path(ru.pair.syzygy[k], rv.pair.syzygy[c])) cands.push_back(k);
      Matrix x = require(solve(ru.pair.iota.select_columns(cands), rhs.column(c)), "syzygy lift failed");
      for (std::size_t k = 0; k < cands.size(); ++k) out.f_p(cands[k], c) = x(k, 0);
    }
    return out;
  };

  for (std::size_t a = 0; a < bq.num_arrows(); ++a) {
    const auto& arr = bq.arrow(a);
    const PairObject& x = objects_[arr.source];
    const PairObject& y = objects_[arr.target];
    switch (arr.kind) {
      case EdgeKind::kIrreducible: {
        std::size_t u = bq.vertex(arr.source).indec, v = bq.vertex(arr.target).indec;
        arrows_.push_back(lift(arr.target, arr.source, irreducible(v, u)));
        break;
      }
      case EdgeKind::kFrameOut: {
        // The top of S_i is P_i itself.
        if (y.top.size() != 1) throw InternalError("simple with a decomposable top");
        arrows_.push_back({Matrix{{1}} * y.iota, Matrix{{1}}});
        break;
      }
      case EdgeKind::kFrameIn: {
        Vertex j = static_cast<Vertex>(arr.from_vertex);
        if (std::count(x.syzygy.begin(), x.syzygy.end(), j) != 1) {
          throw InternalError("syzygy of tau^-1 S_j does not contain P_j exactly once");
        }
        Matrix f_p(x.syzygy.size(), 1);
        f_p(static_cast<std::size_t>(std::find(x.syzygy.begin(), x.syzygy.end(), j) - x.syzygy.begin()), 0) = 1;
        arrows_.push_back({f_p, x.iota * f_p});
        break;
      }
      default:
        throw InternalError("unexpected arrow kind in Q-hat");
    }
    // Sanity: f_q iota_Y = iota_X f_p and both are morphisms.
    const ArrowMorphism& m = arrows_.back();
    if (!(m.f_q * y.iota == x.iota * m.f_p)) throw InternalError("arrow representative does not commute");
    materialize(q, y.syzygy, x.syzygy, m.f_p);
    materialize(q, y.top, x.top, m.f_q);
  }
}

void LambdaContext::rescale() {
  const BoundQuiver& bq = *bq_;
  std::vector<std::size_t> order(bq.relations().size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bq.vertex(bq.relations()[a].source).indec > bq.vertex(bq.relations()[b].source).indec;
  });

  for (std::size_t r : order) {
    const Relation& rel = bq.relations()[r];
    std::vector<Matrix> cols;
    for (const auto& t : rel.terms) cols.push_back(flatten(path_morphism(t.path).f_q));
    Matrix ker = null_space(hstack(cols, cols.front().rows()));
    if (ker.cols() != 1) throw InternalError("relation at " + bq.vertex(rel.source).name + " is not unique");
    for (std::size_t t = 0; t < rel.terms.size(); ++t)
      if (is_zero(ker(t, 0))) throw InternalError("relation at " + bq.vertex(rel.source).name + " has a zero term");

    std::optional<std::size_t> k_term;
    for (std::size_t t = 0; t < rel.terms.size(); ++t)
      if (bq.arrow(rel.terms[t].path[0]).kind == EdgeKind::kFrameIn) k_term = t;
    for (std::size_t t = 0; t < rel.terms.size(); ++t) {
      if (k_term && t == *k_term) continue;
      Rational lambda = k_term ? Rational(-ker(t, 0) / ker(*k_term, 0)) : ker(t, 0);
      ArrowMorphism& second = arrows_[rel.terms[t].path[1]];
      second.f_p = second.f_p.scaled(lambda);
      second.f_q = second.f_q.scaled(lambda);
    }

    Matrix sum(cols.front().rows(), 1);
    for (const auto& t : rel.terms) sum = sum + flatten(path_morphism(t.path).f_q).scaled(t.coeff);
    if (!sum.is_zero()) throw InternalError("rescaling failed at " + bq.vertex(rel.source).name);
  }
}

FunctorRep lambda_functor(const LambdaContext& ctx, const Rep& m) {
  const Quiver& q = ctx.ar().quiver();
  const BoundQuiver& bq = ctx.bq();
  validate_rep(q, m);
  FunctorRep f;
  std::vector<Matrix> basis;
  for (std::size_t x = 0; x < bq.num_vertices(); ++x) {
    const PairObject& obj = ctx.object(x);
    Matrix istar = pullback(q, m, obj.syzygy, obj.top, obj.iota);
    Matrix b = column_basis(istar);
    f.rep.dims.push_back(static_cast<int>(b.cols()));
    f.g_action.push_back(require(solve(b, istar), "image basis does not span"));
    f.f_action.push_back(b);
    basis.push_back(std::move(b));
  }
  for (std::size_t a = 0; a < bq.num_arrows(); ++a) {
    const auto& arr = bq.arrow(a);
    Matrix r = pullback(q, m, ctx.object(arr.target).syzygy, ctx.object(arr.source).syzygy,
                        ctx.arrow_morphism(a).f_p);
    f.rep.maps.push_back(require(solve(basis[arr.target], r * basis[arr.source]),
                                 "arrow does not preserve the images"));
  }
  verify_relations(bq, f.rep);
  if (!f.rep.relations_hold) throw InternalError("Lambda image violates a relation");
  return f;
}

BoundRep lambda_explicit(const LambdaContext& ctx, const Rep& m) { return lambda_functor(ctx, m).rep; }

Matrix path_composite(const BoundQuiver& bq, const BoundRep& f, const Path& p) {
  bq.check_path(p);
  Matrix out = f.maps[p.front()];
  for (std::size_t k = 1; k < p.size(); ++k) out = f.maps[p[k]] * out;
  return out;
}

RelationCheck check_relations(const BoundQuiver& bq, const BoundRep& f) {
  for (std::size_t r = 0; r < bq.relations().size(); ++r) {
    const Relation& rel = bq.relations()[r];
    Matrix sum(f.dims[rel.target], f.dims[rel.source]);
    for (const auto& t : rel.terms) sum = sum + path_composite(bq, f, t.path).scaled(t.coeff);
    if (!sum.is_zero()) return {false, r};
  }
  return {};
}

RelationCheck verify_relations(const BoundQuiver& bq, BoundRep& f) {
  RelationCheck c = check_relations(bq, f);
  f.relations_hold = c.ok;
  return c;
}

Rep res_explicit(const BoundQuiver& bq, const Quiver& q, const BoundRep& f) {
  if (!f.relations_hold) throw DomainError("relations not verified; res is only defined on B_Q-modules");
  DimVector d(q.num_vertices());
  for (Vertex i = 0; i < q.num_vertices(); ++i) d[i] = f.dims[*bq.frame_vertex(static_cast<int>(i))];
  Rep m{d, {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) m.maps.push_back(path_composite(bq, f, res_path(bq, q, a)));
  return m;
}

namespace {

// Pads every matrix with zero rows/columns for the new dimensions.
BoundRep pad(const BoundQuiver& bq, const BoundRep& f, const std::vector<int>& dims) {
  BoundRep out{dims, {}, false};
  for (std::size_t a = 0; a < bq.num_arrows(); ++a) {
    Matrix m(dims[bq.arrow(a).target], dims[bq.arrow(a).source]);
    m.set_block(0, 0, f.maps[a]);
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace

BoundRep direct_sum(const BoundRep& a, const BoundRep& b) {
  BoundRep out;
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    Matrix m(a.maps[k].rows() + b.maps[k].rows(), a.maps[k].cols() + b.maps[k].cols());
    m.set_block(0, 0, a.maps[k]);
    m.set_block(a.maps[k].rows(), a.maps[k].cols(), b.maps[k]);
    out.maps.push_back(std::move(m));
  }
  out.relations_hold = a.relations_hold && b.relations_hold;
  return out;
}

FunctorRep add_simples(const BoundQuiver& bq, const FunctorRep& f, const std::vector<int>& extra) {
  FunctorRep out = f;
  for (std::size_t v = 0; v < extra.size(); ++v) {
    if (extra[v] < 0) throw DomainError("negative simple multiplicity");
    if (extra[v] == 0) continue;
    if (bq.vertex(v).kind != NodeKind::kModule) throw DomainError("simples are only added at [U] vertices");
    out.rep.dims[v] += extra[v];
    Matrix g(out.rep.dims[v], f.g_action[v].cols());
    g.set_block(0, 0, f.g_action[v]);
    out.g_action[v] = g;
    Matrix fa(f.f_action[v].rows(), out.rep.dims[v]);
    fa.set_block(0, 0, f.f_action[v]);
    out.f_action[v] = fa;
  }
  out.rep = pad(bq, f.rep, out.rep.dims);
  verify_relations(bq, out.rep);
  return out;
}

namespace {

FunctorRep image_of_g(const BoundQuiver& bq, const FunctorRep& f) {
  FunctorRep out;
  std::vector<Matrix> sub;
  for (std::size_t v = 0; v < f.rep.dims.size(); ++v) {
    Matrix s = column_basis(f.g_action[v]);
    out.rep.dims.push_back(static_cast<int>(s.cols()));
    out.g_action.push_back(require(solve(s, f.g_action[v]), "image basis"));
    out.f_action.push_back(f.f_action[v] * s);
    sub.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < bq.num_arrows(); ++a) {
    const auto& arr = bq.arrow(a);
    out.rep.maps.push_back(require(solve(sub[arr.target], f.rep.maps[a] * sub[arr.source]),
                                   "image of g is not a subfunctor"));
  }
  verify_relations(bq, out.rep);
  return out;
}

FunctorRep quotient_by_f(const BoundQuiver& bq, const FunctorRep& f) {
  FunctorRep out;
  std::vector<Matrix> kernels, complements, projections;
  for (std::size_t v = 0; v < f.rep.dims.size(); ++v) {
    const std::size_t d = f.rep.dims[v];
    Matrix k = null_space(f.f_action[v]);
    Matrix c = complement_basis(k);
    std::vector<Matrix> parts{c, k};
    Matrix coords = require(solve(hstack(parts, d), Matrix::identity(d)), "quotient coordinates");
    std::vector<std::size_t> keep(c.cols());
    for (std::size_t r = 0; r < keep.size(); ++r) keep[r] = r;
    Matrix proj = coords.select_rows(keep);
    out.rep.dims.push_back(static_cast<int>(c.cols()));
    out.g_action.push_back(proj * f.g_action[v]);
    out.f_action.push_back(f.f_action[v] * c);
    kernels.push_back(std::move(k));
    complements.push_back(std::move(c));
    projections.push_back(std::move(proj));
  }
  for (std::size_t a = 0; a < bq.num_arrows(); ++a) {
    const auto& arr = bq.arrow(a);
    if (!(projections[arr.target] * f.rep.maps[a] * kernels[arr.source]).is_zero()) {
      throw InternalError("kernel of f is not a subfunctor");
    }
    out.rep.maps.push_back(projections[arr.target] * f.rep.maps[a] * complements[arr.source]);
  }
  verify_relations(bq, out.rep);
  return out;
}

}  // namespace

F123 f123(const BoundQuiver& bq, const FunctorRep& f) {
  if (f.g_action.size() != f.rep.dims.size() || f.f_action.size() != f.rep.dims.size()) {
    throw DomainError("functor representation lacks its canonical actions");
  }
  F123 out{image_of_g(bq, f), quotient_by_f(bq, f), {}};
  out.f3 = quotient_by_f(bq, out.f1);
  FunctorRep other = image_of_g(bq, out.f2);
  if (other.rep.dims != out.f3.rep.dims) throw InternalError("(F1)_2 and (F2)_1 differ");
  return out;
}

HatOrbitData hat_orbit_data(const LambdaContext& ctx, const MultVector& m) {
  const ARData& ar = ctx.ar();
  HatOrbitData out;
  out.dhat = hat_dim(ar, m);
  out.euler = euler_form_bq(ctx.bq(), out.dhat, out.dhat);
  out.end_kq = hom_dim(ar, m, m);
  BoundRep lam = lambda_explicit(ctx, realize(ar, ctx.catalog(), m));
  out.end_bound = static_cast<long>(hom_dimension(shape_of(ctx.bq()), lam.dims, lam.maps, lam.dims, lam.maps));
  out.orbit_dimension = orbit_dim(ar, m);
  return out;
}

}  // namespace qhl
