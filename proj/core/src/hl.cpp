//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/hl.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "qhl/error.hpp"

namespace qhl {

namespace {

std::string degree_suffix(int p) { return "(" + std::to_string(p) + ")"; }

std::string ladder_name(Vertex i, Vertex j, int p, std::size_t n) {
  std::string sep = n >= 10 ? "," : "";
  return "B_" + vertex_label(i) + sep + vertex_label(j) + degree_suffix(p);
}

using ArrowKey = std::tuple<EdgeKind, int, int, int>;

std::map<ArrowKey, std::size_t> index_arrows(const BoundQuiver& hl) {
  std::map<ArrowKey, std::size_t> out;
  for (std::size_t a = 0; a < hl.num_arrows(); ++a) {
    const auto& arr = hl.arrow(a);
    out[{arr.kind, arr.from_vertex, arr.to_vertex, arr.degree}] = a;
  }
  return out;
}

std::vector<Relation> build_relations(const BoundQuiver& hl, const SignMap* eps) {
  auto arrows = index_arrows(hl);
  std::map<std::pair<int, int>, std::size_t> module;
  int n = 0;
  for (std::size_t v = 0; v < hl.num_vertices(); ++v) {
    const auto& bv = hl.vertex(v);
    if (bv.kind == NodeKind::kModule) module[{bv.vertex, bv.degree}] = v;
    n = std::max(n, bv.vertex + 1);
  }
  auto find = [&](EdgeKind k, int from, int to, int p) -> std::optional<std::size_t> {
    auto it = arrows.find({k, from, to, p});
    if (it == arrows.end()) return std::nullopt;
    return it->second;
  };

  std::vector<Relation> out;
  for (const auto& [key, top] : module) {
    auto [i, p] = key;
    auto bottom = module.find({i, p - 2});
    if (bottom == module.end()) continue;
    Relation rel{top, bottom->second, {}};
    auto b = find(EdgeKind::kHlB, i, -1, p);
    auto a = find(EdgeKind::kHlA, i, -1, p - 1);
    if (a && b) rel.terms.push_back({Rational(1), {*b, *a}});
    for (int j = 0; j < n; ++j) {
      auto down = find(EdgeKind::kHlLadder, i, j, p);
      auto back = find(EdgeKind::kHlLadder, j, i, p - 1);
      if (!down || !back) continue;
      int sign = 1;
      if (eps != nullptr) {
        auto it = eps->find({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        if (it == eps->end()) throw DomainError("missing sign for an adjacent pair");
        sign = it->second;
      }
      rel.terms.push_back({Rational(-sign), {*down, *back}});
    }
    if (!rel.terms.empty()) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

std::optional<PhiValue> PhiTable::at(Vertex j, int p) const {
  auto it = entries.find({j, p});
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

namespace {

struct PhiStep {
  DimVector beta;
  int level;
};

PhiStep step(const RootSystem& rs, const CoxeterWord& c, const PhiStep& at, Direction dir) {
  DimVector next = coxeter_apply(rs, c, at.beta, dir);
  if (next.is_nonnegative()) return {next, at.level};
  return {-next, at.level + (dir == Direction::kForward ? -1 : 1)};
}

// Walks from (j, xi_j) downward while `down(p, level)` and upward while
// `up(p, level)` hold for the entry just produced.
template <typename Down, typename Up>
void walk(PhiTable& t, const RootSystem& rs, const CoxeterWord& c, Vertex j, const DimVector& gamma,
          Down down, Up up) {
  const int p0 = t.xi.xi[j];
  for (auto dir : {Direction::kForward, Direction::kInverse}) {
    PhiStep at{gamma, 0};
    int p = p0;
    while (dir == Direction::kForward ? down(p, at.level) : up(p, at.level)) {
      at = step(rs, c, at, dir);
      p += dir == Direction::kForward ? -2 : 2;
      t.entries[{j, p}] = {*rs.index_of(at.beta), at.level};
    }
  }
}

}  // namespace

PhiTable phi_table(const Quiver& q, const HeightFunction& xi, int window) {
  if (window < 1) throw DomainError("phi window must be at least 1");
  validate_height_function(q, xi);
  RootSystem rs(q);
  CoxeterWord c = adapted_coxeter(q);
  auto gamma = gamma_roots(q);

  PhiTable t{xi, {}, -window, window};
  for (Vertex j = 0; j < q.num_vertices(); ++j) {
    t.entries[{j, xi.xi[j]}] = {*rs.index_of(gamma[j]), 0};
    walk(t, rs, c, j, gamma[j], [&](int, int level) { return level > -window; },
         [&](int, int level) { return level < window; });
  }
  return t;
}

PhiTable phi_table_range(const Quiver& q, const HeightFunction& xi, int min_degree, int max_degree) {
  validate_height_function(q, xi);
  RootSystem rs(q);
  CoxeterWord c = adapted_coxeter(q);
  auto gamma = gamma_roots(q);

  PhiTable t{xi, {}, 0, 0};
  for (Vertex j = 0; j < q.num_vertices(); ++j) {
    t.entries[{j, xi.xi[j]}] = {*rs.index_of(gamma[j]), 0};
    walk(t, rs, c, j, gamma[j], [&](int p, int) { return p - 2 >= min_degree; },
         [&](int p, int) { return p + 2 <= max_degree; });
  }
  for (auto it = t.entries.begin(); it != t.entries.end();) {
    int p = it->first.second;
    it = (p < min_degree || p > max_degree) ? t.entries.erase(it) : std::next(it);
  }
  t.min_level = t.max_level = 0;
  for (const auto& [key, v] : t.entries) {
    t.min_level = std::min(t.min_level, v.level);
    t.max_level = std::max(t.max_level, v.level);
  }
  return t;
}

std::pair<int, int> degree_range(const PhiTable& t) {
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& [key, v] : t.entries) {
    lo = std::min(lo, key.second);
    hi = std::max(hi, key.second);
  }
  return {lo, hi};
}

std::string hl_vertex_name(char kind, Vertex j, int p) {
  return std::string(1, kind) + "_" + vertex_label(j) + degree_suffix(p);
}

BoundQuiver hl_quiver(const Quiver& q, const PhiTable& t) {
  RootSystem rs(q);
  const std::size_t n = q.num_vertices();
  BoundQuiver hl;
  std::map<std::pair<Vertex, int>, std::size_t> w, v;

  auto level0 = [&](Vertex j, int p) {
    auto e = t.at(j, p);
    return e && e->level == 0;
  };

  // Vertices: per j, by decreasing p, w before v.
  for (Vertex j = 0; j < n; ++j) {
    std::vector<int> degrees;
    for (const auto& [key, val] : t.entries)
      if (key.first == j) degrees.push_back(key.second);
    std::sort(degrees.rbegin(), degrees.rend());
    for (int p : degrees) {
      auto e = *t.at(j, p);
      if (e.level == 0 && rs.is_simple(e.root)) {
        w[{j, p}] = hl.add_vertex({hl_vertex_name('w', j, p), NodeKind::kFrame,
                                   static_cast<int>(j), -1, p});
      }
      if (level0(j, p) && level0(j, p - 2)) {
        v[{j, p - 1}] = hl.add_vertex({hl_vertex_name('v', j, p - 1), NodeKind::kModule,
                                       static_cast<int>(j), -1, p - 1});
      }
    }
  }

  for (const auto& [key, src] : w) {
    auto [j, p] = key;
    auto dst = v.find({j, p - 1});
    if (dst == v.end()) continue;
    hl.add_arrow({"a_" + vertex_label(j) + degree_suffix(p), src, dst->second, EdgeKind::kHlA,
                  static_cast<int>(j), -1, p});
  }
  for (const auto& [key, src] : v) {
    auto [j, p] = key;
    auto dst = w.find({j, p - 1});
    if (dst == w.end()) continue;
    hl.add_arrow({"b_" + vertex_label(j) + degree_suffix(p), src, dst->second, EdgeKind::kHlB,
                  static_cast<int>(j), -1, p});
  }
  for (const auto& [key, src] : v) {
    auto [i, p] = key;
    for (Vertex j : q.neighbors(i)) {
      auto dst = v.find({j, p - 1});
      if (dst == v.end()) continue;
      hl.add_arrow({ladder_name(i, j, p, n), src, dst->second, EdgeKind::kHlLadder,
                    static_cast<int>(i), static_cast<int>(j), p});
    }
  }
  for (auto& r : build_relations(hl, nullptr)) hl.add_relation(std::move(r));
  return hl;
}

SignMap default_signs(const Quiver& q) {
  SignMap eps;
  for (const auto& a : q.arrows()) {
    Vertex lo = std::min(a.source, a.target), hi = std::max(a.source, a.target);
    eps[{lo, hi}] = -1;
    eps[{hi, lo}] = 1;
  }
  return eps;
}

std::vector<Relation> hl_relations(const BoundQuiver& hl) { return build_relations(hl, nullptr); }

std::vector<Relation> hl_relations(const BoundQuiver& hl, const SignMap& eps) {
  return build_relations(hl, &eps);
}

ArrowTwist resolve_signs(const BoundQuiver& hl, const SignMap& eps) {
  std::vector<const BoundArrow*> ladders;
  for (const auto& a : hl.arrows())
    if (a.kind == EdgeKind::kHlLadder) ladders.push_back(&a);
  std::stable_sort(ladders.begin(), ladders.end(),
                   [](const BoundArrow* x, const BoundArrow* y) { return x->degree > y->degree; });

  ArrowTwist twist;
  for (const BoundArrow* a : ladders) {
    Vertex x = a->from_vertex, y = a->to_vertex;
    int q = a->degree;
    // B_xy(q) follows B_yx(q+1) in the ladder of {x, y}.
    auto prev = twist.find({y, x, q + 1});
    int sign = 1;
    if (prev != twist.end()) {
      auto e = eps.find({y, x});
      if (e == eps.end()) throw DomainError("missing sign for an adjacent pair");
      sign = e->second * prev->second;
    }
    twist[{x, y, q}] = sign;
  }
  return twist;
}

std::vector<Relation> apply_twist(const BoundQuiver& hl, const std::vector<Relation>& relations,
                                  const ArrowTwist& twist) {
  std::vector<Relation> out = relations;
  for (auto& r : out) {
    for (auto& term : r.terms) {
      for (std::size_t a : term.path) {
        const auto& arr = hl.arrow(a);
        if (arr.kind != EdgeKind::kHlLadder) continue;
        auto it = twist.find({static_cast<Vertex>(arr.from_vertex),
                              static_cast<Vertex>(arr.to_vertex), arr.degree});
        if (it == twist.end()) throw InternalError("ladder arrow without a twist sign");
        term.coeff *= it->second;
      }
    }
  }
  return out;
}

}  // namespace qhl
