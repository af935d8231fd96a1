//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/bq_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qhl/error.hpp"
#include "qhl/matrix.hpp"

namespace qhl {

std::string hat_vertex_name(const ARData& ar, std::size_t indec) {
  return "[" + ar.roots().name(ar.indec(indec).root) + "]";
}

BoundQuiver build_hat_quiver(const ARData& ar) {
  const Quiver& q = ar.quiver();
  const std::size_t n = q.num_vertices();
  BoundQuiver bq;
  for (Vertex i = 0; i < n; ++i)
    bq.add_vertex({"[" + vertex_label(i) + "]", NodeKind::kFrame, static_cast<int>(i), -1, 0});
  for (std::size_t u : ar.nonprojectives())
    bq.add_vertex({hat_vertex_name(ar, u), NodeKind::kModule, -1, static_cast<int>(u), 0});

  auto add = [&](std::size_t s, std::size_t t, EdgeKind kind, int qv) {
    bq.add_arrow({bq.vertex(s).name + "->" + bq.vertex(t).name, s, t, kind, qv, -1, 0});
  };
  // [U] -> [V] for an irreducible map V -> U, grouped by U.
  for (std::size_t u : ar.nonprojectives()) {
    for (std::size_t v : ar.indec(u).preds) {
      if (ar.indec(v).projective) continue;
      add(*bq.module_vertex(static_cast<int>(u)), *bq.module_vertex(static_cast<int>(v)),
          EdgeKind::kIrreducible, -1);
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    if (q.is_sink(i)) continue;
    add(i, *bq.module_vertex(static_cast<int>(ar.simple(i))), EdgeKind::kFrameOut,
        static_cast<int>(i));
  }
  for (Vertex i = 0; i < n; ++i) {
    if (q.is_source(i)) continue;
    auto u = ar.indec(ar.simple(i)).tau_inv;
    if (!u) throw InternalError("simple at a non-source vertex has no inverse translate");
    add(*bq.module_vertex(static_cast<int>(*u)), i, EdgeKind::kFrameIn, static_cast<int>(i));
  }

  for (std::size_t u : ar.nonprojectives()) {
    std::size_t t = *ar.indec(u).tau;
    if (ar.indec(t).projective) continue;
    std::size_t src = *bq.module_vertex(static_cast<int>(u));
    std::size_t dst = *bq.module_vertex(static_cast<int>(t));
    Relation rel{src, dst, {}};
    for (std::size_t k = 0; k < bq.num_vertices(); ++k) {
      if (bq.vertex(k).kind != NodeKind::kFrame) continue;
      auto first = bq.arrows_between(src, k);
      auto second = bq.arrows_between(k, dst);
      if (!first.empty() && !second.empty()) rel.terms.push_back({Rational(1), {first[0], second[0]}});
    }
    const bool commutativity = !rel.terms.empty();
    for (std::size_t x : ar.mesh(u)) {
      if (ar.indec(x).projective) continue;
      std::size_t mid = *bq.module_vertex(static_cast<int>(x));
      rel.terms.push_back({Rational(commutativity ? -1 : 1),
                           {bq.arrows_between(src, mid).at(0), bq.arrows_between(mid, dst).at(0)}});
    }
    if (rel.terms.empty()) throw InternalError("empty relation at " + bq.vertex(src).name);
    bq.add_relation(std::move(rel));
  }
  if (!bq.is_acyclic()) throw InternalError("Q-hat has an oriented cycle");
  return bq;
}

HlIsomorphism check_hl_iso(const ARData& ar, const BoundQuiver& bq, const BoundQuiver& hl,
                           const PhiTable& t) {
  const RootSystem& rs = ar.roots();
  std::vector<std::string> problems;
  HlIsomorphism iso;
  iso.vertex_map.assign(hl.num_vertices(), 0);
  std::vector<int> hit(bq.num_vertices(), -1);
  auto fail = [&problems]() {
    std::string msg = "HL quiver and Q-hat are not isomorphic:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InternalError(msg);
  };

  for (std::size_t v = 0; v < hl.num_vertices(); ++v) {
    const auto& hv = hl.vertex(v);
    Vertex j = static_cast<Vertex>(hv.vertex);
    int p = hv.kind == NodeKind::kFrame ? hv.degree : hv.degree + 1;
    auto e = t.at(j, p);
    std::optional<std::size_t> image;
    if (!e || e->level != 0) {
      problems.push_back(hv.name + ": no level-0 value");
    } else if (hv.kind == NodeKind::kFrame) {
      if (!rs.is_simple(e->root)) {
        problems.push_back(hv.name + ": value is not a simple root");
      } else {
        for (Vertex i = 0; i < rs.rank(); ++i)
          if (rs.simple(i) == e->root) image = bq.frame_vertex(static_cast<int>(i));
      }
    } else {
      image = bq.module_vertex(static_cast<int>(ar.of_root(e->root)));
      if (!image) problems.push_back(hv.name + ": " + rs.name(e->root) + " is projective");
    }
    if (!image) continue;
    if (hit[*image] >= 0) {
      problems.push_back(hv.name + " and " + hl.vertex(hit[*image]).name + " both map to " +
                         bq.vertex(*image).name);
    }
    hit[*image] = static_cast<int>(v);
    iso.vertex_map[v] = *image;
  }
  for (std::size_t w = 0; w < bq.num_vertices(); ++w)
    if (hit[w] < 0) problems.push_back(bq.vertex(w).name + " is not hit");
  if (!problems.empty()) fail();

  // Arrows: multiplicities between every ordered pair must agree.
  iso.arrow_map.assign(hl.num_arrows(), 0);
  {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> hat_arrows;
    for (std::size_t a = 0; a < bq.num_arrows(); ++a)
      hat_arrows[{bq.arrow(a).source, bq.arrow(a).target}].push_back(a);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> hl_arrows;
    for (std::size_t a = 0; a < hl.num_arrows(); ++a) {
      hl_arrows[{iso.vertex_map[hl.arrow(a).source], iso.vertex_map[hl.arrow(a).target]}].push_back(a);
    }
    for (const auto& [key, list] : hl_arrows) {
      auto it = hat_arrows.find(key);
      std::size_t have = it == hat_arrows.end() ? 0 : it->second.size();
      if (have != list.size()) {
        problems.push_back("arrow " + hl.arrow(list[0]).id + " maps to " + bq.vertex(key.first).name +
                           "->" + bq.vertex(key.second).name + " with multiplicity " +
                           std::to_string(list.size()) + " vs " + std::to_string(have));
        continue;
      }
      for (std::size_t k = 0; k < list.size(); ++k) iso.arrow_map[list[k]] = it->second[k];
    }
    for (const auto& [key, list] : hat_arrows) {
      if (!hl_arrows.count(key)) problems.push_back("arrow " + bq.arrow(list[0]).id + " is not hit");
    }
  }
  if (!problems.empty()) fail();

  if (hl.relations().size() != bq.relations().size()) {
    problems.push_back("relation counts differ: " + std::to_string(hl.relations().size()) + " vs " +
                       std::to_string(bq.relations().size()));
  }
  for (const auto& r : hl.relations()) {
    Relation image{iso.vertex_map[r.source], iso.vertex_map[r.target], {}};
    for (const auto& term : r.terms) {
      Path p;
      for (std::size_t a : term.path) p.push_back(iso.arrow_map[a]);
      image.terms.push_back({term.coeff, p});
    }
    bool found = std::any_of(bq.relations().begin(), bq.relations().end(),
                             [&](const Relation& s) { return proportional(image, s); });
    if (!found) {
      problems.push_back("relation " + hl.vertex(r.source).name + " -> " + hl.vertex(r.target).name +
                         " has no counterpart");
    }
  }
  if (!problems.empty()) fail();
  return iso;
}

std::string to_string(const HatDimVector& d) { return to_string(DimVector(d.entries)); }

HatDimVector hat_dim(const ARData& ar, const MultVector& m) {
  const std::size_t n = ar.quiver().num_vertices();
  DimVector d = dimension(ar, m);
  HatDimVector out;
  for (Vertex i = 0; i < n; ++i) out.entries.push_back(d[i]);
  for (std::size_t u : ar.nonprojectives()) {
    auto res = min_proj_resolution(ar, u);
    long v = -hom_dim(ar, u, m);
    for (Vertex i = 0; i < n; ++i) v += static_cast<long>(res.top[i]) * d[i];
    out.entries.push_back(static_cast<int>(v));
  }
  return out;
}

std::string to_string(Degeneration d) {
  switch (d) {
    case Degeneration::kEqual: return "equal";
    case Degeneration::kLessOrEqual: return "less_or_equal";
    case Degeneration::kGreater: return "greater";
    case Degeneration::kIncomparable: return "incomparable";
  }
  return "";
}

bool degenerates_to(const ARData& ar, const MultVector& m, const MultVector& n) {
  if (dimension(ar, m) != dimension(ar, n)) {
    throw DomainError("degeneration test needs equal dimension vectors");
  }
  for (std::size_t u : ar.nonprojectives())
    if (hom_dim(ar, u, m) > hom_dim(ar, u, n)) return false;
  return true;
}

Degeneration degeneration_leq(const ARData& ar, const MultVector& m, const MultVector& n) {
  bool down = degenerates_to(ar, m, n);
  bool up = degenerates_to(ar, n, m);
  if (down && up) return Degeneration::kEqual;
  if (down) return Degeneration::kLessOrEqual;
  if (up) return Degeneration::kGreater;
  return Degeneration::kIncomparable;
}

long euler_form_bq(const BoundQuiver& bq, const HatDimVector& a, const HatDimVector& b) {
  if (a.size() != bq.num_vertices() || b.size() != bq.num_vertices()) {
    throw DomainError("dimension vector does not match the quiver");
  }
  long s = 0;
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) s += static_cast<long>(a[v]) * b[v];
  for (const auto& arr : bq.arrows()) s -= static_cast<long>(a[arr.source]) * b[arr.target];
  for (const auto& r : bq.relations()) s += static_cast<long>(a[r.source]) * b[r.target];
  return s;
}

DeframedQuiver deframed_quiver(const BoundQuiver& bq, const DimVector& d,
                               const std::optional<HatDimVector>& hat) {
  DeframedQuiver out;
  std::vector<std::optional<std::size_t>> image(bq.num_vertices());
  std::vector<int> dims;
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) {
    if (bq.vertex(v).kind != NodeKind::kModule) continue;
    image[v] = out.quiver.add_vertex(bq.vertex(v));
    if (hat) dims.push_back((*hat)[v]);
  }
  out.infinity = out.quiver.add_vertex({"inf", NodeKind::kInfinity, -1, -1, 0});
  if (hat) dims.push_back(1);

  for (const auto& a : bq.arrows()) {
    if (a.kind == EdgeKind::kIrreducible) {
      out.quiver.add_arrow({a.id, *image[a.source], *image[a.target], a.kind, -1, -1, 0});
      continue;
    }
    int i = a.from_vertex;
    if (i < 0 || static_cast<std::size_t>(i) >= d.size()) throw DomainError("dimension vector too short");
    for (int k = 0; k < d[i]; ++k) {
      std::string suffix = "#" + std::to_string(k + 1);
      if (a.kind == EdgeKind::kFrameOut) {
        const auto& t = out.quiver.vertex(*image[a.target]);
        out.quiver.add_arrow({"inf->" + t.name + suffix, out.infinity, *image[a.target],
                              EdgeKind::kFraming, i, -1, 0});
      } else {
        const auto& s = out.quiver.vertex(*image[a.source]);
        out.quiver.add_arrow({s.name + "->inf" + suffix, *image[a.source], out.infinity,
                              EdgeKind::kFraming, i, -1, 0});
      }
    }
  }
  if (hat) out.dims = std::move(dims);
  return out;
}

bool path_in_ideal(const BoundQuiver& bq, const Path& p) {
  bq.check_path(p);
  const std::size_t from = bq.path_source(p), to = bq.path_target(p);
  std::vector<Path> all = bq.paths(from, to);
  std::map<Path, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index[all[k]] = k;

  // Paths s ~> t including the trivial one when s == t.
  auto paths_or_trivial = [&](std::size_t s, std::size_t t) {
    std::vector<Path> out = bq.paths(s, t);
    if (s == t) out.insert(out.begin(), Path{});
    return out;
  };
  std::vector<Matrix> generators;
  for (const Relation& r : bq.relations()) {
    for (const Path& u : paths_or_trivial(from, r.source)) {
      for (const Path& v : paths_or_trivial(r.target, to)) {
        Matrix element(all.size(), 1);
        for (const auto& term : r.terms) {
          Path full = u;
          full.insert(full.end(), term.path.begin(), term.path.end());
          full.insert(full.end(), v.begin(), v.end());
          element(index.at(full), 0) += term.coeff;
        }
        generators.push_back(std::move(element));
      }
    }
  }
  if (generators.empty()) return false;
  Matrix span = hstack(generators, all.size());
  Matrix target(all.size(), 1);
  target(index.at(p), 0) = 1;
  return solve(span, target).has_value();
}

Path res_path(const BoundQuiver& bq, const Quiver& q, std::size_t q_arrow) {
  const Arrow& alpha = q.arrow(q_arrow);
  std::size_t from = *bq.frame_vertex(static_cast<int>(alpha.source));
  std::size_t to = *bq.frame_vertex(static_cast<int>(alpha.target));
  std::optional<std::size_t> out_arrow, in_arrow;
  for (std::size_t a : bq.out_arrows(from))
    if (bq.arrow(a).kind == EdgeKind::kFrameOut) out_arrow = a;
  for (std::size_t a : bq.in_arrows(to))
    if (bq.arrow(a).kind == EdgeKind::kFrameIn) in_arrow = a;
  if (!out_arrow || !in_arrow) throw InternalError("frame arrows missing for " + alpha.id);
  std::size_t start = bq.arrow(*out_arrow).target;
  std::size_t goal = bq.arrow(*in_arrow).source;

  // Candidates run through the module layer only; a shortest nonzero one is
  // wanted, so order by length and then by arrow indices.
  std::vector<Path> candidates;
  for (const Path& middle : start == goal ? std::vector<Path>{Path{}} : bq.paths(start, goal)) {
    bool inner = std::all_of(middle.begin(), middle.end(),
                             [&](std::size_t a) { return bq.arrow(a).kind == EdgeKind::kIrreducible; });
    if (!inner) continue;
    Path full{*out_arrow};
    full.insert(full.end(), middle.begin(), middle.end());
    full.push_back(*in_arrow);
    candidates.push_back(std::move(full));
  }
  std::sort(candidates.begin(), candidates.end(), [](const Path& a, const Path& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const Path& c : candidates)
    if (!path_in_ideal(bq, c)) return c;
  throw InternalError("no nonzero res path for arrow " + alpha.id);
}

std::vector<std::vector<Path>> invariant_generator_paths(const BoundQuiver& bq, const Quiver& q) {
  std::vector<std::vector<Path>> out;
  for (const auto& alpha : q.arrows()) {
    out.push_back(bq.paths(*bq.frame_vertex(static_cast<int>(alpha.source)),
                           *bq.frame_vertex(static_cast<int>(alpha.target))));
  }
  return out;
}

std::vector<MultVector> enumerate_classes(const ARData& ar, const DimVector& d, int max_total) {
  if (!d.is_nonnegative()) throw DomainError("dimension vector has a negative entry");
  if (d.total() > max_total) {
    throw DomainError("total dimension " + std::to_string(d.total()) + " exceeds the cap " +
                      std::to_string(max_total));
  }
  const RootSystem& rs = ar.roots();
  std::vector<MultVector> out;
  MultVector m = zero_mult(ar);
  auto rec = [&](auto&& self, std::size_t r, DimVector rest) -> void {
    if (rest.is_zero()) {
      out.push_back(m);
      return;
    }
    if (r == rs.size()) return;
    const DimVector& beta = rs.root(r);
    int k = 0;
    for (DimVector left = rest; left.is_nonnegative(); left = left - beta, ++k) {
      m[r] = k;
      self(self, r + 1, left);
    }
    m[r] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qhl
