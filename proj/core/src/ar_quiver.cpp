//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/ar_quiver.hpp"

#include <algorithm>

#include "qhl/error.hpp"

namespace qhl {

ARData::ARData(const Quiver& q) : quiver_(q), roots_(q), coxeter_(adapted_coxeter(q)) {
  knit();
  compute_hom();
  check_invariants();
}

void ARData::knit() {
  const std::size_t n = quiver_.num_vertices();
  for (Vertex i = 0; i < n; ++i) {
    Indecomposable p;
    p.dim = DimVector(n);
    for (Vertex j = 0; j < n; ++j) p.dim[j] = quiver_.has_path(i, j) ? 1 : 0;
    p.projective = true;
    nodes_.push_back(std::move(p));
    projective_.push_back(i);
  }
  // rad P_i = (+)_{i->k} P_k gives irreducible maps P_k -> P_i.
  for (const auto& a : quiver_.arrows()) {
    nodes_[a.target].succs.push_back(a.source);
    nodes_[a.source].preds.push_back(a.target);
  }

  std::vector<bool> done;
  while (true) {
    done.resize(nodes_.size(), false);
    std::optional<std::size_t> ready;
    for (std::size_t x = 0; x < nodes_.size() && !ready; ++x) {
      if (done[x]) continue;
      bool ok = std::all_of(nodes_[x].preds.begin(), nodes_[x].preds.end(),
                            [&](std::size_t p) { return done[p]; });
      if (ok) ready = x;
    }
    if (!ready) break;
    const std::size_t x = *ready;
    done[x] = true;

    DimVector next = -nodes_[x].dim;
    for (std::size_t m : nodes_[x].succs) next = next + nodes_[m].dim;
    const bool inverse_negative =
        coxeter_apply(roots_, coxeter_, nodes_[x].dim, Direction::kInverse).is_nonpositive();

    if (roots_.is_positive_root(next)) {
      if (inverse_negative) {
        throw InternalError("knitting produced tau^-1 of " + to_string(nodes_[x].dim) +
                            " although C^-1 sends it to a negative root");
      }
      if (coxeter_apply(roots_, coxeter_, next, Direction::kForward) != nodes_[x].dim) {
        throw InternalError("knitted tau^-1 " + to_string(next) + " disagrees with C^-1");
      }
      Indecomposable u;
      u.dim = next;
      u.tau = x;
      u.preds = nodes_[x].succs;
      std::size_t idx = nodes_.size();
      for (std::size_t m : u.preds) nodes_[m].succs.push_back(idx);
      nodes_[x].tau_inv = idx;
      nodes_.push_back(std::move(u));
    } else {
      if (!inverse_negative) {
        throw InternalError("knitting stopped at " + to_string(nodes_[x].dim) +
                            " but C^-1 keeps it positive");
      }
      nodes_[x].injective = true;
    }
  }
  if (nodes_.size() != roots_.size()) {
    throw InternalError("knitting produced " + std::to_string(nodes_.size()) +
                        " indecomposables, expected " + std::to_string(roots_.size()));
  }
  by_root_.assign(roots_.size(), 0);
  std::vector<bool> hit(roots_.size(), false);
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    auto r = roots_.index_of(nodes_[u].dim);
    if (!r || hit[*r]) throw InternalError("knitted dimension vectors are not the positive roots");
    hit[*r] = true;
    nodes_[u].root = *r;
    by_root_[*r] = u;
  }
}

void ARData::compute_hom() {
  const std::size_t count = nodes_.size();
  hom_.assign(count * count, 0);
  std::vector<int> h(count);
  for (std::size_t target = 0; target < count; ++target) {
    const DimVector& dn = nodes_[target].dim;
    for (std::size_t x = 0; x < count; ++x) {
      const Indecomposable& node = nodes_[x];
      if (node.projective) {
        h[x] = dn[projective_vertex_of(x)];
        continue;
      }
      int s = 0;
      for (std::size_t m : node.preds) s += h[m];
      s -= h[*node.tau];
      if (*node.tau == target) s += 1;
      h[x] = s;
    }
    for (std::size_t x = 0; x < count; ++x) hom_[x * count + target] = h[x];
  }
}

std::size_t ARData::projective_vertex_of(std::size_t u) const {
  for (Vertex i = 0; i < projective_.size(); ++i)
    if (projective_[i] == u) return i;
  throw InternalError("not a projective indecomposable");
}

void ARData::check_invariants() const {
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    const Indecomposable& node = nodes_[u];
    const bool c_negative =
        coxeter_apply(roots_, coxeter_, node.dim, Direction::kForward).is_nonpositive();
    if (node.projective != c_negative) {
      throw InternalError("projectivity of " + to_string(node.dim) + " disagrees with the Coxeter criterion");
    }
    if (!node.projective) {
      DimVector sum(node.dim.size());
      for (std::size_t m : node.preds) sum = sum + nodes_[m].dim;
      if (sum != node.dim + nodes_[*node.tau].dim) throw InternalError("mesh additivity violated");
      std::vector<std::size_t> mids = node.preds;
      std::sort(mids.begin(), mids.end());
      if (std::adjacent_find(mids.begin(), mids.end()) != mids.end()) {
        throw InternalError("mesh middle with multiplicity > 1");
      }
    }
    if (hom(u, u) != 1) throw InternalError("End of an indecomposable is not one-dimensional");
  }
  for (Vertex i = 0; i < projective_.size(); ++i)
    for (std::size_t v = 0; v < nodes_.size(); ++v)
      if (hom(projective_[i], v) != nodes_[v].dim[i]) throw InternalError("hom(P_i, V) != dim V_i");
}

std::optional<std::size_t> ARData::of_dim(const DimVector& d) const {
  auto r = roots_.index_of(d);
  if (!r) return std::nullopt;
  return by_root_[*r];
}

std::size_t ARData::simple(Vertex i) const { return by_root_[roots_.simple(i)]; }

std::vector<std::size_t> ARData::nonprojectives() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < nodes_.size(); ++u)
    if (!nodes_[u].projective) out.push_back(u);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ARData::arrows() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    for (std::size_t u : nodes_[v].succs) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::size_t>& ARData::mesh(std::size_t u) const {
  if (nodes_[u].projective) throw DomainError("projective indecomposables have no mesh");
  return nodes_[u].preds;
}

ARData build_ar(const Quiver& q) { return ARData(q); }

int hom_dim(const ARData& ar, std::size_t u, std::size_t v) { return ar.hom(u, v); }

long hom_dim(const ARData& ar, std::size_t u, const MultVector& m) {
  long s = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r]) s += static_cast<long>(m[r]) * ar.hom(u, ar.of_root(r));
  return s;
}

long hom_dim(const ARData& ar, const MultVector& m, const MultVector& n) {
  long s = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r]) s += static_cast<long>(m[r]) * hom_dim(ar, ar.of_root(r), n);
  return s;
}

ProjectiveResolution min_proj_resolution(const ARData& ar, std::size_t u) {
  const Indecomposable& node = ar.indec(u);
  if (node.projective) throw DomainError("resolution trivial: indecomposable is projective");
  const Quiver& q = ar.quiver();
  const std::size_t n = q.num_vertices();
  ProjectiveResolution res;
  res.top.resize(n);
  // Hom(U, S_i) = Hom(top U, S_i).
  for (Vertex i = 0; i < n; ++i) res.top[i] = ar.hom(u, ar.simple(i));

  DimVector rest = -node.dim;
  for (Vertex i = 0; i < n; ++i) rest = rest + ar.indec(ar.projective(i)).dim.scaled(res.top[i]);
  // Unitriangular solve over a topological order of Q.
  res.syzygy.assign(n, 0);
  for (Vertex j : ar.coxeter().order) {
    int x = rest[j];
    for (Vertex i = 0; i < n; ++i)
      if (i != j && q.has_path(i, j)) x -= res.syzygy[i];
    if (x < 0) throw InternalError("negative syzygy multiplicity");
    res.syzygy[j] = x;
  }
  return res;
}

DimVector dimension(const ARData& ar, const MultVector& m) {
  DimVector d(ar.quiver().num_vertices());
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r]) d = d + ar.roots().root(r).scaled(m[r]);
  return d;
}

MultVector zero_mult(const ARData& ar) { return MultVector{std::vector<int>(ar.roots().size(), 0)}; }

}  // namespace qhl
