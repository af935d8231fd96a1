//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qhl/quiver.hpp"
#include "qhl/roots.hpp"

namespace qhl {

// Multiplicities of indecomposables in a module, indexed by positive root
// (RootSystem order).
struct MultVector {
  std::vector<int> mult;

  int operator[](std::size_t r) const { return mult[r]; }
  int& operator[](std::size_t r) { return mult[r]; }
  std::size_t size() const { return mult.size(); }

  friend bool operator==(const MultVector&, const MultVector&) = default;
  friend auto operator<=>(const MultVector&, const MultVector&) = default;
};

struct Indecomposable {
  std::size_t root;  // index into RootSystem::positive()
  DimVector dim;
  bool projective = false;
  bool injective = false;
  std::optional<std::size_t> tau;
  std::optional<std::size_t> tau_inv;
  std::vector<std::size_t> preds;  // irreducible maps pred -> this
  std::vector<std::size_t> succs;  // irreducible maps this -> succ
};

// Auslander-Reiten quiver of kQ obtained by knitting from the projectives.
// Indecomposables are indexed in knitting order, which is a topological order
// of the AR quiver.
class ARData {
 public:
  explicit ARData(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  const RootSystem& roots() const { return roots_; }
  const CoxeterWord& coxeter() const { return coxeter_; }

  std::size_t size() const { return nodes_.size(); }
  const Indecomposable& indec(std::size_t u) const { return nodes_[u]; }
  const std::vector<Indecomposable>& indecs() const { return nodes_; }

  std::size_t of_root(std::size_t root) const { return by_root_[root]; }
  std::optional<std::size_t> of_dim(const DimVector& d) const;

  std::size_t projective(Vertex i) const { return projective_[i]; }
  std::size_t simple(Vertex i) const;
  std::vector<std::size_t> nonprojectives() const;

  // Irreducible maps as (V, U) pairs meaning V -> U.
  std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
  // Middle terms E_m of 0 -> tau U -> (+) E_m -> U -> 0.
  const std::vector<std::size_t>& mesh(std::size_t u) const;

  int hom(std::size_t u, std::size_t v) const { return hom_[u * nodes_.size() + v]; }

 private:
  Quiver quiver_;
  RootSystem roots_;
  CoxeterWord coxeter_;
  std::vector<Indecomposable> nodes_;
  std::vector<std::size_t> by_root_;
  std::vector<std::size_t> projective_;
  std::vector<int> hom_;

  void knit();
  std::size_t projective_vertex_of(std::size_t u) const;
  void compute_hom();
  void check_invariants() const;
};

ARData build_ar(const Quiver& q);

int hom_dim(const ARData& ar, std::size_t u, std::size_t v);
// dim Hom(U, M) with M given by multiplicities (additive in M).
long hom_dim(const ARData& ar, std::size_t u, const MultVector& m);
// dim Hom(M, N), additive in both arguments.
long hom_dim(const ARData& ar, const MultVector& m, const MultVector& n);

// Multiplicity form of 0 -> P_U -> Q_U -> U -> 0, indexed by vertex:
// Q_U = (+) P_i^top[i], P_U = (+) P_i^syzygy[i].
struct ProjectiveResolution {
  std::vector<int> top;
  std::vector<int> syzygy;

  friend bool operator==(const ProjectiveResolution&, const ProjectiveResolution&) = default;
};

ProjectiveResolution min_proj_resolution(const ARData& ar, std::size_t u);

DimVector dimension(const ARData& ar, const MultVector& m);
MultVector zero_mult(const ARData& ar);

}  // namespace qhl
