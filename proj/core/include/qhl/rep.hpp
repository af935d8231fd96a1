//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qhl/ar_quiver.hpp"
#include "qhl/bound_quiver.hpp"
#include "qhl/matrix.hpp"
#include "qhl/quiver.hpp"

namespace qhl {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// A representation of Q. maps[a] has shape dims[target(a)] x dims[source(a)].
struct Rep {
  DimVector dims;
  std::vector<Matrix> maps;
};

void validate_rep(const Quiver& q, const Rep& m);
Rep zero_rep(const Quiver& q, const DimVector& d);
Rep direct_sum(const Rep& a, const Rep& b);

// Replaces M_a by g_t M_a g_s^-1; every g_v must be invertible.
Rep base_change(const Quiver& q, const Rep& m, const std::vector<Matrix>& g);

// Composite of the arrow matrices along the unique path from -> to (identity
// when from == to). Throws DomainError if there is no path.
Matrix path_matrix(const Quiver& q, const Rep& m, Vertex from, Vertex to);

// Vertex count and arrow endpoints, enough to set up Hom equations.
struct ArrowShape {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

ArrowShape shape_of(const Quiver& q);
ArrowShape shape_of(const BoundQuiver& q);

// One matrix per vertex, shape dims_n[v] x dims_m[v].
using Morphism = std::vector<Matrix>;

// Basis of {phi : phi_t M_a = N_a phi_s for every arrow a : s -> t}.
std::vector<Morphism> hom_space(const ArrowShape& shape, const std::vector<int>& dims_m,
                                const std::vector<Matrix>& maps_m, const std::vector<int>& dims_n,
                                const std::vector<Matrix>& maps_n);
std::size_t hom_dimension(const ArrowShape& shape, const std::vector<int>& dims_m,
                          const std::vector<Matrix>& maps_m, const std::vector<int>& dims_n,
                          const std::vector<Matrix>& maps_n);

std::vector<Morphism> hom_space(const Quiver& q, const Rep& m, const Rep& n);
std::size_t hom_dimension(const Quiver& q, const Rep& m, const Rep& n);

// A representation of dimension `beta` with one-dimensional endomorphism
// ring, sampled with entries in {-3, ..., 3}.
Rep build_indecomposable(const ARData& ar, const DimVector& beta, std::uint64_t seed = kDefaultSeed);

// One explicit model per indecomposable, indexed like ARData.
class Catalog {
 public:
  explicit Catalog(const ARData& ar, std::uint64_t seed = kDefaultSeed);

  const Rep& model(std::size_t indec) const { return models_[indec]; }
  std::size_t size() const { return models_.size(); }

 private:
  std::vector<Rep> models_;
};

// Direct sum of catalog models with the given multiplicities.
Rep realize(const ARData& ar, const Catalog& catalog, const MultVector& m);

// Random invertible base change at every vertex.
Rep scramble(const Quiver& q, const Rep& m, std::mt19937_64& rng);

// Multiplicities of the indecomposable summands of `m`, recovered from the
// dimensions of Hom(U, m) over all indecomposables U.
MultVector decompose(const ARData& ar, const Catalog& catalog, const Rep& m);

// dim O_M = sum_i d_i^2 - dim End(M).
long orbit_dim(const ARData& ar, const MultVector& m);

}  // namespace qhl
