//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "qhl/ar_quiver.hpp"
#include "qhl/bq_algebra.hpp"
#include "qhl/serialize.hpp"

namespace qhl::test {

inline std::vector<Quiver> orientations(DynkinType type, int rank) {
  return all_orientations(standard_quiver({type, rank}));
}

// Index of the indecomposable with the given root name ("a12", "[1,1,0,0]").
inline std::size_t indec(const ARData& ar, const std::string& name) {
  return ar.of_root(*ar.roots().index_of(ar.roots().parse_name(name)));
}

inline MultVector mult(const ARData& ar, const std::string& text) { return parse_mult(ar, text); }

inline std::size_t hat_vertex(const BoundQuiver& bq, const std::string& name) {
  auto v = bq.find_vertex(name);
  if (!v) throw std::runtime_error("no vertex " + name);
  return *v;
}

}  // namespace qhl::test
