//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhl/bound_quiver.hpp"
#include "qhl/quiver.hpp"
#include "qhl/roots.hpp"

namespace qhl {

struct PhiValue {
  std::size_t root;  // index into RootSystem::positive()
  int level;
  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

// A finite window of phi on I-hat = {(j, p) : p - xi_j even}.
struct PhiTable {
  HeightFunction xi;
  std::map<std::pair<Vertex, int>, PhiValue> entries;
  int min_level = -1;
  int max_level = 1;

  std::optional<PhiValue> at(Vertex j, int p) const;
};

// Walks down from (j, xi_j) with C and up with C^-1 until the first entry at
// level -window and +window respectively.
PhiTable phi_table(const Quiver& q, const HeightFunction& xi, int window = 1);

// Every (j, p) in I-hat with min_degree <= p <= max_degree.
PhiTable phi_table_range(const Quiver& q, const HeightFunction& xi, int min_degree, int max_degree);

// Smallest and largest p among the keys of `t`.
std::pair<int, int> degree_range(const PhiTable& t);

// Vertices w_j(p), v_j(p) and arrows a_j(p), b_j(p), B_ij(p), bound by the
// unsigned relations.
BoundQuiver hl_quiver(const Quiver& q, const PhiTable& t);

// Sign epsilon(i, j) for each ordered adjacent pair.
using SignMap = std::map<std::pair<Vertex, Vertex>, int>;

// epsilon(i, j) = -1 for i < j and +1 for i > j.
SignMap default_signs(const Quiver& q);

// a_i(p-1) b_i(p) - sum_j sign * B_ji(p-1) B_ij(p) = 0 for each (i, p) with
// v_i(p) and v_i(p-2) present. The unsigned form takes every sign to be +1.
std::vector<Relation> hl_relations(const BoundQuiver& hl);
std::vector<Relation> hl_relations(const BoundQuiver& hl, const SignMap& eps);

// Keyed by (i, j, p) for the arrow B_ij(p).
using ArrowTwist = std::map<std::tuple<Vertex, Vertex, int>, int>;

ArrowTwist resolve_signs(const BoundQuiver& hl, const SignMap& eps);

// Substitutes B_ij(p) -> twist(i, j, p) * B_ij(p) in every relation.
std::vector<Relation> apply_twist(const BoundQuiver& hl, const std::vector<Relation>& relations,
                                  const ArrowTwist& twist);

std::string hl_vertex_name(char kind, Vertex j, int p);

}  // namespace qhl
