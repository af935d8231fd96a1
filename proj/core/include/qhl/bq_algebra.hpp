//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qhl/ar_quiver.hpp"
#include "qhl/bound_quiver.hpp"
#include "qhl/hl.hpp"

namespace qhl {

// Q-hat with vertices [1..n] followed by [U] for the non-projective U in
// knitting order, bound by the mesh and commutativity relations of B_Q.
BoundQuiver build_hat_quiver(const ARData& ar);

std::string hat_vertex_name(const ARData& ar, std::size_t indec);

struct HlIsomorphism {
  std::vector<std::size_t> vertex_map;  // HL vertex -> Q-hat vertex
  std::vector<std::size_t> arrow_map;   // HL arrow -> Q-hat arrow
};

// Builds w_j(p) -> [i] and v_j(p-1) -> [U_beta] from the table, then checks
// it is a quiver isomorphism carrying each unsigned HL relation to a Q-hat
// relation up to a scalar. Throws InternalError describing any mismatch.
HlIsomorphism check_hl_iso(const ARData& ar, const BoundQuiver& bq, const BoundQuiver& hl,
                           const PhiTable& t);

// Entries in the vertex order of build_hat_quiver.
struct HatDimVector {
  std::vector<int> entries;
  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t v) const { return entries[v]; }
  friend bool operator==(const HatDimVector&, const HatDimVector&) = default;
  friend auto operator<=>(const HatDimVector&, const HatDimVector&) = default;
};

std::string to_string(const HatDimVector& d);

// d-hat at [i] is d_i, at [U] it is dim Hom(Q_U, M) - dim Hom(U, M).
HatDimVector hat_dim(const ARData& ar, const MultVector& m);

// Position of N relative to M. kLessOrEqual means N lies in the closure of
// the orbit of M.
enum class Degeneration { kEqual, kLessOrEqual, kGreater, kIncomparable };

std::string to_string(Degeneration d);

Degeneration degeneration_leq(const ARData& ar, const MultVector& m, const MultVector& n);

// Whether N lies in the orbit closure of M (dimension vectors must agree).
bool degenerates_to(const ARData& ar, const MultVector& m, const MultVector& n);

long euler_form_bq(const BoundQuiver& bq, const HatDimVector& a, const HatDimVector& b);

struct DeframedQuiver {
  BoundQuiver quiver;  // no relations
  std::size_t infinity;
  std::optional<std::vector<int>> dims;
};

// Replaces the frame vertices by one vertex with d_i parallel arrows. When
// `hat` is given the deframed dimension vector is recorded as well.
DeframedQuiver deframed_quiver(const BoundQuiver& bq, const DimVector& d,
                               const std::optional<HatDimVector>& hat = std::nullopt);

// Whether the path lies in the two-sided ideal generated by the relations,
// i.e. is zero in the bound quiver algebra.
bool path_in_ideal(const BoundQuiver& bq, const Path& p);

// Lexicographically least among the shortest paths
// [i] -> [S_i] ~> [tau^-1 S_j] -> [j] that are nonzero in the bound quiver
// algebra, for the arrow `q_arrow` : i -> j of Q.
Path res_path(const BoundQuiver& bq, const Quiver& q, std::size_t q_arrow);

// For each arrow i -> j of Q, every path [i] ~> [j] in Q-hat.
std::vector<std::vector<Path>> invariant_generator_paths(const BoundQuiver& bq, const Quiver& q);

// All multiplicity vectors of total dimension d. Throws DomainError when the
// total dimension exceeds `max_total`.
std::vector<MultVector> enumerate_classes(const ARData& ar, const DimVector& d, int max_total = 16);

}  // namespace qhl
