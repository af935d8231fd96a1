//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhl/quiver.hpp"

namespace qhl {

enum class Sign { kPositive, kNegative };

// A root in simple-root coordinates. `coords` is always non-negative; the
// sign is carried separately.
struct Root {
  DimVector coords;
  Sign sign = Sign::kPositive;

  bool positive() const { return sign == Sign::kPositive; }
  // Signed coordinates.
  DimVector signed_coords() const { return positive() ? coords : -coords; }
  static Root from_signed(const DimVector& v);

  friend bool operator==(const Root&, const Root&) = default;
};

// The positive roots of the Dynkin diagram underlying a quiver, generated by
// closing the simple roots under simple reflections.
class RootSystem {
 public:
  explicit RootSystem(const Quiver& q);

  std::size_t rank() const { return n_; }
  const std::vector<DimVector>& positive() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  const DimVector& root(std::size_t r) const { return roots_[r]; }

  std::optional<std::size_t> index_of(const DimVector& coords) const;
  bool is_positive_root(const DimVector& coords) const { return index_of(coords).has_value(); }
  std::size_t simple(Vertex i) const;
  bool is_simple(std::size_t r) const;

  // Symmetric bilinear form (lambda, alpha_i).
  int pairing(const DimVector& lambda, Vertex i) const;
  // s_i(lambda) = lambda - (lambda, alpha_i) alpha_i
  DimVector reflect(const DimVector& lambda, Vertex i) const;

  // "a{i}{j}" for a consecutively labeled type A chain, otherwise the
  // coordinate literal "[d1,...,dn]".
  std::string name(const DimVector& coords) const;
  std::string name(std::size_t r) const { return name(roots_[r]); }
  // Inverse of name(); accepts both spellings. Throws ParseError.
  DimVector parse_name(std::string_view text) const;
  bool has_interval_names() const { return interval_names_; }

 private:
  std::size_t n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<DimVector> roots_;
  std::map<DimVector, std::size_t> index_;
  bool interval_names_ = false;
};

enum class Direction { kForward, kInverse };

// C = s_{i1} s_{i2} ... s_{in}; `order` lists i1, ..., in.
struct CoxeterWord {
  std::vector<Vertex> order;

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
};

std::string to_string(const CoxeterWord& c);

// Repeated source removal, smallest label first.
CoxeterWord adapted_coxeter(const Quiver& q);

// Checks that each i_{k+1} is a source of s_{i_k}...s_{i_1} Q.
bool is_adapted(const Quiver& q, const CoxeterWord& c);

DimVector coxeter_apply(const RootSystem& rs, const CoxeterWord& c, const DimVector& v,
                        Direction direction);
Root coxeter_apply(const RootSystem& rs, const CoxeterWord& c, const Root& r, Direction direction);

// gamma_i: sum of alpha_j over the vertices j with a path j -> i.
std::vector<DimVector> gamma_roots(const Quiver& q);

struct HeightFunction {
  std::vector<int> xi;

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

struct HeightSeed {
  Vertex vertex;
  int value;
};

// The unique height function taking `seed.value` at `seed.vertex`; without a
// seed, the one whose minimum value is 1.
HeightFunction height_function(const Quiver& q, std::optional<HeightSeed> seed = std::nullopt);

// Throws DomainError naming the first arrow that violates xi_j = xi_i - 1.
void validate_height_function(const Quiver& q, const HeightFunction& xi);

}  // namespace qhl
