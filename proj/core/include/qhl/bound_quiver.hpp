//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhl/rational.hpp"

namespace qhl {

// kFrame: [i] in Q-hat, w_j(p) in the HL quiver. kModule: [U] or v_j(p).
// kInfinity: the extra vertex of a deframed quiver.
enum class NodeKind { kFrame, kModule, kInfinity };

enum class EdgeKind {
  kIrreducible,  // [U] -> [V] for an irreducible map V -> U
  kFrameOut,     // [i] -> [S_i]
  kFrameIn,      // [tau^-1 S_i] -> [i]
  kHlA,          // a_j(p): w_j(p) -> v_j(p-1)
  kHlB,          // b_j(p): v_j(p) -> w_j(p-1)
  kHlLadder,     // B_ij(p): v_i(p) -> v_j(p-1)
  kFraming,      // infinity -> [S_i] or [tau^-1 S_i] -> infinity
};

struct BoundVertex {
  std::string name;
  NodeKind kind;
  int vertex = -1;  // [i]: i. HL: j.
  int indec = -1;   // [U]: index into ARData.
  int degree = 0;   // HL: p.
};

struct BoundArrow {
  std::string id;
  std::size_t source;
  std::size_t target;
  EdgeKind kind;
  int from_vertex = -1;  // HL: i of B_ij(p), j of a_j(p) / b_j(p). Q-hat: the Q vertex of a frame arrow.
  int to_vertex = -1;    // HL: j of B_ij(p).
  int degree = 0;        // HL: p.
};

// A path is a sequence of arrow indices in traversal order.
using Path = std::vector<std::size_t>;

struct RelationTerm {
  Rational coeff;
  Path path;
};

// sum_k coeff_k * path_k = 0, all paths parallel from `source` to `target`.
struct Relation {
  std::size_t source;
  std::size_t target;
  std::vector<RelationTerm> terms;
};

// A finite quiver with relations. Used for both the HL presentation and the
// Q-hat presentation of B_Q, and (without relations) for deframed quivers.
class BoundQuiver {
 public:
  std::size_t add_vertex(BoundVertex v);
  std::size_t add_arrow(BoundArrow a);
  void add_relation(Relation r);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<BoundVertex>& vertices() const { return vertices_; }
  const std::vector<BoundArrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const BoundVertex& vertex(std::size_t v) const { return vertices_[v]; }
  const BoundArrow& arrow(std::size_t a) const { return arrows_[a]; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;
  std::vector<std::size_t> arrows_between(std::size_t source, std::size_t target) const;
  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;

  // Frame vertex [i] / module vertex [U] lookups for Q-hat.
  std::optional<std::size_t> frame_vertex(int q_vertex) const;
  std::optional<std::size_t> module_vertex(int indec) const;

  std::optional<std::vector<std::size_t>> topological_order() const;
  bool is_acyclic() const { return topological_order().has_value(); }

  // All paths source -> target by depth-first search over arrows in index
  // order. Requires an acyclic quiver.
  std::vector<Path> paths(std::size_t source, std::size_t target) const;

  // Throws InternalError unless `p` is a connected walk.
  void check_path(const Path& p) const;
  std::size_t path_source(const Path& p) const { return arrows_[p.front()].source; }
  std::size_t path_target(const Path& p) const { return arrows_[p.back()].target; }

 private:
  std::vector<BoundVertex> vertices_;
  std::vector<BoundArrow> arrows_;
  std::vector<Relation> relations_;
};

// Whether two relations have proportional coefficient vectors over the same
// set of paths.
bool proportional(const Relation& a, const Relation& b);

std::string path_string(const BoundQuiver& q, const Path& p);

}  // namespace qhl
