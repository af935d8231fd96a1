//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhl {

// Zero-based vertex index. The user-facing label of vertex v is v + 1.
using Vertex = std::size_t;

struct Arrow {
  std::string id;
  Vertex source;
  Vertex target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Integer vector over the vertices of a quiver. Used for dimension vectors
// (non-negative) and for root coordinates in the simple-root basis.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : entries_(n, 0) {}
  explicit DimVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int& operator[](std::size_t i) { return entries_[i]; }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  int total() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;

  DimVector operator+(const DimVector& rhs) const;
  DimVector operator-(const DimVector& rhs) const;
  DimVector operator-() const;
  DimVector scaled(int factor) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const DimVector& d);

enum class DynkinType { kA, kD, kE };

struct DynkinClass {
  DynkinType type;
  int rank;

  friend bool operator==(const DynkinClass&, const DynkinClass&) = default;
};

std::string to_string(DynkinClass c);

// An orientation of a simply-laced Dynkin diagram. Construction validates
// the shape, so every Quiver value is Dynkin.
class Quiver {
 public:
  Quiver(std::size_t num_vertices, std::vector<Arrow> arrows);

  std::size_t num_vertices() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  DynkinClass dynkin() const { return class_; }

  const std::vector<std::size_t>& out_arrows(Vertex v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arrows(Vertex v) const { return in_[v]; }
  bool is_source(Vertex v) const { return in_[v].empty(); }
  bool is_sink(Vertex v) const { return out_[v].empty(); }

  std::vector<Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;

  // Reflexive: every vertex has the trivial path to itself.
  bool has_path(Vertex from, Vertex to) const { return reach_[from * n_ + to]; }
  // Arrows of the unique path from -> to, in traversal order.
  std::vector<std::size_t> path_arrows(Vertex from, Vertex to) const;
  // Number of paths including the trivial ones, i.e. dim kQ.
  std::size_t count_paths() const;

  std::optional<std::size_t> find_arrow(std::string_view id) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t n_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<bool> reach_;
  DynkinClass class_;
};

std::string vertex_label(Vertex v);

// Chain syntax "1->2<-3->4" or edge list "a:1->2; b:3->2".
Quiver parse_quiver(std::string_view text);

// Canonical text: the edge-list form, or the bare label of a lone vertex.
std::string print_quiver(const Quiver& q);

DynkinClass dynkin_classify(const Quiver& q);

// The diagram with labels 1..n along a chain; D_n attaches n to n-2 and E_n
// attaches n to 3. Every edge points from the smaller label to the larger.
Quiver standard_quiver(DynkinClass c);

// All 2^(n-1) orientations of the underlying tree of q, with arrow ids a1,
// a2, ... in the edge order of q.
std::vector<Quiver> all_orientations(const Quiver& q);

// sum_i d_i e_i - sum_{a: i->j} d_i e_j
long euler_form_kq(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace qhl
