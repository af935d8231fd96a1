//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/bound_quiver.hpp"

#include <algorithm>
#include <map>

#include "qhl/error.hpp"

namespace qhl {

std::size_t BoundQuiver::add_vertex(BoundVertex v) {
  vertices_.push_back(std::move(v));
  return vertices_.size() - 1;
}

std::size_t BoundQuiver::add_arrow(BoundArrow a) {
  if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
    throw InternalError("arrow '" + a.id + "' has an unknown endpoint");
  }
  arrows_.push_back(std::move(a));
  return arrows_.size() - 1;
}

void BoundQuiver::add_relation(Relation r) {
  if (r.terms.empty()) throw InternalError("empty relation");
  for (const auto& t : r.terms) {
    check_path(t.path);
    if (path_source(t.path) != r.source || path_target(t.path) != r.target) {
      throw InternalError("relation term is not parallel to the relation");
    }
  }
  relations_.push_back(std::move(r));
}

std::optional<std::size_t> BoundQuiver::find_vertex(std::string_view name) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

std::optional<std::size_t> BoundQuiver::find_arrow(std::string_view id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return a;
  return std::nullopt;
}

std::vector<std::size_t> BoundQuiver::arrows_between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == source && arrows_[a].target == target) out.push_back(a);
  return out;
}

std::vector<std::size_t> BoundQuiver::out_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> BoundQuiver::in_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

std::optional<std::size_t> BoundQuiver::frame_vertex(int q_vertex) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].kind == NodeKind::kFrame && vertices_[v].vertex == q_vertex) return v;
  return std::nullopt;
}

std::optional<std::size_t> BoundQuiver::module_vertex(int indec) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].kind == NodeKind::kModule && vertices_[v].indec == indec) return v;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> BoundQuiver::topological_order() const {
  std::vector<int> indegree(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::vector<std::size_t> order, ready;
  for (std::size_t v = vertices_.size(); v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (const auto& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (order.size() != vertices_.size()) return std::nullopt;
  return order;
}

std::vector<Path> BoundQuiver::paths(std::size_t source, std::size_t target) const {
  if (!is_acyclic()) throw InternalError("path enumeration on a quiver with oriented cycles");
  std::vector<Path> out;
  Path current;
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == target && !current.empty()) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source != v) continue;
      current.push_back(a);
      self(self, arrows_[a].target);
      current.pop_back();
    }
  };
  dfs(dfs, source);
  return out;
}

void BoundQuiver::check_path(const Path& p) const {
  if (p.empty()) throw InternalError("empty path");
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] >= arrows_.size()) throw InternalError("path uses an unknown arrow");
    if (k > 0 && arrows_[p[k - 1]].target != arrows_[p[k]].source) {
      throw InternalError("path arrows do not compose");
    }
  }
}

bool proportional(const Relation& a, const Relation& b) {
  if (a.source != b.source || a.target != b.target || a.terms.size() != b.terms.size()) return false;
  std::map<Path, Rational> lhs, rhs;
  for (const auto& t : a.terms) lhs[t.path] += t.coeff;
  for (const auto& t : b.terms) rhs[t.path] += t.coeff;
  std::optional<Rational> ratio;
  for (const auto& [path, c] : lhs) {
    auto it = rhs.find(path);
    if (it == rhs.end() || is_zero(c) || is_zero(it->second)) return false;
    Rational r = it->second / c;
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

std::string path_string(const BoundQuiver& q, const Path& p) {
  std::string s;
  for (std::size_t a : p) {
    if (s.empty()) s = q.vertex(q.arrow(a).source).name;
    s += " -> " + q.vertex(q.arrow(a).target).name;
  }
  return s;
}

}  // namespace qhl
