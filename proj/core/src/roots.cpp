//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/roots.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "qhl/error.hpp"

namespace qhl {

Root Root::from_signed(const DimVector& v) {
  if (v.is_nonnegative()) return {v, Sign::kPositive};
  if (v.is_nonpositive()) return {-v, Sign::kNegative};
  throw InternalError("vector " + to_string(v) + " is neither positive nor negative");
}

RootSystem::RootSystem(const Quiver& q) : n_(q.num_vertices()), adjacency_(n_) {
  for (const auto& a : q.arrows()) {
    adjacency_[a.source].push_back(static_cast<int>(a.target));
    adjacency_[a.target].push_back(static_cast<int>(a.source));
  }
  std::deque<DimVector> frontier;
  for (Vertex i = 0; i < n_; ++i) {
    DimVector e(n_);
    e[i] = 1;
    index_.emplace(e, 0);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    DimVector cur = frontier.front();
    frontier.pop_front();
    for (Vertex i = 0; i < n_; ++i) {
      DimVector next = reflect(cur, i);
      if (next.is_nonnegative() && !next.is_zero() && !index_.count(next)) {
        index_.emplace(next, 0);
        frontier.push_back(next);
      }
    }
  }
  for (const auto& [coords, _] : index_) roots_.push_back(coords);
  // Height first, then reverse-lexicographic so that alpha_1 precedes alpha_2.
  std::sort(roots_.begin(), roots_.end(), [](const DimVector& a, const DimVector& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a > b;
  });
  for (std::size_t r = 0; r < roots_.size(); ++r) index_[roots_[r]] = r;

  interval_names_ = true;
  for (const auto& a : q.arrows()) {
    std::size_t lo = std::min(a.source, a.target), hi = std::max(a.source, a.target);
    if (hi != lo + 1) interval_names_ = false;
  }
}

std::optional<std::size_t> RootSystem::index_of(const DimVector& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::simple(Vertex i) const {
  DimVector e(n_);
  e[i] = 1;
  return index_.at(e);
}

bool RootSystem::is_simple(std::size_t r) const { return roots_[r].total() == 1; }

int RootSystem::pairing(const DimVector& lambda, Vertex i) const {
  int s = 2 * lambda[i];
  for (int j : adjacency_[i]) s -= lambda[static_cast<std::size_t>(j)];
  return s;
}

DimVector RootSystem::reflect(const DimVector& lambda, Vertex i) const {
  DimVector out = lambda;
  out[i] -= pairing(lambda, i);
  return out;
}

std::string RootSystem::name(const DimVector& coords) const {
  if (interval_names_ && coords.is_nonnegative() && !coords.is_zero()) {
    std::size_t lo = n_, hi = 0;
    bool interval = true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (coords[i] > 1) interval = false;
      if (coords[i] > 0) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    }
    for (std::size_t i = lo; i <= hi && interval; ++i)
      if (coords[i] != 1) interval = false;
    if (interval) {
      std::string sep = n_ >= 10 ? "_" : "";
      return "a" + std::to_string(lo + 1) + sep + std::to_string(hi + 1);
    }
  }
  return to_string(coords);
}

DimVector RootSystem::parse_name(std::string_view text) const {
  std::string s(text);
  auto fail = [&]() -> DimVector { throw ParseError("cannot parse root '" + s + "'"); };
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    DimVector v(n_);
    std::size_t pos = 1, k = 0;
    while (pos < s.size() - 1) {
      std::size_t end = s.find(',', pos);
      if (end == std::string::npos) end = s.size() - 1;
      std::string tok = s.substr(pos, end - pos);
      if (k >= n_ || tok.empty() ||
          !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return fail();
      v[k++] = std::stoi(tok);
      pos = end + 1;
    }
    if (k != n_) return fail();
    return v;
  }
  if (s.size() >= 3 && s[0] == 'a' && interval_names_) {
    std::string body = s.substr(1);
    int lo = 0, hi = 0;
    std::size_t sep = body.find_first_of("_,");
    auto digits = [](const std::string& t) {
      return !t.empty() && t.size() < 4 &&
             std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (sep != std::string::npos) {
      std::string a = body.substr(0, sep), b = body.substr(sep + 1);
      if (!digits(a) || !digits(b)) return fail();
      lo = std::stoi(a);
      hi = std::stoi(b);
    } else {
      if (body.size() != 2 || !digits(body)) return fail();
      lo = body[0] - '0';
      hi = body[1] - '0';
    }
    if (lo < 1 || hi < lo || hi > static_cast<int>(n_)) return fail();
    DimVector v(n_);
    for (int i = lo; i <= hi; ++i) v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
  }
  return fail();
}

std::string to_string(const CoxeterWord& c) {
  std::string s;
  for (Vertex v : c.order) s += (s.empty() ? "s" : " s") + vertex_label(v);
  return s;
}

CoxeterWord adapted_coxeter(const Quiver& q) {
  // Reflecting at a source turns it into a sink, which is the same as
  // deleting it for the purpose of finding the next source.
  const std::size_t n = q.num_vertices();
  std::vector<int> indegree(n, 0);
  for (const auto& a : q.arrows()) ++indegree[a.target];
  std::vector<bool> used(n, false);
  CoxeterWord word;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!used[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == n) throw InternalError("quiver has an oriented cycle");
    used[pick] = true;
    word.order.push_back(pick);
    for (std::size_t a : q.out_arrows(pick)) --indegree[q.arrow(a).target];
  }
  return word;
}

bool is_adapted(const Quiver& q, const CoxeterWord& c) {
  const std::size_t n = q.num_vertices();
  if (c.order.size() != n) return false;
  // Track the current orientation explicitly and reflect at each step.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& a : q.arrows()) edges.emplace_back(a.source, a.target);
  std::vector<bool> seen(n, false);
  for (Vertex i : c.order) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
    for (const auto& [s, t] : edges)
      if (t == i) return false;
    for (auto& e : edges)
      if (e.first == i || e.second == i) std::swap(e.first, e.second);
  }
  return true;
}

DimVector coxeter_apply(const RootSystem& rs, const CoxeterWord& c, const DimVector& v,
                        Direction direction) {
  DimVector out = v;
  if (direction == Direction::kForward) {
    for (auto it = c.order.rbegin(); it != c.order.rend(); ++it) out = rs.reflect(out, *it);
  } else {
    for (Vertex i : c.order) out = rs.reflect(out, i);
  }
  return out;
}

Root coxeter_apply(const RootSystem& rs, const CoxeterWord& c, const Root& r, Direction direction) {
  return Root::from_signed(coxeter_apply(rs, c, r.signed_coords(), direction));
}

std::vector<DimVector> gamma_roots(const Quiver& q) {
  const std::size_t n = q.num_vertices();
  std::vector<DimVector> gamma(n, DimVector(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (q.has_path(j, i)) gamma[i][j] = 1;
  return gamma;
}

HeightFunction height_function(const Quiver& q, std::optional<HeightSeed> seed) {
  const std::size_t n = q.num_vertices();
  std::vector<int> xi(n, 0);
  std::vector<bool> set(n, false);
  Vertex start = seed ? seed->vertex : 0;
  if (start >= n) throw DomainError("height seed names an unknown vertex");
  xi[start] = seed ? seed->value : 0;
  set[start] = true;
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t a : q.out_arrows(v)) {
      Vertex t = q.arrow(a).target;
      if (!set[t]) {
        xi[t] = xi[v] - 1;
        set[t] = true;
        stack.push_back(t);
      }
    }
    for (std::size_t a : q.in_arrows(v)) {
      Vertex s = q.arrow(a).source;
      if (!set[s]) {
        xi[s] = xi[v] + 1;
        set[s] = true;
        stack.push_back(s);
      }
    }
  }
  if (!seed) {
    int lowest = *std::min_element(xi.begin(), xi.end());
    for (int& v : xi) v += 1 - lowest;
  }
  return {xi};
}

void validate_height_function(const Quiver& q, const HeightFunction& h) {
  if (h.xi.size() != q.num_vertices()) {
    throw DomainError("height function has " + std::to_string(h.xi.size()) + " values, expected " +
                      std::to_string(q.num_vertices()));
  }
  for (const auto& a : q.arrows()) {
    if (h.xi[a.target] != h.xi[a.source] - 1) {
      throw DomainError("height function violates arrow " + a.id + ": " + vertex_label(a.source) +
                        "->" + vertex_label(a.target) + " needs xi_" + vertex_label(a.target) +
                        " = xi_" + vertex_label(a.source) + " - 1");
    }
  }
}

}  // namespace qhl
