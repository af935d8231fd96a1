//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "qhl/error.hpp"

namespace qhl {

int DimVector::total() const {
  int s = 0;
  for (int v : entries_) s += v;
  return s;
}

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

bool DimVector::is_nonpositive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 0; });
}

DimVector DimVector::operator+(const DimVector& rhs) const {
  DimVector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out[i] += rhs[i];
  return out;
}

DimVector DimVector::operator-(const DimVector& rhs) const {
  DimVector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out[i] -= rhs[i];
  return out;
}

DimVector DimVector::operator-() const { return scaled(-1); }

DimVector DimVector::scaled(int factor) const {
  DimVector out = *this;
  for (auto& v : out.entries_) v *= factor;
  return out;
}

std::string to_string(const DimVector& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

std::string to_string(DynkinClass c) {
  const char* letter = c.type == DynkinType::kA ? "A" : c.type == DynkinType::kD ? "D" : "E";
  return letter + std::to_string(c.rank);
}

std::string vertex_label(Vertex v) { return std::to_string(v + 1); }

namespace {

DynkinClass classify_tree(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& a : arrows) {
    if (a.source == a.target) {
      throw DomainError("not Dynkin: loop at vertex " + vertex_label(a.source));
    }
    if (!adj[a.source].insert(a.target).second) {
      throw DomainError("not Dynkin: multiple edges between vertices " + vertex_label(a.source) +
                        " and " + vertex_label(a.target));
    }
    adj[a.target].insert(a.source);
  }
  // Connectivity.
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw DomainError("not Dynkin: underlying graph is disconnected");
  if (arrows.size() != n - 1) throw DomainError("not Dynkin: underlying graph contains a cycle");

  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() > 3) {
      throw DomainError("not Dynkin: vertex " + vertex_label(v) + " has degree " +
                        std::to_string(adj[v].size()));
    }
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return {DynkinType::kA, static_cast<int>(n)};
  if (branch.size() > 1) throw DomainError("not Dynkin: more than one branch vertex");

  Vertex center = branch.front();
  std::vector<int> arms;
  for (Vertex start : adj[center]) {
    int len = 1;
    Vertex prev = center, cur = start;
    while (adj[cur].size() == 2) {
      Vertex next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {DynkinType::kD, static_cast<int>(n)};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {DynkinType::kE, static_cast<int>(n)};
  throw DomainError("not Dynkin: branch arms of lengths " + std::to_string(arms[0]) + "," +
                    std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                    " are not of type D or E");
}

}  // namespace

Quiver::Quiver(std::size_t num_vertices, std::vector<Arrow> arrows)
    : n_(num_vertices), arrows_(std::move(arrows)), out_(n_), in_(n_) {
  if (n_ == 0) throw DomainError("quiver has no vertices");
  std::set<std::string> ids;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (arr.source >= n_ || arr.target >= n_) throw DomainError("arrow '" + arr.id + "' has an unknown endpoint");
    if (arr.id.empty()) throw DomainError("arrow ids must be non-empty");
    if (!ids.insert(arr.id).second) throw DomainError("duplicate arrow id '" + arr.id + "'");
  }
  class_ = classify_tree(n_, arrows_);
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }
  reach_.assign(n_ * n_, false);
  for (Vertex s = 0; s < n_; ++s) {
    std::vector<Vertex> stack{s};
    reach_[s * n_ + s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t a : out_[v]) {
        Vertex t = arrows_[a].target;
        if (!reach_[s * n_ + t]) {
          reach_[s * n_ + t] = true;
          stack.push_back(t);
        }
      }
    }
  }
}

std::vector<Vertex> Quiver::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t a : out_[v]) out.push_back(arrows_[a].target);
  for (std::size_t a : in_[v]) out.push_back(arrows_[a].source);
  std::sort(out.begin(), out.end());
  return out;
}

bool Quiver::adjacent(Vertex a, Vertex b) const {
  for (std::size_t x : out_[a])
    if (arrows_[x].target == b) return true;
  for (std::size_t x : in_[a])
    if (arrows_[x].source == b) return true;
  return false;
}

std::vector<std::size_t> Quiver::path_arrows(Vertex from, Vertex to) const {
  if (!has_path(from, to)) throw InternalError("no path between the given vertices");
  std::vector<std::size_t> path;
  Vertex cur = from;
  while (cur != to) {
    bool stepped = false;
    for (std::size_t a : out_[cur]) {
      if (has_path(arrows_[a].target, to)) {
        path.push_back(a);
        cur = arrows_[a].target;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InternalError("path reconstruction failed");
  }
  return path;
}

std::size_t Quiver::count_paths() const {
  return static_cast<std::size_t>(std::count(reach_.begin(), reach_.end(), true));
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return a;
  return std::nullopt;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a vertex number");
    if (pos_ - start > 6) fail("vertex number too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an arrow id");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("quiver syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct RawArrow {
  std::string id;
  int source, target;
};

Quiver assemble(const std::set<int>& labels, const std::vector<RawArrow>& raw) {
  if (labels.empty()) throw ParseError("quiver has no vertices");
  int n = static_cast<int>(labels.size());
  if (*labels.begin() != 1 || *labels.rbegin() != n) {
    throw DomainError("vertices must be labeled 1..n without gaps");
  }
  std::vector<Arrow> arrows;
  for (const auto& r : raw) {
    arrows.push_back({r.id, static_cast<Vertex>(r.source - 1), static_cast<Vertex>(r.target - 1)});
  }
  return Quiver(static_cast<std::size_t>(n), std::move(arrows));
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  std::set<int> labels;
  std::vector<RawArrow> raw;
  Scanner s(text);
  if (text.find(':') != std::string_view::npos) {
    while (true) {
      std::string id = s.identifier();
      if (!s.consume(":")) s.fail("expected ':' after arrow id");
      int a = s.integer();
      bool forward;
      if (s.consume("->")) {
        forward = true;
      } else if (s.consume("<-")) {
        forward = false;
      } else {
        s.fail("expected '->' or '<-'");
      }
      int b = s.integer();
      labels.insert(a);
      labels.insert(b);
      raw.push_back(forward ? RawArrow{id, a, b} : RawArrow{id, b, a});
      if (s.done()) break;
      if (!s.consume(";") && !s.consume(",")) s.fail("expected ';' between arrows");
      if (s.done()) break;
    }
  } else {
    int prev = s.integer();
    labels.insert(prev);
    int counter = 0;
    while (!s.done()) {
      bool forward;
      if (s.consume("->")) {
        forward = true;
      } else if (s.consume("<-")) {
        forward = false;
      } else {
        s.fail("expected '->' or '<-'");
      }
      int next = s.integer();
      labels.insert(next);
      std::string id = "a" + std::to_string(++counter);
      raw.push_back(forward ? RawArrow{id, prev, next} : RawArrow{id, next, prev});
      prev = next;
    }
  }
  return assemble(labels, raw);
}

std::string print_quiver(const Quiver& q) {
  if (q.arrows().empty()) return "1";
  std::string out;
  for (const auto& a : q.arrows()) {
    if (!out.empty()) out += "; ";
    out += a.id + ":" + vertex_label(a.source) + "->" + vertex_label(a.target);
  }
  return out;
}

DynkinClass dynkin_classify(const Quiver& q) { return q.dynkin(); }

Quiver standard_quiver(DynkinClass c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  bool ok = (c.type == DynkinType::kA && n >= 1) || (c.type == DynkinType::kD && n >= 4) ||
            (c.type == DynkinType::kE && n >= 6 && n <= 8);
  if (!ok) throw DomainError("no Dynkin diagram " + to_string(c));
  std::vector<Arrow> arrows;
  auto add = [&](Vertex s, Vertex t) { arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t}); };
  const std::size_t chain = c.type == DynkinType::kA ? n : n - 1;
  for (Vertex v = 0; v + 1 < chain; ++v) add(v, v + 1);
  if (c.type == DynkinType::kD) add(n - 3, n - 1);
  if (c.type == DynkinType::kE) add(2, n - 1);
  return Quiver(n, std::move(arrows));
}

std::vector<Quiver> all_orientations(const Quiver& q) {
  const std::size_t edges = q.arrows().size();
  std::vector<Quiver> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges; ++e) {
      const Arrow& a = q.arrow(e);
      bool flip = (mask >> e) & 1;
      arrows.push_back({"a" + std::to_string(e + 1), flip ? a.target : a.source, flip ? a.source : a.target});
    }
    out.emplace_back(q.num_vertices(), std::move(arrows));
  }
  return out;
}

long euler_form_kq(const Quiver& q, const DimVector& d, const DimVector& e) {
  long s = 0;
  for (Vertex i = 0; i < q.num_vertices(); ++i) s += static_cast<long>(d[i]) * e[i];
  for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
  return s;
}

}  // namespace qhl
