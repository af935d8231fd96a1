//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "qhl/error.hpp"

namespace qhl {

using nlohmann::ordered_json;

namespace {

ordered_json labels(const std::vector<int>& v) {
  ordered_json out = ordered_json::array();
  for (int x : v) out.push_back(x);
  return out;
}

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const ordered_json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(what + ": expected " + std::to_string(cols) + " columns");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row[c];
      if (e.is_string()) m(r, c) = parse_rational(e.get<std::string>());
      else if (e.is_number_integer()) m(r, c) = e.get<long>();
      else throw ParseError(what + ": entries must be integers or strings");
    }
  }
  return m;
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kFrame: return "frame";
    case NodeKind::kModule: return "module";
    case NodeKind::kInfinity: return "infinity";
  }
  return "";
}

ordered_json quiver_object(const Quiver& q) {
  ordered_json j;
  ordered_json vertices = ordered_json::array();
  for (Vertex v = 0; v < q.num_vertices(); ++v) vertices.push_back(v + 1);
  j["vertices"] = vertices;
  j["arrows"] = ordered_json::array();
  for (const Arrow& a : q.arrows()) j["arrows"].push_back({{"id", a.id}, {"source", a.source + 1}, {"target", a.target + 1}});
  return j;
}

}  // namespace

std::string quiver_json(const Quiver& q) { return dump(quiver_object(q)); }

std::string roots_json(const RootSystem& rs) {
  ordered_json j = ordered_json::array();
  for (std::size_t r = 0; r < rs.size(); ++r)
    j.push_back({{"name", rs.name(r)}, {"coords", labels(rs.root(r).entries())}});
  return dump(j);
}

std::string height_json(const HeightFunction& xi) {
  ordered_json j;
  for (std::size_t v = 0; v < xi.xi.size(); ++v) j[vertex_label(v)] = xi.xi[v];
  return dump(j);
}

std::string coxeter_json(const CoxeterWord& c) {
  ordered_json order = ordered_json::array();
  for (Vertex v : c.order) order.push_back(v + 1);
  return dump({{"word", to_string(c)}, {"order", order}});
}

std::string ar_json(const ARData& ar) {
  const RootSystem& rs = ar.roots();
  auto name = [&](std::size_t u) { return rs.name(ar.indec(u).root); };
  ordered_json j;
  j["quiver"] = quiver_object(ar.quiver());
  j["coxeter"] = to_string(ar.coxeter());
  j["indecomposables"] = ordered_json::array();
  for (std::size_t u = 0; u < ar.size(); ++u) {
    const auto& x = ar.indec(u);
    ordered_json e{{"name", name(u)}, {"dim", labels(x.dim.entries())}, {"projective", x.projective},
                   {"injective", x.injective}};
    e["tau"] = x.tau ? ordered_json(name(*x.tau)) : ordered_json(nullptr);
    e["tau_inv"] = x.tau_inv ? ordered_json(name(*x.tau_inv)) : ordered_json(nullptr);
    j["indecomposables"].push_back(std::move(e));
  }
  j["arrows"] = ordered_json::array();
  for (auto [v, u] : ar.arrows()) j["arrows"].push_back({name(v), name(u)});
  j["meshes"] = ordered_json::array();
  for (std::size_t u : ar.nonprojectives()) {
    ordered_json mids = ordered_json::array();
    for (std::size_t x : ar.mesh(u)) mids.push_back(name(x));
    j["meshes"].push_back({{"module", name(u)}, {"tau", name(*ar.indec(u).tau)}, {"middles", mids}});
  }
  ordered_json hom = ordered_json::array();
  for (std::size_t u = 0; u < ar.size(); ++u) {
    ordered_json row = ordered_json::array();
    for (std::size_t v = 0; v < ar.size(); ++v) row.push_back(ar.hom(u, v));
    hom.push_back(std::move(row));
  }
  j["hom"] = hom;
  return dump(j);
}

std::string ar_dot(const ARData& ar) {
  const RootSystem& rs = ar.roots();
  std::ostringstream out;
  out << "digraph AR {\n  rankdir=LR;\n";
  for (std::size_t u = 0; u < ar.size(); ++u) {
    const auto& x = ar.indec(u);
    out << "  n" << u << " [label=" << quote(rs.name(x.root)) << (x.projective ? ", shape=box" : "") << "];\n";
  }
  for (auto [v, u] : ar.arrows()) out << "  n" << v << " -> n" << u << ";\n";
  for (std::size_t u : ar.nonprojectives())
    out << "  n" << u << " -> n" << *ar.indec(u).tau << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string phi_json(const RootSystem& rs, const PhiTable& t) {
  ordered_json j;
  j["xi"] = labels(t.xi.xi);
  j["levels"] = {t.min_level, t.max_level};
  j["entries"] = ordered_json::array();
  for (const auto& [key, v] : t.entries) {
    j["entries"].push_back({{"vertex", key.first + 1}, {"degree", key.second}, {"root", rs.name(v.root)},
                            {"level", v.level}});
  }
  return dump(j);
}

std::string phi_text(const RootSystem& rs, const PhiTable& t) {
  auto cell = [&](const PhiValue& v) { return "(" + rs.name(v.root) + "," + std::to_string(v.level) + ")"; };
  std::ostringstream out;
  if (!rs.has_interval_names()) {
    for (const auto& [key, v] : t.entries)
      out << "(" << key.first + 1 << "," << key.second << ") -> " << cell(v) << "\n";
    return out.str();
  }
  const std::size_t n = rs.rank();
  auto [lo, hi] = degree_range(t);
  std::size_t width = 0;
  for (const auto& [key, v] : t.entries) {
    width = std::max(width, cell(v).size());
    width = std::max(width, ("(" + std::to_string(key.first + 1) + "," + std::to_string(key.second) + ")").size());
  }
  for (int p = hi; p >= lo; --p) {
    std::string keys, values;
    bool any = false;
    for (Vertex j = 0; j < n; ++j) {
      auto v = t.at(j, p);
      std::string k = v ? "(" + std::to_string(j + 1) + "," + std::to_string(p) + ")" : "";
      std::string c = v ? cell(*v) : "";
      any = any || v.has_value();
      keys += k + std::string(width - k.size() + 2, ' ');
      values += c + std::string(width - c.size() + 2, ' ');
    }
    if (!any) continue;
    std::string line = keys + "|  " + values;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string bound_quiver_json(const BoundQuiver& bq) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : bq.vertices()) j["vertices"].push_back({{"name", v.name}, {"kind", kind_name(v.kind)}});
  j["arrows"] = ordered_json::array();
  for (const auto& a : bq.arrows()) {
    j["arrows"].push_back({{"id", a.id}, {"source", bq.vertex(a.source).name}, {"target", bq.vertex(a.target).name}});
  }
  j["relations"] = ordered_json::array();
  for (const auto& r : bq.relations()) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : r.terms) {
      ordered_json path = ordered_json::array();
      for (std::size_t a : t.path) path.push_back(bq.arrow(a).id);
      terms.push_back({{"coeff", to_string(t.coeff)}, {"path", path}});
    }
    j["relations"].push_back(
        {{"source", bq.vertex(r.source).name}, {"target", bq.vertex(r.target).name}, {"terms", terms}});
  }
  return dump(j);
}

std::string bound_quiver_dot(const BoundQuiver& bq, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) {
    const auto& bv = bq.vertex(v);
    out << "  v" << v << " [label=" << quote(bv.name) << (bv.kind == NodeKind::kModule ? "" : ", shape=box")
        << "];\n";
  }
  for (const auto& a : bq.arrows())
    out << "  v" << a.source << " -> v" << a.target << " [label=" << quote(a.id) << "];\n";
  out << "}\n";
  return out.str();
}

std::string matrix_json(const Matrix& m) { return to_json(m).dump(); }

std::string rep_json(const Quiver& q, const Rep& m) {
  ordered_json j;
  j["dims"] = labels(m.dims.entries());
  j["maps"] = ordered_json::object();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) j["maps"][q.arrow(a).id] = to_json(m.maps[a]);
  return dump(j);
}

Rep parse_rep_json(const Quiver& q, std::string_view text) {
  ordered_json j = parse_json(text);
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != q.num_vertices()) {
    throw ParseError("representation needs \"dims\" with one entry per vertex");
  }
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be non-negative integers");
    dims.push_back(d.get<int>());
  }
  Rep m{DimVector(dims), {}};
  const auto& maps = j.contains("maps") ? j["maps"] : ordered_json::object();
  for (const Arrow& a : q.arrows()) {
    std::size_t rows = dims[a.target], cols = dims[a.source];
    if (!maps.contains(a.id)) {
      if (rows * cols != 0) throw ParseError("missing map for arrow " + a.id);
      m.maps.emplace_back(rows, cols);
      continue;
    }
    m.maps.push_back(matrix_from_json(maps[a.id], rows, cols, "map " + a.id));
  }
  return m;
}

std::string bound_rep_json(const BoundQuiver& bq, const BoundRep& f) {
  ordered_json j;
  j["dims"] = ordered_json::object();
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) j["dims"][bq.vertex(v).name] = f.dims[v];
  j["maps"] = ordered_json::object();
  for (std::size_t a = 0; a < bq.num_arrows(); ++a) j["maps"][bq.arrow(a).id] = to_json(f.maps[a]);
  j["relations_hold"] = f.relations_hold;
  return dump(j);
}

BoundRep parse_bound_rep_json(const BoundQuiver& bq, std::string_view text) {
  ordered_json j = parse_json(text);
  if (!j.contains("dims") || !j["dims"].is_object()) throw ParseError("bound representation needs \"dims\"");
  BoundRep f;
  for (const auto& v : bq.vertices()) {
    if (!j["dims"].contains(v.name)) throw ParseError("missing dimension at " + v.name);
    const auto& d = j["dims"][v.name];
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be non-negative integers");
    f.dims.push_back(d.get<int>());
  }
  const auto& maps = j.contains("maps") ? j["maps"] : ordered_json::object();
  for (const auto& a : bq.arrows()) {
    std::size_t rows = f.dims[a.target], cols = f.dims[a.source];
    if (!maps.contains(a.id)) {
      if (rows * cols != 0) throw ParseError("missing map for arrow " + a.id);
      f.maps.emplace_back(rows, cols);
      continue;
    }
    f.maps.push_back(matrix_from_json(maps[a.id], rows, cols, "map " + a.id));
  }
  verify_relations(bq, f);
  return f;
}

std::string hat_dim_json(const BoundQuiver& bq, const HatDimVector& d) {
  ordered_json j = ordered_json::object();
  for (std::size_t v = 0; v < bq.num_vertices(); ++v) j[bq.vertex(v).name] = d[v];
  return dump(j);
}

MultVector parse_mult(const ARData& ar, std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) items.push_back(current);

  MultVector m = zero_mult(ar);
  for (const std::string& item : items) {
    if (item.empty()) throw ParseError("empty summand in multiplicity list");
    std::string root = item;
    int count = 1;
    auto colon = item.rfind(':');
    if (colon != std::string::npos && item.find(']', colon) == std::string::npos) {
      root = item.substr(0, colon);
      try {
        std::size_t used = 0;
        count = std::stoi(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1 || count < 0) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad multiplicity in '" + item + "'");
      }
    }
    auto idx = ar.roots().index_of(ar.roots().parse_name(root));
    if (!idx) throw ParseError("'" + root + "' is not a positive root");
    m[*idx] += count;
  }
  return m;
}

std::string mult_string(const ARData& ar, const MultVector& m) {
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r] == 0) continue;
    if (!out.empty()) out += ",";
    out += ar.roots().name(r) + ":" + std::to_string(m[r]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qhl
