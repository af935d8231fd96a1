//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "qhl/rep.hpp"

#include "qhl/error.hpp"

namespace qhl {

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

Matrix inverse(const Matrix& g) {
  auto x = solve(g, Matrix::identity(g.rows()));
  if (g.rows() != g.cols() || !x || rank(g) != g.rows()) throw DomainError("base change is not invertible");
  return *x;
}

// Assembles the Hom equations. Unknown phi_v(r, c) has index
// offset[v] + r * dims_m[v] + c.
Matrix hom_system(const ArrowShape& shape, const std::vector<int>& dims_m,
                  const std::vector<Matrix>& maps_m, const std::vector<int>& dims_n,
                  const std::vector<Matrix>& maps_n, std::vector<std::size_t>& offset) {
  offset.assign(shape.num_vertices + 1, 0);
  for (std::size_t v = 0; v < shape.num_vertices; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(dims_n[v]) * dims_m[v];
  std::size_t equations = 0;
  for (const auto& [s, t] : shape.arrows) equations += static_cast<std::size_t>(dims_n[t]) * dims_m[s];

  Matrix sys(equations, offset.back());
  std::size_t row = 0;
  for (std::size_t a = 0; a < shape.arrows.size(); ++a) {
    auto [s, t] = shape.arrows[a];
    const Matrix& ma = maps_m[a];
    const Matrix& na = maps_n[a];
    const std::size_t ms = dims_m[s], mt = dims_m[t], ns = dims_n[s], nt = dims_n[t];
    // (phi_t M_a - N_a phi_s)(r, c) = 0 for r < nt, c < ms.
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        for (std::size_t k = 0; k < mt; ++k)
          if (!is_zero(ma(k, c))) sys(row, offset[t] + r * mt + k) += ma(k, c);
        for (std::size_t k = 0; k < ns; ++k)
          if (!is_zero(na(r, k))) sys(row, offset[s] + k * ms + c) -= na(r, k);
      }
    }
  }
  return sys;
}

}  // namespace

void validate_rep(const Quiver& q, const Rep& m) {
  if (m.dims.size() != q.num_vertices()) throw DomainError("representation has the wrong number of vertices");
  if (!m.dims.is_nonnegative()) throw DomainError("representation has a negative dimension");
  if (m.maps.size() != q.arrows().size()) throw DomainError("representation has the wrong number of maps");
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (m.maps[a].rows() != static_cast<std::size_t>(m.dims[arr.target]) ||
        m.maps[a].cols() != static_cast<std::size_t>(m.dims[arr.source])) {
      throw DomainError("map for arrow " + arr.id + " has the wrong shape");
    }
  }
}

Rep zero_rep(const Quiver& q, const DimVector& d) {
  Rep m{d, {}};
  for (const Arrow& a : q.arrows()) m.maps.emplace_back(d[a.target], d[a.source]);
  return m;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  Rep out{a.dims + b.dims, {}};
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    Matrix m(a.maps[k].rows() + b.maps[k].rows(), a.maps[k].cols() + b.maps[k].cols());
    m.set_block(0, 0, a.maps[k]);
    m.set_block(a.maps[k].rows(), a.maps[k].cols(), b.maps[k]);
    out.maps.push_back(std::move(m));
  }
  return out;
}

Rep base_change(const Quiver& q, const Rep& m, const std::vector<Matrix>& g) {
  std::vector<Matrix> inv;
  for (const Matrix& gv : g) inv.push_back(inverse(gv));
  Rep out{m.dims, {}};
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Arrow& arr = q.arrow(a);
    out.maps.push_back(g[arr.target] * m.maps[a] * inv[arr.source]);
  }
  return out;
}

Matrix path_matrix(const Quiver& q, const Rep& m, Vertex from, Vertex to) {
  if (!q.has_path(from, to)) throw DomainError("no path between the given vertices");
  Matrix out = Matrix::identity(m.dims[from]);
  for (std::size_t a : q.path_arrows(from, to)) out = m.maps[a] * out;
  return out;
}

ArrowShape shape_of(const Quiver& q) {
  ArrowShape s{q.num_vertices(), {}};
  for (const Arrow& a : q.arrows()) s.arrows.emplace_back(a.source, a.target);
  return s;
}

ArrowShape shape_of(const BoundQuiver& q) {
  ArrowShape s{q.num_vertices(), {}};
  for (const auto& a : q.arrows()) s.arrows.emplace_back(a.source, a.target);
  return s;
}

std::vector<Morphism> hom_space(const ArrowShape& shape, const std::vector<int>& dims_m,
                                const std::vector<Matrix>& maps_m, const std::vector<int>& dims_n,
                                const std::vector<Matrix>& maps_n) {
  std::vector<std::size_t> offset;
  Matrix kernel = null_space(hom_system(shape, dims_m, maps_m, dims_n, maps_n, offset));
  std::vector<Morphism> basis;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    Morphism phi;
    for (std::size_t v = 0; v < shape.num_vertices; ++v) {
      Matrix block(dims_n[v], dims_m[v]);
      for (int r = 0; r < dims_n[v]; ++r)
        for (int c = 0; c < dims_m[v]; ++c) block(r, c) = kernel(offset[v] + r * dims_m[v] + c, k);
      phi.push_back(std::move(block));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::size_t hom_dimension(const ArrowShape& shape, const std::vector<int>& dims_m,
                          const std::vector<Matrix>& maps_m, const std::vector<int>& dims_n,
                          const std::vector<Matrix>& maps_n) {
  std::vector<std::size_t> offset;
  Matrix sys = hom_system(shape, dims_m, maps_m, dims_n, maps_n, offset);
  return sys.cols() - rank(sys);
}

std::vector<Morphism> hom_space(const Quiver& q, const Rep& m, const Rep& n) {
  return hom_space(shape_of(q), m.dims.entries(), m.maps, n.dims.entries(), n.maps);
}

std::size_t hom_dimension(const Quiver& q, const Rep& m, const Rep& n) {
  return hom_dimension(shape_of(q), m.dims.entries(), m.maps, n.dims.entries(), n.maps);
}

Rep build_indecomposable(const ARData& ar, const DimVector& beta, std::uint64_t seed) {
  if (!ar.roots().is_positive_root(beta)) {
    throw DomainError(to_string(beta) + " is not a positive root");
  }
  const Quiver& q = ar.quiver();
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rep m{beta, {}};
    for (const Arrow& a : q.arrows()) m.maps.push_back(random_matrix(beta[a.target], beta[a.source], rng));
    if (hom_dimension(q, m, m) == 1) return m;
  }
  throw InternalError("no indecomposable sample of dimension " + to_string(beta));
}

Catalog::Catalog(const ARData& ar, std::uint64_t seed) {
  for (std::size_t u = 0; u < ar.size(); ++u) {
    models_.push_back(build_indecomposable(ar, ar.indec(u).dim, seed + 0x9e3779b97f4a7c15ULL * (u + 1)));
  }
}

Rep realize(const ARData& ar, const Catalog& catalog, const MultVector& m) {
  Rep out = zero_rep(ar.quiver(), DimVector(ar.quiver().num_vertices()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int k = 0; k < m[r]; ++k) out = direct_sum(out, catalog.model(ar.of_root(r)));
  return out;
}

Rep scramble(const Quiver& q, const Rep& m, std::mt19937_64& rng) {
  std::vector<Matrix> g;
  for (Vertex v = 0; v < q.num_vertices(); ++v) {
    const std::size_t d = m.dims[v];
    Matrix gv;
    do {
      gv = random_matrix(d, d, rng);
    } while (rank(gv) != d);
    g.push_back(std::move(gv));
  }
  return base_change(q, m, g);
}

MultVector decompose(const ARData& ar, const Catalog& catalog, const Rep& m) {
  const Quiver& q = ar.quiver();
  validate_rep(q, m);
  const std::size_t size = ar.size();
  Matrix h(size, size), b(size, 1);
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t v = 0; v < size; ++v) h(u, v) = ar.hom(u, v);
    b(u, 0) = static_cast<long>(hom_dimension(q, catalog.model(u), m));
  }
  auto x = solve(h, b);
  if (!x) throw DomainError("inconsistent Hom data; input is not a representation of this quiver");
  MultVector out = zero_mult(ar);
  for (std::size_t v = 0; v < size; ++v) {
    const Rational& c = (*x)(v, 0);
    if (c.get_den() != 1 || sgn(c) < 0) {
      throw DomainError("Hom data yields a non-integral or negative multiplicity");
    }
    out[ar.indec(v).root] = static_cast<int>(c.get_num().get_si());
  }
  if (dimension(ar, out) != m.dims) throw InternalError("decomposition does not add up");
  return out;
}

long orbit_dim(const ARData& ar, const MultVector& m) {
  DimVector d = dimension(ar, m);
  long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * d[i];
  return s - hom_dim(ar, m, m);
}

}  // namespace qhl
