//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhl/rational.hpp"

namespace qhl {

// Dense row-major matrix over the rationals. Zero-sized dimensions are
// allowed and behave as the corresponding zero maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& factor) const;
  Matrix transpose() const;

  bool is_zero() const;

  Matrix column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  // Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Horizontal concatenation; all parts must share `rows`.
Matrix hstack(std::span<const Matrix> parts, std::size_t rows);
// Vertical concatenation; all parts must share `cols`.
Matrix vstack(std::span<const Matrix> parts, std::size_t cols);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}.
Matrix null_space(const Matrix& m);

// The pivot columns of `m`, a basis of its column space drawn from its own
// columns (leftmost first).
Matrix column_basis(const Matrix& m);

// Some X with a X = b, free variables set to zero; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Standard basis vectors e_k, taken greedily in increasing k, that extend the
// column span of `subspace` (rows = ambient dimension) to the whole space.
Matrix complement_basis(const Matrix& subspace);

std::string to_string(const Matrix& m);

}  // namespace qhl
