/**
 * @file linalg.hpp
 * @brief Exact linear algebra over a Coeff field.
 */
#pragma once

#include <map>
#include <vector>

#include "orepi/exactnum.hpp"

namespace orepi {

using SparseVec = std::map<std::size_t, Coeff>;

/// Incrementally maintained echelon form; rows are keyed by their pivot.
class EchelonBasis {
 public:
  SparseVec reduce(SparseVec v) const;
  /// Returns true when v was independent of the rows so far.
  bool insert(SparseVec v);
  std::size_t rank() const { return rows_.size(); }
  /// Each row's smallest key is its pivot.
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Coeff> a;

  Matrix() = default;
  Matrix(const CtxPtr& ctx, std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Coeff::zero(ctx)) {}
  static Matrix identity(const CtxPtr& ctx, std::size_t n);

  Coeff& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Coeff& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  const CtxPtr& ctx() const { return a.front().ctx(); }
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Coeff& c, const Matrix& x);
  friend bool operator==(const Matrix& x, const Matrix& y);
};

/// Basis of the null space {v : m v = 0}.
std::vector<std::vector<Coeff>> kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace orepi
