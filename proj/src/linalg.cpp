#include "orepi/linalg.hpp"

namespace orepi {

SparseVec EchelonBasis::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Coeff factor = it->second;
    const std::size_t key = it->first;
    for (const auto& [k, c] : row->second) {
      auto [slot, inserted] = v.try_emplace(k, -(factor * c));
      if (!inserted) {
        slot->second -= factor * c;
        if (slot->second.is_zero()) v.erase(slot);
      }
    }
    it = v.upper_bound(key);
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Coeff inv = v.begin()->second.inverse();
  for (auto& kv : v) kv.second *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

Matrix Matrix::identity(const CtxPtr& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Coeff::one(ctx);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw Error(Errc::SizeMismatch, "matrix product shape");
  Matrix r(x.ctx(), x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Coeff& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::SizeMismatch, "matrix sum shape");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Errc::SizeMismatch, "matrix difference shape");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Matrix operator*(const Coeff& c, const Matrix& x) {
  Matrix r = x;
  for (auto& e : r.a) e *= c;
  return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!(x.a[i] == y.a[i])) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    const Coeff inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Coeff f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Coeff>> kernel(const Matrix& m) {
  Matrix w = m;
  auto pivots = rref(w);
  const CtxPtr& ctx = m.ctx();
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols, Coeff::zero(ctx));
    v[free] = Coeff::one(ctx);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return rref(w).size();
}

}  // namespace orepi
