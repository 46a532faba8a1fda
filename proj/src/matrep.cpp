#include "orepi/matrep.hpp"

#include <algorithm>
#include <numeric>

namespace orepi {

namespace {

std::map<std::size_t, Coeff> flatten(const Matrix& m) {
  std::map<std::size_t, Coeff> v;
  for (std::size_t i = 0; i < m.a.size(); ++i)
    if (!m.a[i].is_zero()) v.emplace(i, m.a[i]);
  return v;
}

}  // namespace

std::vector<Matrix> MatAlgebra::span_basis() const {
  std::vector<Matrix> basis;
  EchelonBasis eb;
  auto add = [&](const Matrix& m) {
    if (eb.insert(flatten(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  add(Matrix::identity(ctx, n));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& g : generators) add(basis[k] * g.second);
  return basis;
}

MatAlgebra quantum_plane_rep(unsigned n, const Coeff& q) {
  if (n == 0 || q.is_zero() || root_of_unity_order(q) != n)
    throw Error(Errc::NotPrimitiveRoot, "q must have multiplicative order " + std::to_string(n));
  const CtxPtr& ctx = q.ctx();
  Matrix X(ctx, n, n), Y(ctx, n, n);
  Coeff qi = Coeff::one(ctx);
  for (unsigned i = 0; i < n; ++i, qi *= q) {
    X((i + 1) % n, i) = Coeff::one(ctx);
    Y(i, i) = qi;
  }
  if (!(Y * X == q * (X * Y))) throw Error(Errc::NotPrimitiveRoot, "relation yx = q xy fails");
  MatAlgebra alg;
  alg.n = n;
  alg.ctx = ctx;
  alg.generators = {{"x", X}, {"y", Y}};
  return alg;
}

MatAlgebra full_matrix_algebra(const CtxPtr& ctx, std::size_t n) {
  MatAlgebra alg;
  alg.n = n;
  alg.ctx = ctx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(ctx, n, n);
      e(i, j) = Coeff::one(ctx);
      alg.generators.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), e});
    }
  return alg;
}

std::vector<std::vector<unsigned>> permutations(unsigned d) {
  std::vector<unsigned> p(d);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int permutation_sign(const std::vector<unsigned>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::vector<Coeff> standard_coefficients(const CtxPtr& ctx, unsigned d) {
  std::vector<Coeff> c;
  for (const auto& p : permutations(d)) c.push_back(Coeff::from_int(ctx, permutation_sign(p)));
  return c;
}

Matrix multilinear_eval(const std::vector<Coeff>& coeffs, const std::vector<Matrix>& mats) {
  if (mats.empty()) throw Error(Errc::SizeMismatch, "no matrices");
  const std::size_t n = mats[0].rows;
  for (const auto& m : mats)
    if (m.rows != n || m.cols != n) throw Error(Errc::SizeMismatch, "matrices must be square of one size");
  const auto perms = permutations(static_cast<unsigned>(mats.size()));
  if (coeffs.size() != perms.size()) throw Error(Errc::SizeMismatch, "one coefficient per permutation");
  const CtxPtr& ctx = mats[0].ctx();
  Matrix acc(ctx, n, n);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    Matrix prod = mats[perms[k][0]];
    for (std::size_t i = 1; i < perms[k].size(); ++i) prod = prod * mats[perms[k][i]];
    acc = acc + coeffs[k] * prod;
  }
  return acc;
}

Matrix standard_poly_eval(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw Error(Errc::SizeMismatch, "no matrices");
  return multilinear_eval(standard_coefficients(mats[0].ctx(), static_cast<unsigned>(mats.size())), mats);
}

bool IdentitySpace::contains(const std::vector<Coeff>& v) const {
  if (v.size() != perms.size()) return false;
  EchelonBasis eb;
  for (const auto& b : basis) {
    SparseVec s;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!b[i].is_zero()) s.emplace(i, b[i]);
    eb.insert(std::move(s));
  }
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace(i, v[i]);
  return eb.reduce(std::move(s)).empty();
}

IdentitySpace multilinear_identity_search(const MatAlgebra& alg, unsigned d) {
  if (d > kMaxIdentityDegree) throw Error(Errc::DegreeTooLarge, "degree " + std::to_string(d));
  IdentitySpace space;
  space.degree = d;
  space.perms = permutations(d);
  const std::size_t np = space.perms.size();
  const auto basis = alg.span_basis();
  const std::size_t nb = basis.size(), nn = alg.n * alg.n;

  // Each basis tuple and matrix entry gives one linear equation on the c_sigma.
  EchelonBasis rows;
  std::vector<std::size_t> tuple(d, 0);
  bool done = d == 0;
  while (!done && rows.rank() < np) {
    std::vector<SparseVec> eqs(nn);
    for (std::size_t k = 0; k < np; ++k) {
      Matrix prod = basis[tuple[space.perms[k][0]]];
      for (std::size_t i = 1; i < d; ++i) prod = prod * basis[tuple[space.perms[k][i]]];
      for (std::size_t e = 0; e < nn; ++e)
        if (!prod.a[e].is_zero()) eqs[e].emplace(k, prod.a[e]);
    }
    for (auto& eq : eqs) rows.insert(std::move(eq));
    std::size_t pos = 0;
    while (pos < d && ++tuple[pos] == nb) tuple[pos++] = 0;
    done = pos == d;
  }
  Matrix m(alg.ctx, std::max<std::size_t>(rows.rank(), 1), np);
  std::size_t r = 0;
  for (const auto& [pivot, row] : rows.rows()) {
    for (const auto& [k, c] : row) m(r, k) = c;
    ++r;
  }
  space.basis = kernel(m);
  return space;
}

Matrix random_matrix(const CtxPtr& ctx, std::size_t n, std::mt19937& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(ctx, n, n);
  for (auto& e : m.a) e = Coeff::from_int(ctx, dist(rng));
  return m;
}

}  // namespace orepi
