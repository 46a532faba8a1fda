/**
 * @file matrep.hpp
 * @brief Matrix models at roots of unity, the standard polynomial and a
 *        brute-force search for multilinear identities.
 */
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orepi/linalg.hpp"

namespace orepi {

inline constexpr unsigned kMaxIdentityDegree = 5;

struct MatAlgebra {
  std::size_t n = 0;
  CtxPtr ctx;
  std::vector<std::pair<std::string, Matrix>> generators;

  /// Basis of the unital subalgebra spanned by products of the generators.
  std::vector<Matrix> span_basis() const;
};

/// x -> cyclic shift, y -> diag(1, q, ..., q^(n-1)); checks yx = q xy.
/// Errors: NotPrimitiveRoot.
MatAlgebra quantum_plane_rep(unsigned n, const Coeff& q);

/// M_n over ctx, generated by the matrix units.
MatAlgebra full_matrix_algebra(const CtxPtr& ctx, std::size_t n);

/// All permutations of 0..d-1 in lexicographic order, with their signs.
std::vector<std::vector<unsigned>> permutations(unsigned d);
int permutation_sign(const std::vector<unsigned>& p);

/// s_k(A_1..A_k) = sum over sigma of sgn(sigma) A_sigma(1)...A_sigma(k).
/// Errors: SizeMismatch.
Matrix standard_poly_eval(const std::vector<Matrix>& mats);

/// sum_sigma c_sigma A_sigma(1)...A_sigma(d), sigma in permutations(d) order.
Matrix multilinear_eval(const std::vector<Coeff>& coeffs, const std::vector<Matrix>& mats);

struct IdentitySpace {
  unsigned degree = 0;
  std::vector<std::vector<unsigned>> perms;
  std::vector<std::vector<Coeff>> basis;

  bool contains(const std::vector<Coeff>& v) const;
};

/// Coefficient vector of s_d in permutations(d) order.
std::vector<Coeff> standard_coefficients(const CtxPtr& ctx, unsigned d);

/// Kernel of the evaluation map on every tuple of span-basis matrices.
/// Errors: DegreeTooLarge (d > kMaxIdentityDegree).
IdentitySpace multilinear_identity_search(const MatAlgebra& alg, unsigned d);

/// n x n matrix with integer entries drawn uniformly from [-bound, bound].
Matrix random_matrix(const CtxPtr& ctx, std::size_t n, std::mt19937& rng, long bound = 5);

}  // namespace orepi
