/**
 * @file identities.hpp
 * @brief q-numbers and the closed-form commutation identities of each family.
 *
 * Every identity is exposed as an oracle: a raw left side and a right side
 * built from closed-form coefficients. check_paper_identity compares their
 * normal forms exactly.
 */
#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "orepi/presentation.hpp"

namespace orepi {

/// 1 + q + ... + q^(k-1).
Coeff q_number(unsigned k, const Coeff& q);
/// sum_{i<n} q^i p^-(n-1-i); equals (q^n - p^-n)/(q - p^-1) when defined.
Coeff pq_number(unsigned n, const Coeff& p, const Coeff& q);
Coeff q_factorial(unsigned k, const Coeff& q);
/// Throws QFactorialVanishes if a denominator factorial is zero.
Coeff gauss_binomial(unsigned k, unsigned i, const Coeff& q);

/// (q^2k - q^-2k)/(q^2 - q^-2), as q^(2(k-1)) [k]_{q^-4}.
Coeff uqb2_B(unsigned k, const Coeff& q);
/// C_1 = 0, C_{k+1} = q^-2 B_k + C_k.
Coeff uqb2_C(unsigned k, const Coeff& q);
/// c_a = [a]_{q^2}, d_a = [a]_{q^-2}.
Coeff cyc3_c(unsigned a, const Coeff& q);
Coeff cyc3_d(unsigned a, const Coeff& q);

/// theta = (1 - pq) yx - t in H_{p,q}, in normal form.
NCPoly h_theta(const Presentation& P, const HpqParams& s);
/// z_i = x_i y_i - y_i x_i for 1 <= i <= n, z_0 = 1, in normal form.
NCPoly weyl_z(const Presentation& P, std::size_t i);
/// e = xz - q^2 beta/(q^2 - 1) in the 3-cyclic algebra; needs q^2 != 1.
NCPoly cyc3_e(const Presentation& P, const ThreeCyclicParams& s);

enum class LemmaId {
  BhCommute,
  HYxn,
  HYnx,
  HThetaRel,
  M2K1,
  M2K2,
  M2PowerTable,
  UqB2I,
  UqB2II,
  UqB2III,
  UqB2IV,
  WeylXky,
  WeylXyk,
  WeylZiNormal,
  Cyc3I,
  Cyc3II,
  Cyc3III,
  Cyc3IV,
  Cyc3V,
  Cyc3VI,
  Cyc3ERel,
  BqfDeltaUk,
  BqfDeltaVk,
  BqfWuk,
  BqfWvk,
  BqfWku,
};

struct LemmaInfo {
  LemmaId id;
  const char* name;
  Family family;
  unsigned min_n;
  unsigned max_n;  // 0 = unbounded
};

const std::vector<LemmaInfo>& all_lemmas();
const LemmaInfo& lemma_info(LemmaId id);
std::optional<LemmaId> lemma_from_name(std::string_view name);

struct IdentityInstance {
  std::string label;
  NCPoly lhs;  // raw word polynomial
  NCPoly rhs;  // closed-form side, not necessarily normal
};

/// All instances of the identity at exponent n (one per index choice).
/// Errors: FamilyMismatch, RangeError, HypothesisNotMet.
std::vector<IdentityInstance> oracle_rhs(LemmaId id, const FamilySpec& spec, const Presentation& P, unsigned n);
std::vector<IdentityInstance> oracle_rhs(LemmaId id, const FamilySpec& spec, unsigned n);

struct IdentityCheck {
  unsigned n = 0;
  std::string label;
  bool pass = false;
  NCPoly residual;  // normal_form(lhs - rhs)
};

struct IdentityReport {
  LemmaId id;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Checks every n in the lemma's range up to n_max.
IdentityReport check_paper_identity(LemmaId id, const FamilySpec& spec, unsigned n_max);

// ---------------------------------------------------------------------------
// BiQuad3 consistency

/// The ten PBW conditions as values that must all vanish, in order:
/// three linear links, three forced zeros, the x1, x2, x3 and constant
/// coefficients of the x3x2x1 overlap.
std::array<Coeff, 10> biquad3_conditions(const BiQuad3Params& s);
bool biquad3_consistent(const BiQuad3Params& s);

/// Random instance over Q with every condition satisfied and generic q's.
BiQuad3Params biquad3_random_consistent(const CtxPtr& ctx, std::mt19937& rng);
/// Consistent instance with one entry perturbed; kind cycles through
/// lambda, beta, c, b1, b2, b3.
BiQuad3Params biquad3_random_violation(const CtxPtr& ctx, std::mt19937& rng, unsigned kind);

}  // namespace orepi
