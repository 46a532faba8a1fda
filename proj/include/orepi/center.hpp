/**
 * @file center.hpp
 * @brief Centrality tests, per-family central elements, the down-up
 *        automorphism analysis and finite-over-center spanning checks.
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orepi/linalg.hpp"
#include "orepi/presentation.hpp"

namespace orepi {

struct CentralityResult {
  bool central = false;
  std::string failing_generator;  // empty when central
  std::optional<NCPoly> residual;  // normal form of a*g - g*a
};

/// a commutes with every generator. With check_confluence the presentation
/// is overlap-checked first (NonConfluentPresentation otherwise).
CentralityResult is_central(const Presentation& P, const NCPoly& a, bool check_confluence = true);

/// Every central element spanned by irreducible words of weight <= D.
std::vector<NCPoly> central_elements_upto(const Presentation& P, unsigned D);

struct CentralElement {
  std::string name;
  NCPoly element;
  std::string condition;  // parameter condition under which it is claimed
};

struct CentralSet {
  std::vector<CentralElement> elements;
  /// Exponent caps on residual monomials, by generator name. Generators
  /// without a cap are bounded only by the degree.
  std::map<std::string, unsigned> caps;
  /// Whether the elements are claimed to make the algebra module-finite.
  bool spanning_claimed = true;
  std::string note;
};

/// Named central elements of the family at the given parameters.
/// Throws HypothesisNotMet when the parameters miss the required hypotheses.
CentralSet central_candidates(const FamilySpec& spec);

/// Caps implied by central elements whose leading word is a pure power g^k.
std::map<std::string, unsigned> implied_caps(const Presentation& P, const std::vector<CentralElement>& c);

// ---------------------------------------------------------------------------
// down-up automorphism

/// Commutative polynomial in x, y: (i, j) -> coefficient of x^i y^j.
using CPoly = std::map<std::pair<unsigned, unsigned>, Coeff>;

/// phi(x) = lin[0][0] x + lin[0][1] y + shift[0], likewise phi(y).
struct AffineAuto {
  std::array<std::array<Coeff, 2>, 2> lin;
  std::array<Coeff, 2> shift;

  /// phi(x) = y, phi(y) = alpha y + beta x + gamma.
  static AffineAuto downup(const Coeff& alpha, const Coeff& beta, const Coeff& gamma);
  /// Action on the column (x, y, 1).
  Matrix matrix() const;
  CPoly apply(const CPoly& f) const;
};

enum class OrderCase { DistinctRootsNotUnity, Lambda1GammaNonzero, RepeatedRootJordanBlock, RepeatedRoot1 };
const char* order_case_name(OrderCase c);

struct OrderResult {
  bool finite = false;
  unsigned long m = 0;     // order when finite
  OrderCase tag{};         // meaningful when infinite
  Coeff lambda, mu;        // roots of t^2 - alpha t - beta; lambda = 1 if a root is 1
};

/// Roots of t^2 - alpha t - beta, ordered so that lambda = 1 when 1 is a root.
/// Explicit roots are checked against alpha and beta.
std::pair<Coeff, Coeff> downup_roots(const Coeff& alpha, const Coeff& beta,
                                     const std::optional<std::pair<Coeff, Coeff>>& roots = std::nullopt);

/// Finite verdicts are confirmed by iterating the automorphism.
/// Errors: BetaZero, RootsRequired.
OrderResult gwa_auto_order(const Coeff& alpha, const Coeff& beta, const Coeff& gamma,
                           const std::optional<std::pair<Coeff, Coeff>>& roots = std::nullopt);

/// Basis of the fixed polynomials of total degree <= d.
std::vector<CPoly> fixed_polynomials(const AffineAuto& phi, unsigned d);

/// x -> ud, y -> du.
NCPoly downup_embed(const Presentation& P, const CPoly& f);

/// Errors: TrivialCenter, RootsRequired, BetaZero.
CentralSet downup_center_generators(const DownUpParams& s,
                                    const std::optional<std::pair<Coeff, Coeff>>& roots = std::nullopt);

// ---------------------------------------------------------------------------

struct SpanningReport {
  bool spanned = false;
  unsigned degree = 0;
  std::size_t target = 0;  // irreducible words of weight <= degree
  std::size_t rank = 0;
  std::size_t generators = 0;  // products c*m used
  std::optional<Word> first_missing;
};

inline unsigned default_spanning_degree(const std::map<std::string, unsigned>& caps) {
  unsigned m = 0;
  for (const auto& kv : caps) m = std::max(m, kv.second);
  return 2 * m + 2;
}

/// Whether every irreducible word of weight <= D lies in the span of
/// c*m, c a product of the centrals and m an irreducible word under the caps.
SpanningReport spanning_check(const Presentation& P, const std::vector<CentralElement>& centrals,
                              const std::map<std::string, unsigned>& caps, unsigned D,
                              bool check_confluence = true);

}  // namespace orepi
