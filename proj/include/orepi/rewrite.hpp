/**
 * @file rewrite.hpp
 * @brief Normal forms, products and critical-pair checks for a Presentation.
 */
#pragma once

#include <vector>

#include "orepi/presentation.hpp"

namespace orepi {

/// Reduces the largest reducible word first, at its leftmost match.
/// Throws OrientationFailure if the presentation is not oriented.
NCPoly normal_form(const Presentation& p, const NCPoly& a);

NCPoly multiply(const Presentation& p, const NCPoly& a, const NCPoly& b);

/// Normal form of a*b - lambda*b*a.
NCPoly q_commutator(const Presentation& p, const NCPoly& a, const NCPoly& b, const Coeff& lambda);

/// Normal form of a^n.
NCPoly power(const Presentation& p, const NCPoly& a, unsigned n);

bool is_irreducible(const Presentation& p, const Word& w);

/// Every irreducible word of weighted degree at most max_weight, in term order.
std::vector<Word> irreducible_words(const Presentation& p, unsigned max_weight);

struct CriticalPair {
  std::size_t rule_a = 0;  // applied at the start of the ambiguity
  std::size_t rule_b = 0;  // applied at offset
  std::size_t offset = 0;
  bool containment = false;
  Word word;
  NCPoly residual;  // normal form of (reduct via a) - (reduct via b)
};

struct ConfluenceReport {
  bool confluent = true;
  std::vector<CriticalPair> pairs;

  const CriticalPair* first_failure() const;
};

/// Resolves every overlap and containment ambiguity between rule pairs.
ConfluenceReport overlap_check(const Presentation& p);

}  // namespace orepi
