/**
 * @file presentation.hpp
 * @brief Words, noncommutative polynomials, rewriting presentations and the
 *        built-in algebra families.
 */
#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orepi/exactnum.hpp"

namespace orepi {

/// A word in the generators. Each char holds a generator's rank in the
/// precedence order, so plain string comparison is the left-lex tiebreak.
using Word = std::string;
using Letter = unsigned char;

inline Letter letter_at(const Word& w, std::size_t i) { return static_cast<Letter>(w[i]); }

/// Weighted degree, then length, then left-lex by precedence.
struct TermOrder {
  std::vector<unsigned> weight;  // indexed by letter

  unsigned weight_of(const Word& w) const;
  bool less(const Word& a, const Word& b) const;
};

struct WordLess {
  const TermOrder* order = nullptr;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

using OrderPtr = std::shared_ptr<const TermOrder>;

class NCPoly {
 public:
  using Terms = std::map<Word, Coeff, WordLess>;

  NCPoly(CtxPtr ctx, OrderPtr order);

  const CtxPtr& ctx() const { return ctx_; }
  const OrderPtr& order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Word& w) const;
  void add_term(const Word& w, const Coeff& c);
  /// Largest word in the term order; requires a nonzero polynomial.
  const Word& leading_word() const { return terms_.rbegin()->first; }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Coeff& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Coeff& c) { return a *= c; }
  friend NCPoly operator*(const Coeff& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  /// Concatenation product with no rewriting.
  NCPoly concat(const NCPoly& o) const;

 private:
  CtxPtr ctx_;
  OrderPtr order_;
  Terms terms_;
};

struct Rule {
  Word lhs;
  NCPoly rhs;
};

enum class Family {
  Bh,
  Hpq,
  M2,
  UqB2,
  WeylMalt,
  WeylAJ,
  BiQuad3,
  ThreeCyclic,
  DownUp,
  Bqf,
  QuantumPlane,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

class Presentation {
 public:
  /// generators and weights in display order; precedence lists every
  /// generator once, smallest first.
  Presentation(CtxPtr ctx, std::vector<std::string> generators, std::vector<unsigned> weights,
               std::vector<std::string> precedence);

  const CtxPtr& ctx() const { return ctx_; }
  const OrderPtr& order() const { return order_; }
  std::size_t num_generators() const { return names_.size(); }
  /// Name of the generator with this precedence rank.
  const std::string& name(Letter l) const { return names_[l]; }
  /// Letters in display order.
  const std::vector<Letter>& display_order() const { return display_; }
  std::optional<Letter> letter(std::string_view name) const;
  Letter require_letter(std::string_view name) const;

  Word word(const std::vector<std::string>& names) const;
  std::string word_string(const Word& w) const;
  std::vector<std::string> word_names(const Word& w) const;

  NCPoly zero() const { return NCPoly(ctx_, order_); }
  NCPoly scalar(const Coeff& c) const;
  NCPoly monomial(const Word& w, const Coeff& c) const;
  NCPoly monomial(const Word& w) const;
  /// Generator element by name.
  NCPoly gen(std::string_view name) const;
  Coeff one() const { return Coeff::one(ctx_); }
  Coeff num(long n) const { return Coeff::from_int(ctx_, n); }

  void add_rule(Word lhs, NCPoly rhs);
  const std::vector<Rule>& rules() const { return rules_; }
  /// Rules whose lhs starts with the given letter, in rule order.
  const std::vector<std::size_t>& rules_starting_with(Letter l) const { return by_first_[l]; }
  /// True when every rhs word is smaller than its lhs.
  bool oriented() const { return oriented_; }

  std::optional<Family> family() const { return family_; }
  void set_family(Family f) { family_ = f; }

  std::string to_string(const NCPoly& p) const;

 private:
  CtxPtr ctx_;
  OrderPtr order_;
  std::vector<std::string> names_;  // by rank
  std::vector<Letter> display_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  bool oriented_ = true;
  std::optional<Family> family_;
};

struct OrientationIssue {
  std::size_t rule = 0;
  Word word;
  std::string reason;
};

struct OrientationReport {
  bool ok = true;
  std::vector<OrientationIssue> issues;
  /// Pairs (i, j) where the lhs of rule i occurs inside the lhs of rule j.
  std::vector<std::pair<std::size_t, std::size_t>> containments;
};

OrientationReport validate_orientation(const Presentation& p);

/// Evaluates an expression over the generators of p; scalars resolve as in
/// eval_coeff, generator names take priority.
NCPoly eval_element(const Expr& e, const Presentation& p, const IdentResolver& scalars = {});
NCPoly parse_element(std::string_view text, const Presentation& p, const IdentResolver& scalars = {});

/// Coefficient-wise specialisation into target, with the rules mapped too.
NCPoly specialize(const NCPoly& a, const Assignment& assignment, const Presentation& target);
Presentation specialize(const Presentation& p, const Assignment& assignment, const CtxPtr& target);

// ---------------------------------------------------------------------------
// family parameter records

struct BhParams {
  Coeff h;
};
struct HpqParams {
  Coeff p, q;
};
struct M2Params {
  Coeff alpha, beta;
};
struct UqB2Params {
  Coeff q;
};
/// q[i] and lambda[i][j] (full matrix, lambda[j][i] = 1/lambda[i][j]).
struct WeylData {
  std::vector<Coeff> q;
  std::vector<std::vector<Coeff>> lambda;
};
struct WeylMaltParams {
  WeylData data;
};
struct WeylAJParams {
  WeylData data;
};
/// x2x1 - q1 x1x2 = lin[0].x + consts[0], x3x1 - q2 x1x3 = lin[1].x + consts[1],
/// x3x2 - q3 x2x3 = lin[2].x + consts[2], where lin[r] = coefficients of x1, x2, x3.
struct BiQuad3Params {
  Coeff q1, q2, q3;
  std::array<std::array<Coeff, 3>, 3> lin;
  std::array<Coeff, 3> consts;
};
struct ThreeCyclicParams {
  Coeff q, alpha, beta, gamma;
};
struct DownUpParams {
  Coeff alpha, beta, gamma;
};
/// f = sum f[j] t^j.
struct BqfParams {
  Coeff q;
  std::vector<Coeff> f;
};
struct QuantumPlaneParams {
  Coeff q;
};

using FamilySpec = std::variant<BhParams, HpqParams, M2Params, UqB2Params, WeylMaltParams, WeylAJParams,
                                BiQuad3Params, ThreeCyclicParams, DownUpParams, BqfParams, QuantumPlaneParams>;

Family family_of(const FamilySpec& spec);
CtxPtr ctx_of(const FamilySpec& spec);

/// Oriented presentation of a family. Errors: ZeroParameter,
/// DownUpNotNoetherian, NonAntisymmetricLambda, OrientationFailure.
Presentation build_family(const FamilySpec& spec);

/// Family parameters from name=expression strings. Missing parameters are
/// filled with the conventional symbol when ctx has it as a parameter.
FamilySpec family_spec_from_params(Family f, const std::map<std::string, std::string>& params,
                                   const CtxPtr& ctx);

/// Degree of f with trailing zeros ignored; -1 for f = 0.
int poly_degree(const std::vector<Coeff>& f);

}  // namespace orepi
