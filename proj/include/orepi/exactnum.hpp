/**
 * @file exactnum.hpp
 * @brief Exact coefficient fields: Q, Q(zeta_N), Q(params) and GF(p^k).
 *
 * Every scalar is a Coeff tied to a shared, immutable FieldCtx. Operations on
 * values from different contexts throw Error(CtxMismatch).
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orepi/errors.hpp"
#include "orepi/expr.hpp"

namespace orepi {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kMaxParams = 8;
inline constexpr unsigned kMaxGaloisPrime = 101;
inline constexpr unsigned kMaxGaloisDegree = 6;

/// Dense univariate polynomial over Q, lowest degree first.
using QPoly = std::vector<Rational>;

/// Exponent vector over the parameters of a rational-function field.
struct Monomial {
  std::array<std::uint16_t, kMaxParams> e{};
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial with rational coefficients; no zero entries.
using MPoly = std::map<Monomial, Rational>;

struct CycloValue {
  QPoly c;  // reduced modulo the cyclotomic polynomial, length phi(N)
};

/// num/den, not reduced to lowest terms. den has leading coefficient 1.
struct RatFuncValue {
  MPoly num;
  MPoly den;
};

struct GaloisValue {
  std::vector<std::uint32_t> c;  // length k, entries in [0, p)
};

enum class FieldKind { Rational, Cyclotomic, RatFunc, Galois };

class FieldCtx;
using CtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  static CtxPtr rational();
  static CtxPtr cyclotomic(unsigned level);
  static CtxPtr ratfunc(std::vector<std::string> params);
  /// modulus is monic, lowest degree first; irreducibility is checked.
  static CtxPtr galois(unsigned p, std::vector<std::uint32_t> modulus);
  /// "Q", "cyclo:N", "ratfunc:p,q", "gf:p" or "gf:p:x^2+1".
  static CtxPtr parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  unsigned level() const { return level_; }
  const QPoly& cyclotomic_poly() const { return phi_; }
  const std::vector<std::string>& params() const { return params_; }
  std::optional<std::size_t> param_index(std::string_view name) const;
  unsigned prime() const { return prime_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// phi(N) for cyclotomic, k for GF(p^k), 1 otherwise.
  unsigned degree() const;
  unsigned characteristic() const { return kind_ == FieldKind::Galois ? prime_ : 0; }
  /// Number of elements for GF(p^k).
  std::uint64_t order() const;

  std::string to_string() const;
  bool same_as(const FieldCtx& other) const;

 private:
  FieldKind kind_ = FieldKind::Rational;
  unsigned level_ = 1;
  QPoly phi_;
  std::vector<std::string> params_;
  unsigned prime_ = 0;
  std::vector<std::uint32_t> modulus_;
};

/// N-th cyclotomic polynomial by exact division of x^N - 1.
QPoly cyclotomic_polynomial(unsigned n);

class Coeff {
 public:
  using Value = std::variant<Rational, CycloValue, RatFuncValue, GaloisValue>;

  Coeff() = default;
  Coeff(CtxPtr ctx, Value v) : ctx_(std::move(ctx)), v_(std::move(v)) {}

  static Coeff zero(const CtxPtr& ctx);
  static Coeff one(const CtxPtr& ctx);
  static Coeff from_int(const CtxPtr& ctx, long n);
  static Coeff from_rational(const CtxPtr& ctx, const Rational& r);
  /// A fixed primitive m-th root of unity in ctx; InvalidField if none exists.
  static Coeff zeta(const CtxPtr& ctx, unsigned m);
  static Coeff param(const CtxPtr& ctx, std::string_view name);
  /// Class of x in GF(p)[x]/(modulus).
  static Coeff galois_generator(const CtxPtr& ctx);

  const CtxPtr& ctx() const { return ctx_; }
  const Value& value() const { return v_; }
  bool valid() const { return ctx_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  /// The value as a rational number when it lies in the prime subfield of a
  /// characteristic-zero context.
  std::optional<Rational> as_rational() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b);

  Coeff inverse() const;
  Coeff pow(long e) const;

  /// Parsable by parse_coeff in the same context.
  std::string to_string() const;

 private:
  CtxPtr ctx_;
  Value v_;
};

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv };

/// Single dispatch point for the field operations.
Coeff field_arith(FieldOp op, const Coeff& a, const Coeff& b);

/// Smallest m >= 1 with a^m = 1, or nullopt. Throws ZeroInput for a = 0.
std::optional<unsigned long> root_of_unity_order(const Coeff& a);

using Assignment = std::map<std::string, Coeff>;

/// Ring map from a rational-function context into target. Values in Q embed
/// directly; values already in target are returned unchanged.
Coeff specialize(const Coeff& a, const Assignment& assignment, const CtxPtr& target);

using IdentResolver = std::function<std::optional<Coeff>(const std::string&)>;

/// Evaluates an expression tree as a scalar. Identifiers are looked up in
/// resolver first, then as zN, context parameters and the GF generator "g".
Coeff eval_coeff(const Expr& e, const CtxPtr& ctx, const IdentResolver& resolver = {});
Coeff parse_coeff(std::string_view text, const CtxPtr& ctx, const IdentResolver& resolver = {});

/// Square root inside the context when one is found; nullopt otherwise.
std::optional<Coeff> try_sqrt(const Coeff& a);

/// Integer helpers.
unsigned long lcm_ul(unsigned long a, unsigned long b);
std::vector<unsigned long> divisors(unsigned long n);

}  // namespace orepi
