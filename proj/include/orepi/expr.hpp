/**
 * @file expr.hpp
 * @brief Parser for the coefficient / element expression grammar.
 *
 * Grammar (whitespace ignored):
 *   sum     := ['-'] product { ('+' | '-') product }
 *   product := power { ('*' | '/') power }
 *   power   := atom [ '^' ['-'] integer ]
 *   atom    := integer | identifier | '(' sum ')'
 *
 * Identifiers are resolved later by the evaluator, so the same tree serves
 * scalar coefficients and noncommutative elements.
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orepi {

struct Expr {
  enum class Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  mpz_class number;
  std::string ident;
  long exponent = 0;
  std::vector<Expr> args;
};

/// Throws Error(ParseError) on malformed input.
Expr parse_expr(std::string_view text);

}  // namespace orepi
