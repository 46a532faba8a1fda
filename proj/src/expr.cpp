#include "orepi/expr.hpp"

#include <cctype>

#include "orepi/errors.hpp"

namespace orepi {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::UnassignedParameter: return "UnassignedParameter";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidField: return "InvalidField";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::DownUpNotNoetherian: return "DownUpNotNoetherian";
    case Errc::NonAntisymmetricLambda: return "NonAntisymmetricLambda";
    case Errc::OrientationFailure: return "OrientationFailure";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::NonConfluentPresentation: return "NonConfluentPresentation";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::RootsRequired: return "RootsRequired";
    case Errc::BetaZero: return "BetaZero";
    case Errc::TrivialCenter: return "TrivialCenter";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::RangeError: return "RangeError";
    case Errc::FamilyMismatch: return "FamilyMismatch";
    case Errc::ZeroP: return "ZeroP";
    case Errc::QFactorialVanishes: return "QFactorialVanishes";
    case Errc::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::UnknownLemma: return "UnknownLemma";
  }
  return "Unknown";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr acc;
    if (eat('-')) {
      Expr neg;
      neg.kind = Expr::Kind::Neg;
      neg.args.push_back(product());
      acc = std::move(neg);
    } else {
      eat('+');
      acc = product();
    }
    for (;;) {
      if (eat('+')) {
        acc = binary(Expr::Kind::Add, std::move(acc), product());
      } else if (eat('-')) {
        acc = binary(Expr::Kind::Sub, std::move(acc), product());
      } else {
        return acc;
      }
    }
  }

  Expr product() {
    Expr acc = power();
    for (;;) {
      if (eat('*')) {
        acc = binary(Expr::Kind::Mul, std::move(acc), power());
      } else if (eat('/')) {
        acc = binary(Expr::Kind::Div, std::move(acc), power());
      } else {
        return acc;
      }
    }
  }

  Expr power() {
    Expr base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    if (!negative) eat('+');
    bool paren = eat('(');
    if (paren) negative = eat('-') != negative;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 9) fail("exponent too large");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.exponent = negative ? -v : v;
    e.args.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Expr e;
      e.kind = Expr::Kind::Number;
      e.number = mpz_class(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      Expr e;
      e.kind = Expr::Kind::Ident;
      e.ident = std::string(text_.substr(start, pos_ - start));
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace orepi
