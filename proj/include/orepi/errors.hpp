/**
 * @file errors.hpp
 * @brief Error codes shared by every orepi module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace orepi {

enum class Errc {
  DivisionByZero,
  CtxMismatch,
  ZeroInput,
  DenominatorVanishes,
  UnassignedParameter,
  ParseError,
  InvalidField,
  ZeroParameter,
  DownUpNotNoetherian,
  NonAntisymmetricLambda,
  OrientationFailure,
  InvalidPresentation,
  NonConfluentPresentation,
  HypothesisNotMet,
  RootsRequired,
  BetaZero,
  TrivialCenter,
  PreconditionViolation,
  RangeError,
  FamilyMismatch,
  ZeroP,
  QFactorialVanishes,
  NotPrimitiveRoot,
  SizeMismatch,
  DegreeTooLarge,
  UnknownLemma,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace orepi
