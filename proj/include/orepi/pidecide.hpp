/**
 * @file pidecide.hpp
 * @brief Per-family PI deciders with checkable witnesses for each verdict.
 *
 * A PI verdict carries central elements and a truncated spanning report.
 * A NotPI verdict carries a two-generator witness: a subalgebra, or a
 * quotient by a normal element, on which b*a = param*a*b + shift*b holds
 * with either param not a root of unity, or param = 1 and shift != 0 in
 * characteristic zero (an enveloping algebra of a non-abelian Lie algebra).
 */
#pragma once

#include <optional>
#include <string>

#include "orepi/center.hpp"

namespace orepi {

inline constexpr unsigned kMaxDeciderSpanDegree = 8;

enum class Verdict { PI, NotPI, Unknown };
const char* verdict_name(Verdict v);

enum class WitnessKind { Subalgebra, Quotient };

struct QPlaneWitness {
  Family family{};
  WitnessKind kind = WitnessKind::Subalgebra;
  std::string a, b;  // elements in the family's generator syntax
  Coeff param;
  Coeff shift;  // zero for a quantum plane
  /// Quotient kind: the normal element N and the cofactor c with
  /// b*a - param*a*b - shift*b = N*c in the algebra.
  std::string normal, cofactor;
};

struct PiVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // short code
  std::string detail;
  std::optional<QPlaneWitness> witness;
  std::optional<CentralSet> centrals;
  std::optional<SpanningReport> spanning;
};

/// Errors: PreconditionViolation.
PiVerdict pi_decide(const FamilySpec& spec);

struct WitnessReport {
  bool ok = false;
  bool relation = false;     // the commutation relation (modulo N for quotients)
  bool normal = false;       // quotient kind: N is normal
  bool independent = false;  // subalgebra kind: a^i b^j, i + j <= 3, independent
  bool obstructs = false;    // param not a root of unity, or param = 1 with shift != 0 in char 0
  std::string detail;
};

/// Errors: FamilyMismatch.
WitnessReport verify_witness_report(const FamilySpec& spec, const QPlaneWitness& w);
inline bool verify_witness(const FamilySpec& spec, const QPlaneWitness& w) {
  return verify_witness_report(spec, w).ok;
}

}  // namespace orepi
