// Shared fixtures for the unit tests and the acceptance runner.
#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orepi/presentation.hpp"

namespace orepi::testing {

/// "p=z2,q=z3" style parameters, parsed into a spec over the named field.
inline FamilySpec spec(const std::string& family, const std::map<std::string, std::string>& params,
                       const std::string& field) {
  return family_spec_from_params(*family_from_name(family), params, FieldCtx::parse(field));
}

/// One instance per family for engine hygiene checks. Symbolic where the
/// arithmetic stays cheap, generic rationals otherwise.
inline std::vector<std::pair<std::string, FamilySpec>> hygiene_instances() {
  return {
      {"Bh", spec("Bh", {}, "ratfunc:h")},
      {"Hpq", spec("Hpq", {}, "ratfunc:p,q")},
      {"M2", spec("M2", {}, "ratfunc:alpha,beta")},
      {"UqB2", spec("UqB2", {}, "ratfunc:q")},
      {"WeylMalt", spec("WeylMalt", {{"n", "2"}, {"q1", "2"}, {"q2", "3"}, {"l12", "5"}}, "Q")},
      {"WeylAJ", spec("WeylAJ", {{"n", "2"}, {"q1", "2"}, {"q2", "3"}, {"l12", "5"}}, "Q")},
      {"BiQuad3", spec("BiQuad3", {{"q1", "2"}, {"q2", "3"}, {"q3", "5"}}, "Q")},
      {"ThreeCyclic", spec("ThreeCyclic", {}, "ratfunc:q,alpha,beta,gamma")},
      {"DownUp", spec("DownUp", {}, "ratfunc:alpha,beta,gamma")},
      {"Bqf", spec("Bqf", {{"f", "t + 2*t^2"}}, "ratfunc:q")},
      {"QuantumPlane", spec("QuantumPlane", {}, "ratfunc:q")},
  };
}

/// Small nonzero coefficient: an integer in [-3, 3], times a context
/// parameter half of the time when there are any.
inline Coeff random_coeff(const CtxPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  long k = 0;
  while (k == 0) k = d(rng);
  Coeff c = Coeff::from_int(ctx, k);
  const auto& ps = ctx->params();
  if (!ps.empty() && rng() % 2) c *= Coeff::param(ctx, ps[rng() % ps.size()]);
  return c;
}

/// Formal (unreduced) polynomial with up to `terms` words of length <= max_len.
inline NCPoly random_formal(const Presentation& P, std::mt19937& rng, unsigned max_len = 4, unsigned terms = 3) {
  NCPoly a = P.zero();
  const auto n = static_cast<unsigned>(P.num_generators());
  for (unsigned i = 0; i < terms; ++i) {
    Word w;
    const unsigned len = static_cast<unsigned>(rng() % (max_len + 1));
    for (unsigned j = 0; j < len; ++j) w.push_back(static_cast<char>(rng() % n));
    a.add_term(w, random_coeff(P.ctx(), rng));
  }
  return a;
}

}  // namespace orepi::testing
