#include "orepi/pidecide.hpp"

#include <algorithm>
#include <stdexcept>

#include "orepi/identities.hpp"
#include "orepi/linalg.hpp"
#include "orepi/rewrite.hpp"

namespace orepi {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PI: return "PI";
    case Verdict::NotPI: return "NotPI";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool is_root(const Coeff& c) { return !c.is_zero() && root_of_unity_order(c).has_value(); }

QPlaneWitness subalgebra(Family f, std::string a, std::string b, const Coeff& param) {
  QPlaneWitness w;
  w.family = f;
  w.a = std::move(a);
  w.b = std::move(b);
  w.param = param;
  w.shift = Coeff::zero(param.ctx());
  return w;
}

PiVerdict not_pi(std::string reason, std::string detail, QPlaneWitness w) {
  PiVerdict v;
  v.verdict = Verdict::NotPI;
  v.reason = std::move(reason);
  v.detail = std::move(detail);
  v.witness = std::move(w);
  return v;
}

PiVerdict unknown(std::string reason, std::string detail) {
  PiVerdict v;
  v.reason = std::move(reason);
  v.detail = std::move(detail);
  return v;
}

// PI verdict backed by central elements and a truncated spanning check.
PiVerdict pi_with(const Presentation& P, CentralSet cs, std::string reason, std::string detail) {
  PiVerdict v;
  v.verdict = Verdict::PI;
  v.reason = std::move(reason);
  v.detail = std::move(detail);
  if (cs.spanning_claimed) {
    const unsigned D = std::min(default_spanning_degree(cs.caps), kMaxDeciderSpanDegree);
    v.spanning = spanning_check(P, cs.elements, cs.caps, D);
  }
  v.centrals = std::move(cs);
  return v;
}

PiVerdict decide(const BhParams& s, const Presentation& P) {
  if (is_root(s.h)) return pi_with(P, central_candidates(s), "RootOfUnity", "h is a root of unity");
  return not_pi("QuantumPlaneSubalgebra", "y1 u = -h^2 u y1 with u = x1x2",
                subalgebra(Family::Bh, "x1*x2", "y1", -(s.h * s.h)));
}

PiVerdict decide(const HpqParams& s, const Presentation& P) {
  if ((s.p * s.q).is_one()) throw Error(Errc::PreconditionViolation, "pq = 1");
  if (is_root(s.p) && is_root(s.q)) return pi_with(P, central_candidates(s), "RootOfUnity", "p and q are roots of unity");
  QPlaneWitness w;
  w.family = Family::Hpq;
  w.kind = WitnessKind::Quotient;
  w.a = "x";
  w.b = "y";
  w.shift = Coeff::zero(s.p.ctx());
  if (!is_root(s.q)) {
    w.param = s.q;
    w.normal = "t";
    w.cofactor = "1";
    return not_pi("QuantumPlaneQuotient", "H/tH is the quantum plane with parameter q", w);
  }
  w.param = s.p.inverse();
  w.normal = P.to_string(h_theta(P, s));
  w.cofactor = P.to_string(P.scalar(-(s.p * s.q).inverse()));
  return not_pi("QuantumPlaneQuotient", "H/theta H is the quantum plane with parameter 1/p", w);
}

PiVerdict decide(const M2Params& s, const Presentation& P) {
  if (is_root(s.alpha) && is_root(s.beta))
    return pi_with(P, central_candidates(s), "RootOfUnity", "alpha and beta are roots of unity");
  if (!is_root(s.alpha))
    return not_pi("QuantumPlaneSubalgebra", "X12 X11 = alpha X11 X12", subalgebra(Family::M2, "X11", "X12", s.alpha));
  return not_pi("QuantumPlaneSubalgebra", "X21 X11 = beta X11 X21", subalgebra(Family::M2, "X11", "X21", s.beta));
}

PiVerdict decide(const UqB2Params& s, const Presentation& P) {
  auto ord = root_of_unity_order(s.q);
  if (!ord)
    return not_pi("QuantumPlaneSubalgebra", "e1 e3 = q^-2 e3 e1",
                  subalgebra(Family::UqB2, "e3", "e1", s.q.pow(-2)));
  if (*ord >= 5) return pi_with(P, central_candidates(s), "RootOfUnity", "q has order at least 5");
  if (*ord == 3) {
    // Below the order the central-power statement covers; the cubes are
    // checked directly before being used.
    CentralSet cs;
    cs.elements = {{"z", P.gen("z"), "always"}};
    for (const char* g : {"e1", "e2", "e3"})
      cs.elements.push_back({std::string(g) + "^3", P.monomial(P.word({g, g, g})), "ord q = 3"});
    for (const auto& e : cs.elements)
      if (!is_central(P, e.element, false).central)
        return unknown("SmallOrder", e.name + " is not central at ord q = 3");
    cs.caps = implied_caps(P, cs.elements);
    return pi_with(P, std::move(cs), "RootOfUnity", "ord q = 3, cubes verified central");
  }
  return unknown("SmallOrder", "ord q = " + std::to_string(*ord) + ": no central powers of e1, e2 available");
}

PiVerdict decide_weyl(const WeylData& d, Family fam, const FamilySpec& spec, const Presentation& P) {
  const std::size_t n = d.q.size();
  for (std::size_t i = 0; i < n; ++i)
    if (d.q[i].is_one() && d.q[i].ctx()->characteristic() == 0)
      return unknown("ClassicalWeylFactor", "q" + std::to_string(i + 1) + " = 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_root(d.lambda[i][j])) {
        const std::string yi = "y" + std::to_string(i + 1), yj = "y" + std::to_string(j + 1);
        return not_pi("QuantumPlaneSubalgebra", yj + " " + yi + " = lambda^-1 " + yi + " " + yj,
                      subalgebra(fam, yi, yj, d.lambda[i][j].inverse()));
      }
  for (std::size_t i = 0; i < n; ++i)
    if (!is_root(d.q[i])) {
      const std::string xi = "x" + std::to_string(i + 1), yi = "y" + std::to_string(i + 1);
      return not_pi("QuantumPlaneSubalgebra", "z x = q^-1 x z with z = x y - y x",
                    subalgebra(fam, xi, xi + "*" + yi + " - " + yi + "*" + xi, d.q[i].inverse()));
    }
  return pi_with(P, central_candidates(spec), "RootOfUnity", "every q_i and lambda_ij is a root of unity");
}

PiVerdict decide(const ThreeCyclicParams& s, const Presentation& P) {
  const Coeff q2 = s.q.pow(2);
  if (q2.is_one()) throw Error(Errc::PreconditionViolation, "q^2 = 1");
  if (is_root(q2)) return pi_with(P, central_candidates(s), "RootOfUnity", "q^2 is a root of unity");
  return not_pi("QuantumPlaneSubalgebra", "e z = q^-2 z e with e = xz - q^2 beta/(q^2 - 1)",
                subalgebra(Family::ThreeCyclic, "z", P.to_string(cyc3_e(P, s)), q2.inverse()));
}

CPoly lin_form(const Coeff& cx, const Coeff& cy, const Coeff& c1) {
  CPoly f;
  if (!cx.is_zero()) f[{1, 0}] = cx;
  if (!cy.is_zero()) f[{0, 1}] = cy;
  if (!c1.is_zero()) f[{0, 0}] = c1;
  return f;
}

PiVerdict decide(const DownUpParams& s, const Presentation& P) {
  if (s.beta.is_zero()) throw Error(Errc::PreconditionViolation, "beta = 0");
  std::pair<Coeff, Coeff> roots;
  try {
    roots = downup_roots(s.alpha, s.beta);
  } catch (const Error& e) {
    if (e.code() == Errc::RootsRequired) return unknown("RootsRequired", e.detail());
    throw;
  }
  const auto [lambda, mu] = roots;
  const CtxPtr& ctx = s.alpha.ctx();
  const Coeff one = Coeff::one(ctx), zero = Coeff::zero(ctx);
  const bool cond5 = !(lambda == mu) && is_root(lambda) && is_root(mu) &&
                     (s.gamma.is_zero() || (!lambda.is_one() && !mu.is_one()));
  const OrderResult order = gwa_auto_order(s.alpha, s.beta, s.gamma, roots);
  if (cond5 != order.finite) throw std::logic_error("down-up condition (5) and the order of phi disagree");
  const std::string detail = "roots " + lambda.to_string() + ", " + mu.to_string();
  if (cond5) return pi_with(P, downup_center_generators(s, roots), "DownUpCondition5", detail + " distinct roots of unity");

  auto embed = [&](const CPoly& f) { return P.to_string(downup_embed(P, f)); };
  // d r = phi(r) d for r in k[x, y]; an eigenvector omega of phi gives d omega = r omega d.
  for (const Coeff& r : {lambda, mu})
    if (!r.is_one() && !is_root(r)) {
      CPoly w = lin_form(s.beta * (r - one), r * (r - one), s.gamma * r);
      return not_pi("QuantumPlaneSubalgebra", detail + "; d omega = r omega d", subalgebra(Family::DownUp, embed(w), "d", r));
    }
  if (ctx->characteristic() != 0) return unknown("DownUpCondition5", detail + "; no witness in positive characteristic");
  // Remaining failures of condition (5): lambda = 1 with gamma != 0, or a repeated root of unity.
  QPlaneWitness w = subalgebra(Family::DownUp, "", "d", one);
  if (lambda.is_one() && !s.gamma.is_zero()) {
    // phi(beta x + y) = beta x + y + gamma.
    w.a = embed(lin_form(s.beta, one, zero));
    w.shift = s.gamma;
    return not_pi("LieSubalgebra", detail + "; d w1 = w1 d + gamma d", w);
  }
  // lambda = mu = r of order k: phi(nu) = r nu + omega, and a = omega^(k-1) nu
  // satisfies phi(a) = a + r^(k-1) omega^k with omega^k central.
  const Coeff r = lambda;
  const unsigned long k = *root_of_unity_order(r);
  CPoly omega = r.is_one() ? lin_form(-one, one, zero) : lin_form(s.beta * (r - one), r * (r - one), s.gamma * r);
  CPoly nu = r.is_one() ? lin_form(one, zero, zero) : lin_form(r * (r - one), zero, -(s.gamma * r) / (r - one));
  const NCPoly om = downup_embed(P, omega);
  const NCPoly a = multiply(P, power(P, om, static_cast<unsigned>(k - 1)), downup_embed(P, nu));
  const NCPoly N = power(P, om, static_cast<unsigned>(k)) - P.scalar(one);
  w.kind = WitnessKind::Quotient;
  w.a = P.to_string(a);
  w.shift = r.pow(static_cast<long>(k - 1));
  w.normal = P.to_string(N);
  w.cofactor = P.to_string(P.gen("d") * r.pow(static_cast<long>(k - 1)));
  return not_pi("LieQuotient", detail + "; repeated root, quotient by omega^k - 1", w);
}

PiVerdict decide(const BqfParams& s, const Presentation& P) {
  const bool char_p = s.q.ctx()->characteristic() != 0;
  auto ord = root_of_unity_order(s.q);
  if (!ord) {
    if (char_p) throw Error(Errc::PreconditionViolation, "q is not a root of unity in positive characteristic");
    return not_pi("QuantumPlaneSubalgebra", "u v = q v u", subalgebra(Family::Bqf, "v", "u", s.q));
  }
  const unsigned long n = *ord;
  if (n < 2) return unknown("QEqualsOne", "q = 1 is outside every criterion");
  std::vector<std::size_t> supp;
  for (std::size_t j = 0; j < s.f.size(); ++j)
    if (s.f[j].valid() && !s.f[j].is_zero()) supp.push_back(j);
  const bool route_a = std::none_of(supp.begin(), supp.end(), [&](std::size_t j) { return (j + 1) % n == 0; });
  if (!route_a) {
    if (char_p) throw Error(Errc::PreconditionViolation, "positive characteristic needs n not dividing j+1 on supp f");
    return unknown("BqfGap", "q has order " + std::to_string(n) + " and n | (j+1) for some j in supp f");
  }
  CentralSet cs = central_candidates(s);
  if (cs.spanning_claimed) return pi_with(P, std::move(cs), "BqfNDividesJ", "n | j for every j in supp f");
  // Only u^n, v^n are known; look for a central element led by w^n.
  const Word wn = P.word(std::vector<std::string>(n, "w"));
  for (auto& c : central_elements_upto(P, P.order()->weight_of(wn)))
    if (c.leading_word() == wn) {
      cs.elements.push_back({"c_w", c, "found by kernel search"});
      cs.spanning_claimed = true;
      cs.caps = implied_caps(P, cs.elements);
      cs.note = "central element with leading word w^n found by search";
      break;
    }
  return pi_with(P, std::move(cs), "BqfNNotDividingJPlus1", "n does not divide j+1 for any j in supp f");
}

PiVerdict decide(const QuantumPlaneParams& s, const Presentation& P) {
  if (is_root(s.q)) return pi_with(P, central_candidates(s), "RootOfUnity", "q is a root of unity");
  return not_pi("QuantumPlaneSubalgebra", "y x = q x y", subalgebra(Family::QuantumPlane, "x", "y", s.q));
}

}  // namespace

PiVerdict pi_decide(const FamilySpec& spec) {
  if (std::holds_alternative<DownUpParams>(spec) && std::get<DownUpParams>(spec).beta.is_zero())
    throw Error(Errc::PreconditionViolation, "beta = 0");
  if (std::holds_alternative<BiQuad3Params>(spec))
    return unknown("NoCriterion", "no PI criterion for general biquadratic algebras");
  Presentation P = build_family(spec);
  return std::visit(
      [&](const auto& s) -> PiVerdict {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, WeylMaltParams>)
          return decide_weyl(s.data, Family::WeylMalt, spec, P);
        else if constexpr (std::is_same_v<T, WeylAJParams>)
          return decide_weyl(s.data, Family::WeylAJ, spec, P);
        else if constexpr (std::is_same_v<T, BiQuad3Params>)
          return unknown("NoCriterion", "");
        else
          return decide(s, P);
      },
      spec);
}

WitnessReport verify_witness_report(const FamilySpec& spec, const QPlaneWitness& w) {
  if (family_of(spec) != w.family)
    throw Error(Errc::FamilyMismatch, std::string("witness for ") + family_name(w.family) + ", spec is " +
                                          family_name(family_of(spec)));
  const Presentation P = build_family(spec);
  WitnessReport rep;
  const NCPoly a = parse_element(w.a, P), b = parse_element(w.b, P);
  const Coeff shift = w.shift.valid() ? w.shift : Coeff::zero(P.ctx());
  const NCPoly rel = multiply(P, b, a) - multiply(P, a, b) * w.param - b * shift;
  if (w.kind == WitnessKind::Subalgebra) {
    rep.relation = normal_form(P, rel).is_zero();
    // a^i b^j for i + j <= 3 should stay independent.
    std::map<Word, std::size_t> index;
    EchelonBasis eb;
    std::size_t count = 0;
    for (unsigned i = 0; i <= 3; ++i)
      for (unsigned j = 0; i + j <= 3; ++j, ++count) {
        NCPoly m = multiply(P, power(P, a, i), power(P, b, j));
        SparseVec v;
        for (const auto& [wd, c] : m.terms()) v.emplace(index.emplace(wd, index.size()).first->second, c);
        eb.insert(std::move(v));
      }
    rep.independent = eb.rank() == count;
    rep.normal = true;
  } else {
    const NCPoly N = parse_element(w.normal, P), c = parse_element(w.cofactor, P);
    rep.relation = normal_form(P, rel - multiply(P, N, c)).is_zero();
    rep.normal = !N.is_zero();
    for (Letter l : P.display_order()) {
      if (!rep.normal) break;
      const NCPoly g = P.monomial(Word(1, static_cast<char>(l)));
      const NCPoly ng = multiply(P, N, g), gn = multiply(P, g, N);
      if (ng.is_zero() || gn.is_zero()) {
        rep.normal = ng.is_zero() && gn.is_zero();
        continue;
      }
      if (ng.leading_word() != gn.leading_word()) {
        rep.normal = false;
        break;
      }
      const Coeff k = ng.coeff(ng.leading_word()) / gn.coeff(gn.leading_word());
      rep.normal = normal_form(P, ng - gn * k).is_zero();
    }
    // Independence in the quotient is not engine-checked.
    rep.independent = true;
  }
  const bool char0 = P.ctx()->characteristic() == 0;
  rep.obstructs = (!w.param.is_zero() && !is_root(w.param) && shift.is_zero()) ||
                  (w.param.is_one() && !shift.is_zero() && char0);
  rep.ok = rep.relation && rep.normal && rep.independent && rep.obstructs;
  if (!rep.relation) rep.detail = "relation fails";
  else if (!rep.normal) rep.detail = "factored element is not normal";
  else if (!rep.independent) rep.detail = "a^i b^j are dependent";
  else if (!rep.obstructs) rep.detail = "parameter does not obstruct PI";
  return rep;
}

}  // namespace orepi
