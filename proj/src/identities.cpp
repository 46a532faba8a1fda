#include "orepi/identities.hpp"

#include <utility>

#include "orepi/rewrite.hpp"

namespace orepi {

Coeff q_number(unsigned k, const Coeff& q) {
  Coeff sum = Coeff::zero(q.ctx()), term = Coeff::one(q.ctx());
  for (unsigned i = 0; i < k; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

Coeff pq_number(unsigned n, const Coeff& p, const Coeff& q) {
  if (p.is_zero()) throw Error(Errc::ZeroP, "pq_number needs p != 0");
  // Horner in the recurrence [k+1] = q^k + p^-1 [k].
  const Coeff pinv = p.inverse();
  Coeff acc = Coeff::zero(q.ctx()), qk = Coeff::one(q.ctx());
  for (unsigned k = 0; k < n; ++k) {
    acc = qk + pinv * acc;
    qk *= q;
  }
  return acc;
}

Coeff q_factorial(unsigned k, const Coeff& q) {
  Coeff r = Coeff::one(q.ctx());
  for (unsigned i = 2; i <= k; ++i) r *= q_number(i, q);
  return r;
}

Coeff gauss_binomial(unsigned k, unsigned i, const Coeff& q) {
  if (i > k) throw Error(Errc::RangeError, "gauss_binomial needs i <= k");
  const Coeff den = q_factorial(i, q) * q_factorial(k - i, q);
  if (den.is_zero())
    throw Error(Errc::QFactorialVanishes, "[" + std::to_string(i) + "]! [" + std::to_string(k - i) + "]! = 0");
  return q_factorial(k, q) / den;
}

Coeff uqb2_B(unsigned k, const Coeff& q) {
  if (k == 0) return Coeff::zero(q.ctx());
  return q.pow(2 * (static_cast<long>(k) - 1)) * q_number(k, q.pow(-4));
}

Coeff uqb2_C(unsigned k, const Coeff& q) {
  Coeff c = Coeff::zero(q.ctx());
  const Coeff qm2 = q.pow(-2);
  for (unsigned j = 1; j < k; ++j) c += qm2 * uqb2_B(j, q);
  return c;
}

Coeff cyc3_c(unsigned a, const Coeff& q) { return q_number(a, q.pow(2)); }
Coeff cyc3_d(unsigned a, const Coeff& q) { return q_number(a, q.pow(-2)); }

namespace {

/// Raw word from (generator, exponent) pairs.
NCPoly mono(const Presentation& P, std::initializer_list<std::pair<std::string, unsigned>> parts,
            const Coeff& c) {
  std::vector<std::string> names;
  for (const auto& [g, e] : parts)
    for (unsigned i = 0; i < e; ++i) names.push_back(g);
  return P.monomial(P.word(names), c);
}

NCPoly mono(const Presentation& P, std::initializer_list<std::pair<std::string, unsigned>> parts) {
  return mono(P, parts, P.one());
}

NCPoly cat(const NCPoly& a, const NCPoly& b) { return a.concat(b); }
NCPoly cat(const NCPoly& a, const NCPoly& b, const NCPoly& c) { return a.concat(b).concat(c); }

std::string sub(const char* base, std::size_t i) { return base + std::to_string(i); }

template <class T>
const T& params_as(const FamilySpec& spec, LemmaId id) {
  const T* s = std::get_if<T>(&spec);
  if (!s)
    throw Error(Errc::FamilyMismatch, std::string(lemma_info(id).name) + " belongs to family " +
                                          family_name(lemma_info(id).family));
  return *s;
}

/// sum_j c_j g^j.
NCPoly poly_in(const Presentation& P, const std::vector<Coeff>& f, const std::string& g) {
  NCPoly out = P.zero();
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero()) out += mono(P, {{g, static_cast<unsigned>(j)}}, f[j]);
  return out;
}

using Instances = std::vector<IdentityInstance>;

Instances bh_commute(const Presentation& P, const BhParams& s, unsigned n) {
  const Coeff h2 = s.h.pow(2);
  const NCPoly u = mono(P, {{"x1", 1}, {"x2", 1}});
  const NCPoly sv = mono(P, {{"x1", 2}}) + mono(P, {{"x2", 2}});
  const NCPoly v = mono(P, {{"y1", 1}, {"y2", 1}});
  const NCPoly tv = mono(P, {{"y1", 2}}) + mono(P, {{"y2", 2}});
  const NCPoly un = power(P, u, n), sn = power(P, sv, n), vn = power(P, v, n), tn = power(P, tv, n);
  Instances out;
  for (const char* i : {"1", "2"}) {
    const NCPoly y = P.gen(std::string("y") + i), x = P.gen(std::string("x") + i);
    out.push_back({std::string("y") + i + " u^n", cat(y, un), (-h2).pow(n) * cat(un, y)});
    out.push_back({std::string("y") + i + " s^n", cat(y, sn), h2.pow(n) * cat(sn, y)});
    out.push_back({std::string("x") + i + " v^n", cat(x, vn), (-h2).pow(-static_cast<long>(n)) * cat(vn, x)});
    out.push_back({std::string("x") + i + " t^n", cat(x, tn), h2.pow(-static_cast<long>(n)) * cat(tn, x)});
  }
  return out;
}

Instances h_identities(LemmaId id, const Presentation& P, const HpqParams& s, unsigned n) {
  const Coeff pqn = pq_number(n, s.p, s.q), qn = s.q.pow(n);
  if (id == LemmaId::HYxn)
    return {{"y x^n", mono(P, {{"y", 1}, {"x", n}}),
             mono(P, {{"x", n}, {"y", 1}}, qn) + mono(P, {{"x", n - 1}, {"t", 1}}, pqn)}};
  if (id == LemmaId::HYnx)
    return {{"y^n x", mono(P, {{"y", n}, {"x", 1}}),
             mono(P, {{"x", 1}, {"y", n}}, qn) + mono(P, {{"t", 1}, {"y", n - 1}}, pqn)}};
  const NCPoly th = h_theta(P, s);
  const NCPoly x = P.gen("x"), y = P.gen("y"), t = P.gen("t");
  return {{"theta x", cat(th, x), s.q * cat(x, th)},
          {"theta y", cat(th, y), s.q.inverse() * cat(y, th)},
          {"theta t", cat(th, t), cat(t, th)}};
}

Instances m2_identities(LemmaId id, const Presentation& P, const M2Params& s, unsigned k) {
  const Coeff &a = s.alpha, &b = s.beta;
  const Coeff ab = a * b;
  const long m = k;
  if (id == LemmaId::M2K1)
    return {{"X22^k X11", mono(P, {{"X22", k}, {"X11", 1}}),
             mono(P, {{"X11", 1}, {"X22", k}}) +
                 mono(P, {{"X12", 1}, {"X21", 1}, {"X22", k - 1}}, a.inverse() * (ab.pow(m) - P.one()))}};
  if (id == LemmaId::M2K2)
    return {{"X22 X11^k", mono(P, {{"X22", 1}, {"X11", k}}),
             mono(P, {{"X11", k}, {"X22", 1}}) +
                 mono(P, {{"X12", 1}, {"X21", 1}, {"X11", k - 1}}, b * (P.one() - ab.pow(-m)))}};
  // Ten single-generator power commutations.
  struct Row {
    const char *left, *right;
    bool power_on_left;
    Coeff c;
  };
  const std::vector<Row> rows{
      {"X11", "X12", false, a.pow(-m)},      {"X22", "X12", false, b.pow(m)},
      {"X21", "X12", false, (b / a).pow(m)}, {"X11", "X21", false, b.pow(-m)},
      {"X22", "X21", false, a.pow(m)},       {"X12", "X21", false, (a / b).pow(m)},
      {"X11", "X12", true, a.pow(-m)},       {"X11", "X21", true, b.pow(-m)},
      {"X22", "X12", true, b.pow(m)},        {"X22", "X21", true, a.pow(m)},
  };
  Instances out;
  for (const auto& r : rows) {
    if (r.power_on_left)
      out.push_back({std::string(r.left) + "^m " + r.right, mono(P, {{r.left, k}, {r.right, 1}}),
                     mono(P, {{r.right, 1}, {r.left, k}}, r.c)});
    else
      out.push_back({std::string(r.left) + " " + r.right + "^m", mono(P, {{r.left, 1}, {r.right, k}}),
                     mono(P, {{r.right, k}, {r.left, 1}}, r.c)});
  }
  return out;
}

Instances uqb2_identities(LemmaId id, const Presentation& P, const UqB2Params& s, unsigned k) {
  const Coeff& q = s.q;
  const long kk = k;
  switch (id) {
    case LemmaId::UqB2I:
      return {{"e2 e3^k", mono(P, {{"e2", 1}, {"e3", k}}),
               mono(P, {{"e3", k}, {"e2", 1}}, q.pow(2 * kk)) +
                   mono(P, {{"z", 1}, {"e3", k - 1}}, q_number(k, q.pow(2)))}};
    case LemmaId::UqB2II:
      return {{"e2^k e3", mono(P, {{"e2", k}, {"e3", 1}}),
               mono(P, {{"e3", 1}, {"e2", k}}, q.pow(2 * kk)) +
                   mono(P, {{"z", 1}, {"e2", k - 1}}, q_number(k, q.pow(2)))}};
    case LemmaId::UqB2III:
      return {{"e2 e1^k", mono(P, {{"e2", 1}, {"e1", k}}),
               mono(P, {{"e1", k}, {"e2", 1}}, q.pow(-2 * kk)) -
                   mono(P, {{"e3", 1}, {"e1", k - 1}}, q.pow(-2) * q_number(k, q.pow(-4)))}};
    default:
      return {{"e2^k e1", mono(P, {{"e2", k}, {"e1", 1}}),
               mono(P, {{"e1", 1}, {"e2", k}}, q.pow(-2 * kk)) -
                   mono(P, {{"e3", 1}, {"e2", k - 1}}, q.pow(-2) * uqb2_B(k, q)) -
                   mono(P, {{"z", 1}, {"e2", k - 2}}, uqb2_C(k, q))}};
  }
}

Instances weyl_identities(LemmaId id, const Presentation& P, const WeylData& d, unsigned k) {
  const std::size_t n = d.q.size();
  Instances out;
  if (id == LemmaId::WeylZiNormal) {
    std::vector<NCPoly> z;
    for (std::size_t i = 0; i <= n; ++i) z.push_back(weyl_z(P, i));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        const NCPoly x = P.gen(sub("x", j)), y = P.gen(sub("y", j));
        const std::string tag = "z" + std::to_string(i) + " ";
        if (i < j) {
          out.push_back({tag + sub("x", j), cat(z[i], x), cat(x, z[i])});
          out.push_back({tag + sub("y", j), cat(z[i], y), cat(y, z[i])});
        } else {
          out.push_back({tag + sub("x", j), cat(z[i], x), d.q[j - 1].inverse() * cat(x, z[i])});
          out.push_back({tag + sub("y", j), cat(z[i], y), d.q[j - 1] * cat(y, z[i])});
        }
        out.push_back({tag + sub("z", j), cat(z[i], z[j]), cat(z[j], z[i])});
      }
    return out;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Coeff& qi = d.q[i - 1];
    const std::string x = sub("x", i), y = sub("y", i);
    const NCPoly zprev = weyl_z(P, i - 1);
    if (id == LemmaId::WeylXky)
      out.push_back({x + "^k " + y, mono(P, {{x, k}, {y, 1}}),
                     mono(P, {{y, 1}, {x, k}}, qi.pow(k)) + q_number(k, qi) * cat(zprev, mono(P, {{x, k - 1}}))});
    else
      out.push_back({x + " " + y + "^k", mono(P, {{x, 1}, {y, k}}),
                     mono(P, {{y, k}, {x, 1}}, qi.pow(k)) + q_number(k, qi) * cat(zprev, mono(P, {{y, k - 1}}))});
  }
  return out;
}

Instances cyc3_identities(LemmaId id, const Presentation& P, const ThreeCyclicParams& s, unsigned a) {
  const Coeff& q = s.q;
  const long aa = a;
  const Coeff ca = cyc3_c(a, q), da = cyc3_d(a, q), q2 = q.pow(2), qm2 = q.pow(-2);
  auto ident = [&](const char* g, const char* h, const Coeff& lead, const Coeff& tail) -> IdentityInstance {
    return {std::string(g) + "^a " + h, mono(P, {{g, a}, {h, 1}}),
            mono(P, {{h, 1}, {g, a}}, lead) + mono(P, {{g, a - 1}}, tail)};
  };
  switch (id) {
    case LemmaId::Cyc3I: return {ident("x", "y", q.pow(2 * aa), ca * s.alpha)};
    case LemmaId::Cyc3II: return {ident("y", "x", q.pow(-2 * aa), -qm2 * da * s.alpha)};
    case LemmaId::Cyc3III: return {ident("x", "z", q.pow(-2 * aa), da * s.beta)};
    case LemmaId::Cyc3IV: return {ident("z", "x", q.pow(2 * aa), -q2 * ca * s.beta)};
    case LemmaId::Cyc3V: return {ident("y", "z", q.pow(2 * aa), ca * s.gamma)};
    case LemmaId::Cyc3VI: return {ident("z", "y", q.pow(-2 * aa), -qm2 * da * s.gamma)};
    default: {
      const NCPoly e = cyc3_e(P, s), z = P.gen("z");
      return {{"e z", cat(e, z), qm2 * cat(z, e)}};
    }
  }
}

Instances bqf_identities(LemmaId id, const Presentation& P, const BqfParams& s, unsigned k) {
  const Coeff& q = s.q;
  const long kk = k;
  const int deg = poly_degree(s.f);
  const NCPoly w = P.gen("w");
  // sum_j [k]_{q^{sign(j+1)}} c_j g^j h^(k-1)
  auto delta = [&](const char* g, const char* h, int sign) {
    NCPoly out = P.zero();
    for (int j = 0; j <= deg; ++j)
      if (!s.f[j].is_zero())
        out += mono(P, {{g, static_cast<unsigned>(j)}, {h, k - 1}},
                    q_number(k, q.pow(sign * (j + 1))) * s.f[j]);
    return out;
  };
  switch (id) {
    case LemmaId::BqfDeltaUk: {
      const NCPoly uk = mono(P, {{"u", k}});
      return {{"delta(u^k)", cat(w, uk) - q.pow(kk) * cat(uk, w), delta("v", "u", 1)}};
    }
    case LemmaId::BqfDeltaVk: {
      const NCPoly vk = mono(P, {{"v", k}});
      return {{"delta(v^k)", cat(w, vk) - q.pow(-kk) * cat(vk, w), delta("u", "v", -1)}};
    }
    case LemmaId::BqfWuk:
      return {{"w u^k", mono(P, {{"w", 1}, {"u", k}}), mono(P, {{"u", k}, {"w", 1}}, q.pow(kk)) + delta("v", "u", 1)}};
    case LemmaId::BqfWvk:
      return {{"w v^k", mono(P, {{"w", 1}, {"v", k}}), mono(P, {{"v", k}, {"w", 1}}, q.pow(-kk)) + delta("u", "v", -1)}};
    default: {
      const NCPoly fv = poly_in(P, s.f, "v");
      NCPoly rhs = mono(P, {{"u", 1}, {"w", k}}, q.pow(kk));
      for (unsigned i = 0; i < k; ++i)
        rhs += q.pow(i) * cat(mono(P, {{"w", k - 1 - i}}), fv, mono(P, {{"w", i}}));
      return {{"w^k u", mono(P, {{"w", k}, {"u", 1}}), rhs}};
    }
  }
}

}  // namespace

NCPoly h_theta(const Presentation& P, const HpqParams& s) {
  NCPoly th = mono(P, {{"y", 1}, {"x", 1}}, P.one() - s.p * s.q) - P.gen("t");
  return normal_form(P, th);
}

NCPoly weyl_z(const Presentation& P, std::size_t i) {
  if (i == 0) return P.scalar(P.one());
  const NCPoly x = P.gen(sub("x", i)), y = P.gen(sub("y", i));
  return normal_form(P, cat(x, y) - cat(y, x));
}

NCPoly cyc3_e(const Presentation& P, const ThreeCyclicParams& s) {
  const Coeff q2 = s.q.pow(2);
  if ((q2 - P.one()).is_zero()) throw Error(Errc::HypothesisNotMet, "e needs q^2 != 1");
  return mono(P, {{"x", 1}, {"z", 1}}) - P.scalar(q2 * s.beta / (q2 - P.one()));
}

const std::vector<LemmaInfo>& all_lemmas() {
  static const std::vector<LemmaInfo> table{
      {LemmaId::BhCommute, "Bh.commute", Family::Bh, 1, 0},
      {LemmaId::HYxn, "H.yxn", Family::Hpq, 1, 0},
      {LemmaId::HYnx, "H.ynx", Family::Hpq, 1, 0},
      {LemmaId::HThetaRel, "H.theta_rel", Family::Hpq, 1, 1},
      {LemmaId::M2K1, "M2.k1", Family::M2, 1, 0},
      {LemmaId::M2K2, "M2.k2", Family::M2, 1, 0},
      {LemmaId::M2PowerTable, "M2.power_table", Family::M2, 1, 0},
      {LemmaId::UqB2I, "UqB2.i", Family::UqB2, 1, 0},
      {LemmaId::UqB2II, "UqB2.ii", Family::UqB2, 1, 0},
      {LemmaId::UqB2III, "UqB2.iii", Family::UqB2, 1, 0},
      {LemmaId::UqB2IV, "UqB2.iv", Family::UqB2, 2, 0},
      {LemmaId::WeylXky, "Weyl.xky", Family::WeylMalt, 1, 0},
      {LemmaId::WeylXyk, "Weyl.xyk", Family::WeylMalt, 1, 0},
      {LemmaId::WeylZiNormal, "Weyl.zi_normal", Family::WeylMalt, 1, 1},
      {LemmaId::Cyc3I, "Cyc3.i", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3II, "Cyc3.ii", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3III, "Cyc3.iii", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3IV, "Cyc3.iv", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3V, "Cyc3.v", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3VI, "Cyc3.vi", Family::ThreeCyclic, 1, 0},
      {LemmaId::Cyc3ERel, "Cyc3.e_rel", Family::ThreeCyclic, 1, 1},
      {LemmaId::BqfDeltaUk, "Bqf.delta_uk", Family::Bqf, 1, 0},
      {LemmaId::BqfDeltaVk, "Bqf.delta_vk", Family::Bqf, 1, 0},
      {LemmaId::BqfWuk, "Bqf.wuk", Family::Bqf, 1, 0},
      {LemmaId::BqfWvk, "Bqf.wvk", Family::Bqf, 1, 0},
      {LemmaId::BqfWku, "Bqf.wku", Family::Bqf, 1, 0},
  };
  return table;
}

const LemmaInfo& lemma_info(LemmaId id) {
  for (const auto& l : all_lemmas())
    if (l.id == id) return l;
  throw Error(Errc::UnknownLemma, "unregistered lemma id");
}

std::optional<LemmaId> lemma_from_name(std::string_view name) {
  for (const auto& l : all_lemmas())
    if (name == l.name) return l.id;
  return std::nullopt;
}

std::vector<IdentityInstance> oracle_rhs(LemmaId id, const FamilySpec& spec, const Presentation& P, unsigned n) {
  const LemmaInfo& info = lemma_info(id);
  if (family_of(spec) != info.family)
    throw Error(Errc::FamilyMismatch,
                std::string(info.name) + " belongs to family " + family_name(info.family) + ", got " +
                    family_name(family_of(spec)));
  if (n < info.min_n || (info.max_n && n > info.max_n))
    throw Error(Errc::RangeError, std::string(info.name) + " is not stated for n = " + std::to_string(n));
  switch (info.family) {
    case Family::Bh: return bh_commute(P, params_as<BhParams>(spec, id), n);
    case Family::Hpq: return h_identities(id, P, params_as<HpqParams>(spec, id), n);
    case Family::M2: return m2_identities(id, P, params_as<M2Params>(spec, id), n);
    case Family::UqB2: return uqb2_identities(id, P, params_as<UqB2Params>(spec, id), n);
    case Family::WeylMalt: return weyl_identities(id, P, params_as<WeylMaltParams>(spec, id).data, n);
    case Family::ThreeCyclic: return cyc3_identities(id, P, params_as<ThreeCyclicParams>(spec, id), n);
    case Family::Bqf: return bqf_identities(id, P, params_as<BqfParams>(spec, id), n);
    default: break;
  }
  throw Error(Errc::UnknownLemma, info.name);
}

std::vector<IdentityInstance> oracle_rhs(LemmaId id, const FamilySpec& spec, unsigned n) {
  return oracle_rhs(id, spec, build_family(spec), n);
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

IdentityReport check_paper_identity(LemmaId id, const FamilySpec& spec, unsigned n_max) {
  const LemmaInfo& info = lemma_info(id);
  const Presentation P = build_family(spec);
  IdentityReport rep{id, {}};
  const unsigned hi = info.max_n ? std::min(info.max_n, n_max) : n_max;
  for (unsigned n = info.min_n; n <= hi; ++n)
    for (auto& inst : oracle_rhs(id, spec, P, n)) {
      NCPoly res = normal_form(P, inst.lhs - inst.rhs);
      const bool ok = res.is_zero();
      rep.checks.push_back({n, std::move(inst.label), ok, std::move(res)});
    }
  return rep;
}

// ---------------------------------------------------------------------------

std::array<Coeff, 10> biquad3_conditions(const BiQuad3Params& s) {
  const CtxPtr& ctx = s.q1.ctx();
  auto val = [&](const Coeff& c) { return c.valid() ? c : Coeff::zero(ctx); };
  const Coeff one = Coeff::one(ctx);
  const Coeff &q1 = s.q1, &q2 = s.q2, &q3 = s.q3;
  const Coeff a = val(s.lin[0][0]), b = val(s.lin[0][1]), c = val(s.lin[0][2]);
  const Coeff al = val(s.lin[1][0]), be = val(s.lin[1][1]), ga = val(s.lin[1][2]);
  const Coeff la = val(s.lin[2][0]), mu = val(s.lin[2][1]), nu = val(s.lin[2][2]);
  const Coeff b1 = val(s.consts[0]), b2 = val(s.consts[1]), b3 = val(s.consts[2]);
  return {
      (one - q3) * al - (one - q2) * mu,
      (one - q3) * a - (one - q1) * nu,
      (one - q2) * b - (one - q1) * ga,
      (one - q1 * q2) * la,
      (q1 - q3) * be,
      (one - q2 * q3) * c,
      ((one - q3) * al - mu) * a + (b + q1 * ga) * la - nu * al + (q1 * q2 - one) * b3,
      (a - nu) * be + q1 * ga * mu - q3 * al * b + (q1 - q3) * b2,
      a * ga + (q1 - one) * nu * ga + b * nu - (mu + q3 * al) * c + (one - q2 * q3) * b1,
      -(mu + q3 * al) * b1 + (a - nu) * b2 + (b + q1 * ga) * b3,
  };
}

bool biquad3_consistent(const BiQuad3Params& s) {
  for (const auto& c : biquad3_conditions(s))
    if (!c.is_zero()) return false;
  return true;
}

BiQuad3Params biquad3_random_consistent(const CtxPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> qd(-4, 5), ld(-3, 3), pick(0, 2);
  auto num = [&](int v) { return Coeff::from_int(ctx, v); };
  auto rand_q = [&]() {
    int v;
    do v = qd(rng);
    while (v == 0 || v == 1);
    return num(v);
  };
  const Coeff one = Coeff::one(ctx), zero = Coeff::zero(ctx);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BiQuad3Params s;
    s.q1 = rand_q();
    s.q2 = rand_q();
    s.q3 = rand_q();
    if ((s.q1 * s.q2).is_one() || (s.q2 * s.q3).is_one() || s.q1 == s.q3) continue;
    Coeff a = num(ld(rng)), al = num(ld(rng)), b = num(ld(rng));
    switch (pick(rng)) {
      case 0: a = zero; break;
      case 1: al = zero; break;
      default: b = zero; break;
    }
    const Coeff mu = (one - s.q3) * al / (one - s.q2);
    const Coeff nu = (one - s.q3) * a / (one - s.q1);
    const Coeff ga = (one - s.q2) * b / (one - s.q1);
    s.lin = {{{a, b, zero}, {al, zero, ga}, {zero, mu, nu}}};
    const Coeff b3 = (((one - s.q3) * al - mu) * a - nu * al) / (one - s.q1 * s.q2);
    const Coeff b2 = (s.q3 * al * b - s.q1 * ga * mu) / (s.q1 - s.q3);
    const Coeff b1 = -(a * ga + (s.q1 - one) * nu * ga + b * nu) / (one - s.q2 * s.q3);
    s.consts = {b1, b2, b3};
    if (biquad3_consistent(s)) return s;
  }
  throw Error(Errc::HypothesisNotMet, "no consistent BiQuad3 instance found");
}

BiQuad3Params biquad3_random_violation(const CtxPtr& ctx, std::mt19937& rng, unsigned kind) {
  BiQuad3Params s = biquad3_random_consistent(ctx, rng);
  const Coeff one = Coeff::one(ctx);
  switch (kind % 6) {
    case 0: s.lin[2][0] += one; break;
    case 1: s.lin[1][1] += one; break;
    case 2: s.lin[0][2] += one; break;
    default: s.consts[kind % 6 - 3] += one; break;
  }
  return s;
}

}  // namespace orepi
