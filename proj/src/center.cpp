#include "orepi/center.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "orepi/rewrite.hpp"

namespace orepi {

namespace {

void require_confluent(const Presentation& P) {
  auto rep = overlap_check(P);
  if (!rep.confluent) {
    const auto* f = rep.first_failure();
    throw Error(Errc::NonConfluentPresentation, "ambiguity at " + P.word_string(f->word));
  }
}

unsigned long order_or_throw(const Coeff& c, const std::string& what) {
  if (c.is_zero()) throw Error(Errc::HypothesisNotMet, what + " is zero");
  auto o = root_of_unity_order(c);
  if (!o) throw Error(Errc::HypothesisNotMet, what + " is not a root of unity");
  return *o;
}

NCPoly gen_power(const Presentation& P, const std::string& g, unsigned k) {
  return P.monomial(P.word(std::vector<std::string>(k, g)));
}

CentralElement gen_power_elem(const Presentation& P, const std::string& g, unsigned long k,
                              const std::string& cond) {
  return {g + "^" + std::to_string(k), gen_power(P, g, static_cast<unsigned>(k)), cond};
}

// f evaluated at a generator, f given by coefficients.
NCPoly poly_in(const Presentation& P, const std::vector<Coeff>& f, const std::string& g) {
  NCPoly out = P.zero();
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j].valid() && !f[j].is_zero()) out += gen_power(P, g, static_cast<unsigned>(j)) * f[j];
  return out;
}

std::vector<std::size_t> support(const std::vector<Coeff>& f) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j].valid() && !f[j].is_zero()) s.push_back(j);
  return s;
}

CentralSet finish(const Presentation& P, CentralSet cs) {
  cs.caps = implied_caps(P, cs.elements);
  return cs;
}

CentralSet candidates(const BhParams& s, const Presentation& P) {
  const unsigned long l = order_or_throw(s.h, "h");
  const std::string cond = "ord h = " + std::to_string(l);
  NCPoly u = P.monomial(P.word({"x1", "x2"}));
  NCPoly v = P.monomial(P.word({"y1", "y2"}));
  NCPoly sx = normal_form(P, gen_power(P, "x1", 2) + gen_power(P, "x2", 2));
  NCPoly ty = normal_form(P, gen_power(P, "y1", 2) + gen_power(P, "y2", 2));
  const unsigned k = static_cast<unsigned>(l);
  CentralSet cs;
  cs.elements = {{"u^" + std::to_string(2 * l), power(P, u, 2 * k), cond},
                 {"s^" + std::to_string(l), power(P, sx, k), cond},
                 {"v^" + std::to_string(2 * l), power(P, v, 2 * k), cond},
                 {"t^" + std::to_string(l), power(P, ty, k), cond}};
  cs.note = "u = x1x2, s = x1^2 + x2^2, v = y1y2, t = y1^2 + y2^2";
  return finish(P, std::move(cs));
}

CentralSet candidates(const HpqParams& s, const Presentation& P) {
  if ((s.p * s.q).is_one()) throw Error(Errc::HypothesisNotMet, "pq = 1");
  const unsigned long n = order_or_throw(s.p, "p"), m = order_or_throw(s.q, "q");
  const std::string cond = "ord p = " + std::to_string(n) + ", ord q = " + std::to_string(m);
  CentralSet cs;
  cs.elements = {gen_power_elem(P, "x", m * n, cond), gen_power_elem(P, "y", m * n, cond),
                 gen_power_elem(P, "t", n, cond)};
  return finish(P, std::move(cs));
}

CentralSet candidates(const M2Params& s, const Presentation& P) {
  const unsigned long l = lcm_ul(order_or_throw(s.alpha, "alpha"), order_or_throw(s.beta, "beta"));
  const std::string cond = "alpha^l = beta^l = 1, l = " + std::to_string(l);
  CentralSet cs;
  for (const char* g : {"X11", "X12", "X21", "X22"}) cs.elements.push_back(gen_power_elem(P, g, l, cond));
  return finish(P, std::move(cs));
}

CentralSet candidates(const UqB2Params& s, const Presentation& P) {
  const unsigned long l = order_or_throw(s.q, "q");
  if (l < 5) throw Error(Errc::HypothesisNotMet, "ord q = " + std::to_string(l) + " < 5");
  const std::string cond = "ord q = " + std::to_string(l);
  CentralSet cs;
  cs.elements = {{"z", P.gen("z"), "always"}};
  for (const char* g : {"e1", "e2", "e3"}) cs.elements.push_back(gen_power_elem(P, g, l, cond));
  return finish(P, std::move(cs));
}

CentralSet candidates_weyl(const WeylData& d, const Presentation& P) {
  const std::size_t n = d.q.size();
  unsigned long l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.q[i].is_one() && d.q[i].ctx()->characteristic() == 0)
      throw Error(Errc::HypothesisNotMet, "q" + std::to_string(i + 1) + " = 1 leaves a classical Weyl factor");
    l = lcm_ul(l, order_or_throw(d.q[i], "q" + std::to_string(i + 1)));
    for (std::size_t j = i + 1; j < n; ++j)
      l = lcm_ul(l, order_or_throw(d.lambda[i][j], "lambda" + std::to_string(i + 1) + std::to_string(j + 1)));
  }
  const std::string cond = "l = lcm of the parameter orders = " + std::to_string(l);
  CentralSet cs;
  for (std::size_t i = 0; i < n; ++i) {
    cs.elements.push_back(gen_power_elem(P, "x" + std::to_string(i + 1), l, cond));
    cs.elements.push_back(gen_power_elem(P, "y" + std::to_string(i + 1), l, cond));
  }
  return finish(P, std::move(cs));
}

CentralSet candidates(const WeylMaltParams& s, const Presentation& P) { return candidates_weyl(s.data, P); }
CentralSet candidates(const WeylAJParams& s, const Presentation& P) { return candidates_weyl(s.data, P); }

CentralSet candidates(const BiQuad3Params&, const Presentation&) {
  throw Error(Errc::HypothesisNotMet, "no central-element construction for general biquadratic algebras");
}

CentralSet candidates(const ThreeCyclicParams& s, const Presentation& P) {
  const Coeff q2 = s.q.pow(2);
  if (q2.is_one()) throw Error(Errc::HypothesisNotMet, "q^2 = 1");
  const unsigned long l = order_or_throw(q2, "q^2");
  const std::string cond = "ord q^2 = " + std::to_string(l);
  CentralSet cs;
  for (const char* g : {"x", "y", "z"}) cs.elements.push_back(gen_power_elem(P, g, l, cond));
  return finish(P, std::move(cs));
}

CentralSet candidates(const DownUpParams& s, const Presentation&) { return downup_center_generators(s); }

CentralSet candidates(const BqfParams& s, const Presentation& P) {
  const unsigned long n = order_or_throw(s.q, "q");
  if (n < 2) throw Error(Errc::HypothesisNotMet, "q = 1");
  const auto supp = support(s.f);
  auto blocker = std::find_if(supp.begin(), supp.end(), [&](std::size_t j) { return (j + 1) % n == 0; });
  const bool char_p = s.q.ctx()->characteristic() != 0;
  if (blocker != supp.end()) {
    if (char_p)
      throw Error(Errc::HypothesisNotMet, "VacuousCharPCase: n | (j+1) for j = " + std::to_string(*blocker) +
                                              ", and p | n is impossible since ord q is prime to p");
    throw Error(Errc::HypothesisNotMet, "n | (j+1) for j = " + std::to_string(*blocker) + " in supp f");
  }
  const std::string cond = "ord q = " + std::to_string(n) + ", n does not divide j+1 on supp f";
  CentralSet cs;
  cs.elements = {gen_power_elem(P, "u", n, cond), gen_power_elem(P, "v", n, cond)};
  const bool divides = !supp.empty() && std::all_of(supp.begin(), supp.end(), [&](std::size_t j) { return j % n == 0; });
  if (divides && !char_p) {
    const std::string c2 = "ord q = " + std::to_string(n) + ", n | j on supp f";
    cs.elements.push_back({"f(u)", poly_in(P, s.f, "u"), c2});
    cs.elements.push_back({"f(v)", poly_in(P, s.f, "v"), c2});
    cs.elements.push_back(gen_power_elem(P, "w", n, c2));
  } else {
    cs.spanning_claimed = false;
    cs.note = "u^n, v^n alone leave w unbounded";
  }
  return finish(P, std::move(cs));
}

CentralSet candidates(const QuantumPlaneParams& s, const Presentation& P) {
  const unsigned long n = order_or_throw(s.q, "q");
  const std::string cond = "ord q = " + std::to_string(n);
  CentralSet cs;
  cs.elements = {gen_power_elem(P, "x", n, cond), gen_power_elem(P, "y", n, cond)};
  return finish(P, std::move(cs));
}

// Commutative polynomial helpers.
void cadd(CPoly& f, const std::pair<unsigned, unsigned>& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, ins] = f.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) cadd(r, {ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return r;
}

CPoly affine_image(const Coeff& a, const Coeff& b, const Coeff& c) {
  CPoly f;
  cadd(f, {1, 0}, a);
  cadd(f, {0, 1}, b);
  cadd(f, {0, 0}, c);
  return f;
}

// 1 or a root of unity of the field solving t^2 - alpha t - beta; covers
// discriminants that try_sqrt cannot see.
std::optional<Coeff> known_root(const Coeff& alpha, const Coeff& beta) {
  const CtxPtr& ctx = alpha.ctx();
  auto solves = [&](const Coeff& r) { return (r * r - alpha * r - beta).is_zero(); };
  if (solves(Coeff::one(ctx))) return Coeff::one(ctx);
  if (ctx->kind() != FieldKind::Cyclotomic) return std::nullopt;
  const unsigned l = static_cast<unsigned>(lcm_ul(2, ctx->level()));
  const Coeff z = Coeff::zeta(ctx, l);
  Coeff r = z;
  for (unsigned j = 1; j < l; ++j, r *= z)
    if (solves(r)) return r;
  return std::nullopt;
}

}  // namespace

CentralityResult is_central(const Presentation& P, const NCPoly& a, bool check_confluence) {
  if (check_confluence) require_confluent(P);
  CentralityResult r;
  for (Letter l : P.display_order()) {
    NCPoly g = P.monomial(Word(1, static_cast<char>(l)));
    NCPoly c = normal_form(P, a.concat(g) - g.concat(a));
    if (!c.is_zero()) {
      r.failing_generator = P.name(l);
      r.residual = std::move(c);
      return r;
    }
  }
  r.central = true;
  return r;
}

std::vector<NCPoly> central_elements_upto(const Presentation& P, unsigned D) {
  const auto words = irreducible_words(P, D);
  const auto out_words = irreducible_words(P, D + *std::max_element(P.order()->weight.begin(), P.order()->weight.end()));
  std::map<Word, std::size_t, WordLess> out_index(WordLess{P.order().get()});
  for (std::size_t i = 0; i < out_words.size(); ++i) out_index.emplace(out_words[i], i);
  const std::size_t ng = P.num_generators();
  Matrix m(P.ctx(), out_words.size() * ng, words.size());
  for (std::size_t c = 0; c < words.size(); ++c) {
    NCPoly w = P.monomial(words[c]);
    for (std::size_t g = 0; g < ng; ++g) {
      NCPoly gl = P.monomial(Word(1, static_cast<char>(g)));
      NCPoly com = normal_form(P, w.concat(gl) - gl.concat(w));
      for (const auto& [tw, tc] : com.terms()) m(g * out_words.size() + out_index.at(tw), c) = tc;
    }
  }
  // Echelonise the kernel so that distinct leading words come out.
  EchelonBasis eb;
  const std::size_t N = words.size();
  for (const auto& v : kernel(m)) {
    SparseVec sv;
    for (std::size_t i = 0; i < N; ++i)
      if (!v[i].is_zero()) sv.emplace(N - 1 - i, v[i]);
    eb.insert(std::move(sv));
  }
  std::vector<NCPoly> out;
  for (const auto& [pivot, row] : eb.rows()) {
    NCPoly a = P.zero();
    for (const auto& [k, c] : row) a.add_term(words[N - 1 - k], c);
    out.push_back(std::move(a));
  }
  return out;
}

CentralSet central_candidates(const FamilySpec& spec) {
  Presentation P = build_family(spec);
  return std::visit([&](const auto& s) { return candidates(s, P); }, spec);
}

std::map<std::string, unsigned> implied_caps(const Presentation& P, const std::vector<CentralElement>& c) {
  std::map<std::string, unsigned> caps;
  for (const auto& e : c) {
    if (e.element.is_zero()) continue;
    const Word& w = e.element.leading_word();
    if (w.empty() || w.find_first_not_of(w[0]) != Word::npos) continue;
    const std::string& g = P.name(letter_at(w, 0));
    auto it = caps.find(g);
    const unsigned k = static_cast<unsigned>(w.size());
    if (it == caps.end() || it->second > k) caps[g] = k;
  }
  return caps;
}

// ---------------------------------------------------------------------------

AffineAuto AffineAuto::downup(const Coeff& alpha, const Coeff& beta, const Coeff& gamma) {
  const CtxPtr& ctx = alpha.ctx();
  AffineAuto a;
  a.lin = {{{Coeff::zero(ctx), Coeff::one(ctx)}, {beta, alpha}}};
  a.shift = {Coeff::zero(ctx), gamma};
  return a;
}

Matrix AffineAuto::matrix() const {
  const CtxPtr& ctx = lin[0][0].ctx();
  Matrix m(ctx, 3, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    m(i, 0) = lin[i][0];
    m(i, 1) = lin[i][1];
    m(i, 2) = shift[i];
  }
  m(2, 2) = Coeff::one(ctx);
  return m;
}

CPoly AffineAuto::apply(const CPoly& f) const {
  const CtxPtr& ctx = lin[0][0].ctx();
  const CPoly px = affine_image(lin[0][0], lin[0][1], shift[0]);
  const CPoly py = affine_image(lin[1][0], lin[1][1], shift[1]);
  CPoly one;
  one[{0, 0}] = Coeff::one(ctx);
  std::vector<CPoly> xp{one}, yp{one};
  CPoly r;
  for (const auto& [m, c] : f) {
    while (xp.size() <= m.first) xp.push_back(cmul(xp.back(), px));
    while (yp.size() <= m.second) yp.push_back(cmul(yp.back(), py));
    for (const auto& [mm, cc] : cmul(xp[m.first], yp[m.second])) cadd(r, mm, c * cc);
  }
  return r;
}

const char* order_case_name(OrderCase c) {
  switch (c) {
    case OrderCase::DistinctRootsNotUnity: return "DistinctRootsNotUnity";
    case OrderCase::Lambda1GammaNonzero: return "Lambda1GammaNonzero";
    case OrderCase::RepeatedRootJordanBlock: return "RepeatedRootJordanBlock";
    case OrderCase::RepeatedRoot1: return "RepeatedRoot1";
  }
  return "?";
}

std::pair<Coeff, Coeff> downup_roots(const Coeff& alpha, const Coeff& beta,
                                     const std::optional<std::pair<Coeff, Coeff>>& roots) {
  if (beta.is_zero()) throw Error(Errc::BetaZero, "");
  Coeff r1, r2;
  if (roots) {
    r1 = roots->first;
    r2 = roots->second;
    if (!(r1 + r2 == alpha) || !(r1 * r2 == -beta))
      throw Error(Errc::RootsRequired, "supplied roots do not solve t^2 - alpha t - beta");
  } else if (auto r = known_root(alpha, beta)) {
    r1 = *r;
    r2 = alpha - *r;
  } else {
    const CtxPtr& ctx = alpha.ctx();
    if (ctx->characteristic() == 2) throw Error(Errc::RootsRequired, "characteristic 2");
    auto s = try_sqrt(alpha * alpha + Coeff::from_int(ctx, 4) * beta);
    if (!s) throw Error(Errc::RootsRequired, "discriminant has no square root in the field");
    const Coeff half = Coeff::from_int(ctx, 2).inverse();
    r1 = (alpha + *s) * half;
    r2 = (alpha - *s) * half;
  }
  if (r2.is_one() && !r1.is_one()) std::swap(r1, r2);
  return {r1, r2};
}

OrderResult gwa_auto_order(const Coeff& alpha, const Coeff& beta, const Coeff& gamma,
                           const std::optional<std::pair<Coeff, Coeff>>& roots) {
  auto [lambda, mu] = downup_roots(alpha, beta, roots);
  OrderResult r;
  r.lambda = lambda;
  r.mu = mu;
  if (lambda == mu) {
    r.tag = lambda.is_one() ? OrderCase::RepeatedRoot1 : OrderCase::RepeatedRootJordanBlock;
    return r;
  }
  if (lambda.is_one()) {
    auto om = root_of_unity_order(mu);
    if (!gamma.is_zero()) {
      r.tag = OrderCase::Lambda1GammaNonzero;
      return r;
    }
    if (!om) {
      r.tag = OrderCase::DistinctRootsNotUnity;
      return r;
    }
    r.finite = true;
    r.m = *om;
  } else {
    auto ol = root_of_unity_order(lambda), om = root_of_unity_order(mu);
    if (!ol || !om) {
      r.tag = OrderCase::DistinctRootsNotUnity;
      return r;
    }
    r.finite = true;
    r.m = lcm_ul(*ol, *om);
  }
  // Confirm by iterating the automorphism.
  const Matrix M = AffineAuto::downup(alpha, beta, gamma).matrix();
  const Matrix I = Matrix::identity(alpha.ctx(), 3);
  auto mpow = [&](unsigned long e) {
    Matrix acc = I;
    for (unsigned long i = 0; i < e; ++i) acc = acc * M;
    return acc;
  };
  if (!(mpow(r.m) == I)) throw std::logic_error("down-up automorphism order not confirmed");
  for (unsigned long d : divisors(r.m))
    if (d < r.m && mpow(d) == I) throw std::logic_error("down-up automorphism has smaller order");
  return r;
}

std::vector<CPoly> fixed_polynomials(const AffineAuto& phi, unsigned d) {
  const CtxPtr& ctx = phi.lin[0][0].ctx();
  std::vector<std::pair<unsigned, unsigned>> mons;
  for (unsigned t = 0; t <= d; ++t)
    for (unsigned i = 0; i <= t; ++i) mons.push_back({i, t - i});
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  for (std::size_t k = 0; k < mons.size(); ++k) index[mons[k]] = k;
  Matrix m(ctx, mons.size(), mons.size());
  for (std::size_t k = 0; k < mons.size(); ++k) {
    CPoly f;
    f[mons[k]] = Coeff::one(ctx);
    CPoly g = phi.apply(f);
    cadd(g, mons[k], -Coeff::one(ctx));
    for (const auto& [mm, c] : g) m(index.at(mm), k) = c;
  }
  std::vector<CPoly> out;
  for (const auto& v : kernel(m)) {
    CPoly f;
    for (std::size_t k = 0; k < mons.size(); ++k) cadd(f, mons[k], v[k]);
    out.push_back(std::move(f));
  }
  return out;
}

NCPoly downup_embed(const Presentation& P, const CPoly& f) {
  const NCPoly x = P.monomial(P.word({"u", "d"})), y = P.monomial(P.word({"d", "u"}));
  NCPoly out = P.zero();
  for (const auto& [m, c] : f) out += multiply(P, power(P, x, m.first), power(P, y, m.second)) * c;
  return out;
}

CentralSet downup_center_generators(const DownUpParams& s, const std::optional<std::pair<Coeff, Coeff>>& roots) {
  const Presentation P = build_family(s);
  auto [lambda, mu] = downup_roots(s.alpha, s.beta, roots);
  const CtxPtr& ctx = s.alpha.ctx();
  const Coeff one = Coeff::one(ctx), zero = Coeff::zero(ctx);
  // Eigenvector of phi on span{x, y, 1} for an eigenvalue r != 1.
  auto omega = [&](const Coeff& r) { return affine_image(s.beta * (r - one), r * (r - one), s.gamma * r); };
  auto embed_pow = [&](const CPoly& f, unsigned long k) { return power(P, downup_embed(P, f), static_cast<unsigned>(k)); };
  const auto ord_l = root_of_unity_order(lambda), ord_m = root_of_unity_order(mu);

  CentralSet cs;
  cs.spanning_claimed = false;
  unsigned long order = 0;
  auto add_um_dm = [&](unsigned long m, const std::string& cond) {
    cs.elements.push_back(gen_power_elem(P, "u", m, cond));
    cs.elements.push_back(gen_power_elem(P, "d", m, cond));
    cs.spanning_claimed = true;
    order = m;
  };

  if (!(lambda == mu) && !lambda.is_one() && !mu.is_one()) {
    // phi(omega1) = mu omega1, phi(omega2) = lambda omega2.
    const CPoly w1 = omega(mu), w2 = omega(lambda);
    const unsigned long bound = 12;
    std::vector<std::pair<unsigned long, unsigned long>> found;
    for (unsigned long t = 1; t <= bound; ++t)
      for (unsigned long i = 0; i <= t; ++i) {
        const unsigned long j = t - i;
        if (!(mu.pow(static_cast<long>(i)) * lambda.pow(static_cast<long>(j))).is_one()) continue;
        bool multiple = std::any_of(found.begin(), found.end(), [&](const auto& f) {
          return i >= f.first && j >= f.second;
        });
        if (multiple) continue;
        found.push_back({i, j});
        NCPoly e = multiply(P, embed_pow(w1, i), embed_pow(w2, j));
        cs.elements.push_back({"omega1^" + std::to_string(i) + " omega2^" + std::to_string(j), e,
                               "mu^i lambda^j = 1"});
      }
    if (ord_l && ord_m) add_um_dm(lcm_ul(*ord_l, *ord_m), "lambda, mu roots of unity");
    cs.note = "distinct roots, both different from 1";
  } else if (!(lambda == mu)) {
    // lambda = 1: phi(beta x + y) = beta x + y + gamma.
    const CPoly w1 = affine_image(s.beta, one, zero);
    const CPoly w2 = omega(mu);
    if (s.gamma.is_zero()) {
      cs.elements.push_back({"omega1", downup_embed(P, w1), "lambda = 1, gamma = 0"});
      if (ord_m) {
        cs.elements.push_back({"omega2^" + std::to_string(*ord_m), embed_pow(w2, *ord_m), "ord mu = m"});
        add_um_dm(*ord_m, "ord mu = m, gamma = 0");
      }
    } else if (ord_m) {
      cs.elements.push_back({"omega^" + std::to_string(*ord_m), embed_pow(w2, *ord_m), "lambda = 1, ord mu = m"});
    }
    cs.note = "lambda = 1";
  } else if (!lambda.is_one()) {
    if (ord_m) cs.elements.push_back({"omega^" + std::to_string(*ord_m), embed_pow(omega(mu), *ord_m), "ord mu = m"});
    cs.note = "repeated root";
  } else {
    if (s.gamma.is_zero()) {
      cs.elements.push_back({"omega", downup_embed(P, affine_image(-one, one, zero)), "lambda = mu = 1, gamma = 0"});
    } else {
      for (const auto& f : fixed_polynomials(AffineAuto::downup(s.alpha, s.beta, s.gamma), 2)) {
        bool constant = f.size() == 1 && f.begin()->first == std::make_pair(0u, 0u);
        if (constant) continue;
        cs.elements.push_back({"casimir", downup_embed(P, f), "lambda = mu = 1"});
        break;
      }
    }
    cs.note = "lambda = mu = 1";
  }
  if (cs.elements.empty()) throw Error(Errc::TrivialCenter, "no fixed element of phi: " + cs.note);
  cs.caps = implied_caps(P, cs.elements);
  // u^m and d^m alone do not bound the residual words: (ud)u is not a
  // multiple of u^2 d. One extra letter covers the R-module generators.
  if (order) cs.caps["u"] = cs.caps["d"] = static_cast<unsigned>(order + 1);
  return cs;
}

// ---------------------------------------------------------------------------

SpanningReport spanning_check(const Presentation& P, const std::vector<CentralElement>& centrals,
                              const std::map<std::string, unsigned>& caps, unsigned D, bool check_confluence) {
  if (check_confluence) require_confluent(P);
  const TermOrder& order = *P.order();
  SpanningReport rep;
  rep.degree = D;
  const auto target = irreducible_words(P, D);
  rep.target = target.size();
  std::map<Word, std::size_t, WordLess> index(WordLess{&order});
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);

  std::vector<unsigned> cap(P.num_generators(), D + 1);
  for (const auto& [g, k] : caps) cap[P.require_letter(g)] = k;
  std::vector<Word> residual;
  for (const Word& w : target) {
    std::vector<unsigned> count(P.num_generators(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) ++count[letter_at(w, i)];
    bool ok = true;
    for (std::size_t l = 0; l < count.size(); ++l) ok = ok && count[l] < cap[l];
    if (ok) residual.push_back(w);
  }

  // Products of centrals by nondecreasing index, within the degree bound.
  std::vector<std::pair<NCPoly, unsigned>> products;
  std::function<void(const NCPoly&, unsigned, std::size_t)> grow = [&](const NCPoly& c, unsigned wt, std::size_t from) {
    products.push_back({c, wt});
    for (std::size_t k = from; k < centrals.size(); ++k) {
      const NCPoly& e = centrals[k].element;
      if (e.is_zero()) continue;
      const unsigned we = order.weight_of(e.leading_word());
      if (we == 0 || wt + we > D) continue;
      grow(multiply(P, c, e), wt + we, k);
    }
  };
  grow(P.scalar(P.one()), 0, 0);

  EchelonBasis eb;
  for (const auto& [c, wc] : products)
    for (const Word& m : residual) {
      if (wc + order.weight_of(m) > D) continue;
      NCPoly v = multiply(P, c, P.monomial(m));
      SparseVec sv;
      for (const auto& [w, k] : v.terms()) sv.emplace(index.at(w), k);
      ++rep.generators;
      eb.insert(std::move(sv));
    }
  rep.rank = eb.rank();
  rep.spanned = rep.rank == rep.target;
  if (!rep.spanned)
    for (std::size_t i = 0; i < target.size(); ++i)
      if (!eb.reduce(SparseVec{{i, P.one()}}).empty()) {
        rep.first_missing = target[i];
        break;
      }
  return rep;
}

}  // namespace orepi
