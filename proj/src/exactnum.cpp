#include "orepi/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace orepi {

// ---------------------------------------------------------------------------
// integer helpers

unsigned long lcm_ul(unsigned long a, unsigned long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// Q[x]

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.clear();
  if (a.size() < b.size()) {
    r = std::move(a);
    return;
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lb;
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  r = std::move(a);
}

QPoly qmod(const QPoly& a, const QPoly& m) {
  QPoly q, r;
  qdivmod(a, m, q, r);
  return r;
}

// inverse of a modulo m (m irreducible); throws on zero
QPoly qinv_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = qmod(a, m);
  if (r1.empty()) throw Error(Errc::DivisionByZero, "inverse of zero");
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return qmod(s0, m);
}

// ---------------------------------------------------------------------------
// multivariate polynomials

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 0xFFFF) throw Error(Errc::RangeError, "exponent overflow");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxParams; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxParams; ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

bool mono_is_one(const Monomial& m) {
  return std::all_of(m.e.begin(), m.e.end(), [](auto x) { return x == 0; });
}

void add_term(MPoly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

MPoly mp_constant(const Rational& c) {
  MPoly p;
  if (c != 0) p.emplace(Monomial{}, c);
  return p;
}

void mp_add_scaled(MPoly& a, const MPoly& b, const Rational& s) {
  for (const auto& [m, c] : b) add_term(a, m, c * s);
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

MPoly mp_shift(const MPoly& a, const Monomial& up) {
  MPoly r;
  for (const auto& [m, c] : a) r.emplace_hint(r.end(), mono_mul(m, up), c);
  return r;
}

MPoly mp_shift_down(const MPoly& a, const Monomial& down) {
  MPoly r;
  for (const auto& [m, c] : a) r.emplace_hint(r.end(), mono_div(m, down), c);
  return r;
}

void mp_scale(MPoly& a, const Rational& s) {
  for (auto& kv : a) kv.second *= s;
}

bool mp_is_constant(const MPoly& p) {
  return p.empty() || (p.size() == 1 && mono_is_one(p.begin()->first));
}

Monomial mp_max_degrees(const MPoly& p) {
  Monomial r;
  for (const auto& [m, c] : p)
    for (std::size_t i = 0; i < kMaxParams; ++i) r.e[i] = std::max(r.e[i], m.e[i]);
  return r;
}

Monomial mp_min_exponents(const MPoly& a, const MPoly& b) {
  Monomial r;
  r.e.fill(0xFFFF);
  for (const MPoly* p : {&a, &b})
    for (const auto& [m, c] : *p)
      for (std::size_t i = 0; i < kMaxParams; ++i) r.e[i] = std::min(r.e[i], m.e[i]);
  return r;
}

// a / b when b divides a exactly (lex division with a degree guard).
std::optional<MPoly> mp_divide_exact(MPoly a, const MPoly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  MPoly q;
  if (a.empty()) return q;
  const Monomial bound = mp_max_degrees(a);
  const auto& [lb_m, lb_c] = *b.rbegin();
  while (!a.empty()) {
    const auto& [la_m, la_c] = *a.rbegin();
    if (!mono_divides(lb_m, la_m) || !mono_divides(la_m, bound)) return std::nullopt;
    Monomial m = mono_div(la_m, lb_m);
    Rational c = la_c / lb_c;
    add_term(q, m, c);
    for (const auto& [bm, bc] : b) add_term(a, mono_mul(bm, m), -c * bc);
  }
  return q;
}

void rf_normalize(RatFuncValue& v) {
  if (v.den.empty()) throw Error(Errc::DivisionByZero, "zero denominator");
  if (v.num.empty()) {
    v.den = mp_constant(1);
    return;
  }
  Monomial g = mp_min_exponents(v.num, v.den);
  if (!mono_is_one(g)) {
    v.num = mp_shift_down(v.num, g);
    v.den = mp_shift_down(v.den, g);
  }
  if (v.den.size() > 1) {
    if (auto q = mp_divide_exact(v.num, v.den)) {
      v.num = std::move(*q);
      v.den = mp_constant(1);
    } else if (v.num.size() > 1) {
      if (auto q2 = mp_divide_exact(v.den, v.num)) {
        v.den = std::move(*q2);
        v.num = mp_constant(1);
      }
    }
  }
  Rational lc = v.den.rbegin()->second;
  if (lc != 1) {
    Rational s = 1 / lc;
    mp_scale(v.num, s);
    mp_scale(v.den, s);
  }
}

RatFuncValue rf_add(const RatFuncValue& a, const RatFuncValue& b, const Rational& sign) {
  RatFuncValue r;
  if (a.den == b.den) {
    r.num = a.num;
    mp_add_scaled(r.num, b.num, sign);
    r.den = a.den;
  } else if (a.den.size() == 1 && b.den.size() == 1) {
    const Monomial& ma = a.den.begin()->first;
    const Monomial& mb = b.den.begin()->first;
    Monomial l;
    for (std::size_t i = 0; i < kMaxParams; ++i) l.e[i] = std::max(ma.e[i], mb.e[i]);
    Rational ca = a.den.begin()->second, cb = b.den.begin()->second;
    r.num = mp_shift(a.num, mono_div(l, ma));
    mp_scale(r.num, 1 / ca);
    mp_add_scaled(r.num, mp_shift(b.num, mono_div(l, mb)), sign / cb);
    r.den.emplace(l, Rational(1));
  } else if (auto k = mp_divide_exact(b.den, a.den)) {
    r.num = mp_mul(a.num, *k);
    mp_add_scaled(r.num, b.num, sign);
    r.den = b.den;
  } else if (auto k2 = mp_divide_exact(a.den, b.den)) {
    r.num = a.num;
    mp_add_scaled(r.num, mp_mul(b.num, *k2), sign);
    r.den = a.den;
  } else {
    r.num = mp_mul(a.num, b.den);
    mp_add_scaled(r.num, mp_mul(b.num, a.den), sign);
    r.den = mp_mul(a.den, b.den);
  }
  rf_normalize(r);
  return r;
}

RatFuncValue rf_mul(const RatFuncValue& a, const RatFuncValue& b) {
  RatFuncValue r;
  MPoly an = a.num, bn = b.num, ad = a.den, bd = b.den;
  if (bd.size() > 1) {
    if (auto q = mp_divide_exact(an, bd)) {
      an = std::move(*q);
      bd = mp_constant(1);
    }
  }
  if (ad.size() > 1) {
    if (auto q = mp_divide_exact(bn, ad)) {
      bn = std::move(*q);
      ad = mp_constant(1);
    }
  }
  r.num = mp_mul(an, bn);
  r.den = mp_mul(ad, bd);
  rf_normalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// GF(p)[x] helpers (lowest degree first, trimmed)

using GfPoly = std::vector<std::uint32_t>;

void gtrim(GfPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t ginv_scalar(std::uint32_t a, unsigned p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

GfPoly gmul(const GfPoly& a, const GfPoly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  GfPoly out(r.begin(), r.end());
  gtrim(out);
  return out;
}

GfPoly gmod(GfPoly a, const GfPoly& m, unsigned p) {
  gtrim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t inv_lead = ginv_scalar(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = std::uint64_t(a.back()) * inv_lead % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - c * m[j] % p) % p);
    gtrim(a);
  }
  return a;
}

GfPoly gpowmod(GfPoly base, std::uint64_t e, const GfPoly& m, unsigned p) {
  GfPoly r{1};
  base = gmod(base, m, p);
  while (e) {
    if (e & 1) r = gmod(gmul(r, base, p), m, p);
    base = gmod(gmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

GfPoly ggcd(GfPoly a, GfPoly b, unsigned p) {
  gtrim(a);
  gtrim(b);
  while (!b.empty()) {
    GfPoly r = gmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool gf_irreducible(const GfPoly& f, unsigned p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  GfPoly x{0, 1};
  GfPoly xp = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = gpowmod(xp, p, f, p);
    GfPoly d = xp;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    gtrim(d);
    GfPoly g = ggcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// string helpers

std::string rational_str(const Rational& r) { return r.get_str(); }

// Joins (coefficient, monomial text) pairs into "a*m + b*n - ...".
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : terms) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += rational_str(a);
    } else if (a == 1) {
      out += m;
    } else {
      out += rational_str(a) + "*" + m;
    }
  }
  return out;
}

std::string mpoly_str(const MPoly& p, const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    std::string m;
    for (std::size_t i = 0; i < names.size(); ++i) {
      unsigned e = it->first.e[i];
      if (!e) continue;
      if (!m.empty()) m += "*";
      m += names[i];
      if (e > 1) m += "^" + std::to_string(e);
    }
    terms.emplace_back(it->second, m);
  }
  return join_terms(terms);
}

std::optional<unsigned> zeta_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  if (name.size() > 7) return std::nullopt;
  unsigned v = static_cast<unsigned>(std::stoul(name.substr(1)));
  if (v == 0) return std::nullopt;
  return v;
}

void require_same(const Coeff& a, const Coeff& b) {
  if (!a.valid() || !b.valid()) throw Error(Errc::CtxMismatch, "uninitialised coefficient");
  if (a.ctx() == b.ctx()) return;
  if (!a.ctx()->same_as(*b.ctx()))
    throw Error(Errc::CtxMismatch, a.ctx()->to_string() + " vs " + b.ctx()->to_string());
}

Rational rational_from_int(long n) { return Rational(n); }

std::uint32_t rational_mod_p(const Rational& r, unsigned p) {
  Integer num = r.get_num(), den = r.get_den();
  Integer pp = p;
  Integer dn = den % pp;
  if (dn == 0) throw Error(Errc::DivisionByZero, "denominator divisible by characteristic");
  Integer nn = num % pp;
  if (nn < 0) nn += pp;
  std::uint32_t a = static_cast<std::uint32_t>(nn.get_ui());
  std::uint32_t b = static_cast<std::uint32_t>(dn < 0 ? Integer(dn + pp).get_ui() : dn.get_ui());
  return static_cast<std::uint32_t>(std::uint64_t(a) * ginv_scalar(b, p) % p);
}

}  // namespace

// ---------------------------------------------------------------------------
// cyclotomic polynomials

QPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidField, "cyclotomic level must be positive");
  QPoly f(n + 1, Rational(0));
  f[0] = -1;
  f[n] = 1;
  for (unsigned long d : divisors(n)) {
    if (d == n) continue;
    QPoly q, r;
    qdivmod(f, cyclotomic_polynomial(static_cast<unsigned>(d)), q, r);
    f = std::move(q);
  }
  return f;
}

// ---------------------------------------------------------------------------
// FieldCtx

CtxPtr FieldCtx::rational() {
  auto c = std::make_shared<FieldCtx>();
  c->kind_ = FieldKind::Rational;
  return c;
}

CtxPtr FieldCtx::cyclotomic(unsigned level) {
  if (level == 0 || level > 100000) throw Error(Errc::InvalidField, "cyclotomic level out of range");
  auto c = std::make_shared<FieldCtx>();
  c->kind_ = FieldKind::Cyclotomic;
  c->level_ = level;
  c->phi_ = cyclotomic_polynomial(level);
  return c;
}

CtxPtr FieldCtx::ratfunc(std::vector<std::string> params) {
  if (params.empty()) throw Error(Errc::InvalidField, "rational function field needs parameters");
  if (params.size() > kMaxParams)
    throw Error(Errc::InvalidField, "at most " + std::to_string(kMaxParams) + " parameters");
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& s = params[i];
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      throw Error(Errc::InvalidField, "bad parameter name '" + s + "'");
    if (zeta_index(s)) throw Error(Errc::InvalidField, "parameter name '" + s + "' is reserved");
    for (std::size_t j = 0; j < i; ++j)
      if (params[j] == s) throw Error(Errc::InvalidField, "duplicate parameter '" + s + "'");
  }
  auto c = std::make_shared<FieldCtx>();
  c->kind_ = FieldKind::RatFunc;
  c->params_ = std::move(params);
  return c;
}

CtxPtr FieldCtx::galois(unsigned p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p > kMaxGaloisPrime)
    throw Error(Errc::InvalidField, "GF characteristic must be a prime <= " + std::to_string(kMaxGaloisPrime));
  for (auto& x : modulus) x %= p;
  gtrim(modulus);
  if (modulus.size() < 2) throw Error(Errc::InvalidField, "GF modulus must have degree >= 1");
  if (modulus.size() - 1 > kMaxGaloisDegree)
    throw Error(Errc::InvalidField, "GF degree must be <= " + std::to_string(kMaxGaloisDegree));
  if (modulus.back() != 1) {
    std::uint32_t inv = ginv_scalar(modulus.back(), p);
    for (auto& x : modulus) x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % p);
  }
  if (!gf_irreducible(modulus, p)) throw Error(Errc::InvalidField, "GF modulus is reducible");
  auto c = std::make_shared<FieldCtx>();
  c->kind_ = FieldKind::Galois;
  c->prime_ = p;
  c->modulus_ = std::move(modulus);
  return c;
}

CtxPtr FieldCtx::parse(std::string_view spec) {
  std::string s(spec);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s == "Q" || s == "QQ" || s == "q" || s == "rational") return rational();
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  try {
    if (head == "cyclo") return cyclotomic(static_cast<unsigned>(std::stoul(rest)));
    if (head == "ratfunc") {
      std::vector<std::string> names;
      std::stringstream ss(rest);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) names.push_back(item);
      return ratfunc(std::move(names));
    }
    if (head == "gf") {
      auto c2 = rest.find(':');
      unsigned p = static_cast<unsigned>(std::stoul(rest.substr(0, c2)));
      if (c2 == std::string::npos) return galois(p, {0, 1});
      auto xctx = ratfunc({"x"});
      Coeff m = parse_coeff(rest.substr(c2 + 1), xctx);
      const auto& rf = std::get<RatFuncValue>(m.value());
      if (!mp_is_constant(rf.den)) throw Error(Errc::InvalidField, "GF modulus must be a polynomial");
      Rational dc = rf.den.begin()->second;
      std::vector<std::uint32_t> mod;
      for (const auto& [mono, c] : rf.num) {
        unsigned e = mono.e[0];
        if (mod.size() <= e) mod.resize(e + 1, 0);
        mod[e] = rational_mod_p(c / dc, p);
      }
      return galois(p, std::move(mod));
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error(Errc::InvalidField, "unrecognised field '" + std::string(spec) + "'");
}

std::optional<std::size_t> FieldCtx::param_index(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  return std::nullopt;
}

unsigned FieldCtx::degree() const {
  switch (kind_) {
    case FieldKind::Cyclotomic: return static_cast<unsigned>(phi_.size() - 1);
    case FieldKind::Galois: return static_cast<unsigned>(modulus_.size() - 1);
    default: return 1;
  }
}

std::uint64_t FieldCtx::order() const {
  if (kind_ != FieldKind::Galois) return 0;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree(); ++i) q *= prime_;
  return q;
}

std::string FieldCtx::to_string() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Cyclotomic: return "cyclo:" + std::to_string(level_);
    case FieldKind::RatFunc: {
      std::string s = "ratfunc:";
      for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + params_[i];
      return s;
    }
    case FieldKind::Galois: {
      std::string s = "gf:" + std::to_string(prime_);
      if (degree() > 1) {
        std::vector<std::pair<Rational, std::string>> terms;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
          if (!modulus_[i]) continue;
          std::string m = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
          terms.emplace_back(Rational(modulus_[i]), m);
        }
        s += ":" + join_terms(terms);
      }
      return s;
    }
  }
  return "?";
}

bool FieldCtx::same_as(const FieldCtx& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case FieldKind::Rational: return true;
    case FieldKind::Cyclotomic: return level_ == o.level_;
    case FieldKind::RatFunc: return params_ == o.params_;
    case FieldKind::Galois: return prime_ == o.prime_ && modulus_ == o.modulus_;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Coeff construction

Coeff Coeff::zero(const CtxPtr& ctx) { return from_rational(ctx, Rational(0)); }
Coeff Coeff::one(const CtxPtr& ctx) { return from_rational(ctx, Rational(1)); }
Coeff Coeff::from_int(const CtxPtr& ctx, long n) { return from_rational(ctx, rational_from_int(n)); }

Coeff Coeff::from_rational(const CtxPtr& ctx, const Rational& r) {
  if (!ctx) throw Error(Errc::CtxMismatch, "null context");
  switch (ctx->kind()) {
    case FieldKind::Rational: return Coeff(ctx, r);
    case FieldKind::Cyclotomic: {
      CycloValue v;
      v.c.assign(ctx->degree(), Rational(0));
      v.c[0] = r;
      return Coeff(ctx, std::move(v));
    }
    case FieldKind::RatFunc: {
      RatFuncValue v{mp_constant(r), mp_constant(1)};
      return Coeff(ctx, std::move(v));
    }
    case FieldKind::Galois: {
      GaloisValue v;
      v.c.assign(ctx->degree(), 0);
      v.c[0] = rational_mod_p(r, ctx->prime());
      return Coeff(ctx, std::move(v));
    }
  }
  throw Error(Errc::InvalidField, "unknown field kind");
}

Coeff Coeff::galois_generator(const CtxPtr& ctx) {
  if (ctx->kind() != FieldKind::Galois) throw Error(Errc::InvalidField, "not a Galois field");
  GaloisValue v;
  v.c.assign(ctx->degree(), 0);
  if (ctx->degree() == 1) {
    // x mod (x - a) = a
    v.c[0] = (ctx->prime() - ctx->modulus()[0]) % ctx->prime();
  } else {
    v.c[1] = 1;
  }
  return Coeff(ctx, std::move(v));
}

Coeff Coeff::zeta(const CtxPtr& ctx, unsigned m) {
  if (m == 0) throw Error(Errc::InvalidField, "zeta order must be positive");
  switch (ctx->kind()) {
    case FieldKind::Rational:
    case FieldKind::RatFunc:
      if (m == 1) return one(ctx);
      if (m == 2) return from_int(ctx, -1);
      break;
    case FieldKind::Cyclotomic: {
      unsigned n = ctx->level();
      CycloValue x;
      x.c.assign(ctx->degree(), Rational(0));
      QPoly xp{Rational(0), Rational(1)};
      QPoly red = qmod(xp, ctx->cyclotomic_poly());
      for (std::size_t i = 0; i < red.size(); ++i) x.c[i] = red[i];
      Coeff gen(ctx, std::move(x));
      if (n % m == 0) return gen.pow(static_cast<long>(n / m));
      if (m % 2 == 0 && n % 2 == 1 && n % (m / 2) == 0) return -gen.pow(static_cast<long>(n / (m / 2)));
      break;
    }
    case FieldKind::Galois: {
      std::uint64_t q = ctx->order();
      if ((q - 1) % m) break;
      auto factors = prime_factors(q - 1);
      const unsigned p = ctx->prime();
      const unsigned k = ctx->degree();
      for (std::uint64_t idx = 1; idx < q; ++idx) {
        GaloisValue v;
        v.c.assign(k, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i, t /= p) v.c[i] = static_cast<std::uint32_t>(t % p);
        Coeff g(ctx, std::move(v));
        bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
          return !g.pow(static_cast<long>((q - 1) / r)).is_one();
        });
        if (primitive) return g.pow(static_cast<long>((q - 1) / m));
      }
      break;
    }
  }
  throw Error(Errc::InvalidField, "no primitive " + std::to_string(m) + "-th root of unity in " + ctx->to_string());
}

Coeff Coeff::param(const CtxPtr& ctx, std::string_view name) {
  if (ctx->kind() != FieldKind::RatFunc) throw Error(Errc::InvalidField, "parameters need a ratfunc field");
  auto idx = ctx->param_index(name);
  if (!idx) throw Error(Errc::UnassignedParameter, "unknown parameter '" + std::string(name) + "'");
  Monomial m;
  m.e[*idx] = 1;
  RatFuncValue v;
  v.num.emplace(m, Rational(1));
  v.den = mp_constant(1);
  return Coeff(ctx, std::move(v));
}

// ---------------------------------------------------------------------------
// Coeff predicates

bool Coeff::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, CycloValue>) {
          return std::all_of(v.c.begin(), v.c.end(), [](const Rational& r) { return r == 0; });
        } else if constexpr (std::is_same_v<T, RatFuncValue>) {
          return v.num.empty();
        } else {
          return std::all_of(v.c.begin(), v.c.end(), [](auto x) { return x == 0; });
        }
      },
      v_);
}

bool Coeff::is_one() const {
  if (!ctx_) return false;
  return *this == one(ctx_);
}

std::optional<Rational> Coeff::as_rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  if (const auto* c = std::get_if<CycloValue>(&v_)) {
    for (std::size_t i = 1; i < c->c.size(); ++i)
      if (c->c[i] != 0) return std::nullopt;
    return c->c[0];
  }
  if (const auto* f = std::get_if<RatFuncValue>(&v_)) {
    if (!mp_is_constant(f->num) || !mp_is_constant(f->den)) return std::nullopt;
    Rational n = f->num.empty() ? Rational(0) : f->num.begin()->second;
    return n / f->den.begin()->second;
  }
  return std::nullopt;
}

bool operator==(const Coeff& a, const Coeff& b) {
  require_same(a, b);
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.v_);
        if constexpr (std::is_same_v<T, Rational>) {
          return x == y;
        } else if constexpr (std::is_same_v<T, CycloValue>) {
          return x.c == y.c;
        } else if constexpr (std::is_same_v<T, RatFuncValue>) {
          if (x.den == y.den) return x.num == y.num;
          return mp_mul(x.num, y.den) == mp_mul(y.num, x.den);
        } else {
          return x.c == y.c;
        }
      },
      a.v_);
}

// ---------------------------------------------------------------------------
// Coeff arithmetic

Coeff Coeff::operator-() const { return field_arith(FieldOp::Neg, *this, *this); }
Coeff& Coeff::operator+=(const Coeff& o) { return *this = field_arith(FieldOp::Add, *this, o); }
Coeff& Coeff::operator-=(const Coeff& o) { return *this = field_arith(FieldOp::Sub, *this, o); }
Coeff& Coeff::operator*=(const Coeff& o) { return *this = field_arith(FieldOp::Mul, *this, o); }
Coeff& Coeff::operator/=(const Coeff& o) { return *this = field_arith(FieldOp::Div, *this, o); }
Coeff Coeff::inverse() const { return field_arith(FieldOp::Inv, *this, *this); }

Coeff Coeff::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff r = one(ctx_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

namespace {

struct Arith {
  const FieldCtx& ctx;

  Rational add(const Rational& a, const Rational& b, int s) const { return s > 0 ? Rational(a + b) : Rational(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "division by zero");
    return 1 / a;
  }

  CycloValue add(const CycloValue& a, const CycloValue& b, int s) const {
    CycloValue r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (s > 0) r.c[i] += b.c[i];
      else r.c[i] -= b.c[i];
    }
    return r;
  }
  CycloValue mul(const CycloValue& a, const CycloValue& b) const {
    QPoly p = qmod(qmul(a.c, b.c), ctx.cyclotomic_poly());
    CycloValue r;
    r.c.assign(ctx.degree(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) r.c[i] = p[i];
    return r;
  }
  CycloValue neg(const CycloValue& a) const {
    CycloValue r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  CycloValue inv(const CycloValue& a) const {
    QPoly p = a.c;
    trim(p);
    if (p.empty()) throw Error(Errc::DivisionByZero, "division by zero");
    QPoly s = qinv_mod(p, ctx.cyclotomic_poly());
    CycloValue r;
    r.c.assign(ctx.degree(), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) r.c[i] = s[i];
    return r;
  }

  RatFuncValue add(const RatFuncValue& a, const RatFuncValue& b, int s) const {
    return rf_add(a, b, Rational(s));
  }
  RatFuncValue mul(const RatFuncValue& a, const RatFuncValue& b) const { return rf_mul(a, b); }
  RatFuncValue neg(const RatFuncValue& a) const {
    RatFuncValue r = a;
    mp_scale(r.num, Rational(-1));
    return r;
  }
  RatFuncValue inv(const RatFuncValue& a) const {
    if (a.num.empty()) throw Error(Errc::DivisionByZero, "division by zero");
    RatFuncValue r{a.den, a.num};
    rf_normalize(r);
    return r;
  }

  GaloisValue add(const GaloisValue& a, const GaloisValue& b, int s) const {
    const unsigned p = ctx.prime();
    GaloisValue r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = s > 0 ? (r.c[i] + b.c[i]) % p : (r.c[i] + p - b.c[i]) % p;
    return r;
  }
  GaloisValue mul(const GaloisValue& a, const GaloisValue& b) const {
    const unsigned p = ctx.prime();
    GfPoly x(a.c), y(b.c);
    gtrim(x);
    gtrim(y);
    GfPoly m = gmod(gmul(x, y, p), ctx.modulus(), p);
    GaloisValue r;
    r.c.assign(ctx.degree(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r.c[i] = m[i];
    return r;
  }
  GaloisValue neg(const GaloisValue& a) const {
    const unsigned p = ctx.prime();
    GaloisValue r = a;
    for (auto& x : r.c) x = (p - x) % p;
    return r;
  }
  GaloisValue inv(const GaloisValue& a) const {
    if (std::all_of(a.c.begin(), a.c.end(), [](auto x) { return x == 0; }))
      throw Error(Errc::DivisionByZero, "division by zero");
    const unsigned p = ctx.prime();
    GfPoly x(a.c);
    gtrim(x);
    GfPoly m = gpowmod(x, ctx.order() - 2, ctx.modulus(), p);
    GaloisValue r;
    r.c.assign(ctx.degree(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) r.c[i] = m[i];
    return r;
  }
};

}  // namespace

Coeff field_arith(FieldOp op, const Coeff& a, const Coeff& b) {
  require_same(a, b);
  Arith ar{*a.ctx()};
  return std::visit(
      [&](const auto& x) -> Coeff {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value());
        switch (op) {
          case FieldOp::Add: return Coeff(a.ctx(), ar.add(x, y, 1));
          case FieldOp::Sub: return Coeff(a.ctx(), ar.add(x, y, -1));
          case FieldOp::Mul: return Coeff(a.ctx(), ar.mul(x, y));
          case FieldOp::Div: return Coeff(a.ctx(), ar.mul(x, ar.inv(y)));
          case FieldOp::Neg: return Coeff(a.ctx(), ar.neg(x));
          case FieldOp::Inv: return Coeff(a.ctx(), ar.inv(x));
        }
        throw Error(Errc::InvalidField, "unknown operation");
      },
      a.value());
}

// ---------------------------------------------------------------------------
// printing

std::string Coeff::to_string() const {
  if (!ctx_) return "<invalid>";
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return rational_str(v);
        } else if constexpr (std::is_same_v<T, CycloValue>) {
          std::vector<std::pair<Rational, std::string>> terms;
          const std::string z = "z" + std::to_string(ctx_->level());
          for (std::size_t i = v.c.size(); i-- > 0;) {
            if (v.c[i] == 0) continue;
            terms.emplace_back(v.c[i], i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i)));
          }
          return join_terms(terms);
        } else if constexpr (std::is_same_v<T, RatFuncValue>) {
          std::string n = mpoly_str(v.num, ctx_->params());
          if (mp_is_constant(v.den) && v.den.begin()->second == 1) return n;
          bool simple_num = v.num.size() <= 1;
          std::string num = simple_num ? n : "(" + n + ")";
          return num + "/(" + mpoly_str(v.den, ctx_->params()) + ")";
        } else {
          std::vector<std::pair<Rational, std::string>> terms;
          for (std::size_t i = v.c.size(); i-- > 0;) {
            if (!v.c[i]) continue;
            terms.emplace_back(Rational(v.c[i]), i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i)));
          }
          return join_terms(terms);
        }
      },
      v_);
}

// ---------------------------------------------------------------------------
// root of unity order

std::optional<unsigned long> root_of_unity_order(const Coeff& a) {
  if (a.is_zero()) throw Error(Errc::ZeroInput, "order of zero");
  const auto& ctx = a.ctx();
  switch (ctx->kind()) {
    case FieldKind::Rational:
    case FieldKind::RatFunc: {
      auto r = a.as_rational();
      if (!r) return std::nullopt;
      if (*r == 1) return 1;
      if (*r == -1) return 2;
      return std::nullopt;
    }
    case FieldKind::Cyclotomic: {
      unsigned long l = lcm_ul(2, ctx->level());
      for (unsigned long d : divisors(l))
        if (a.pow(static_cast<long>(d)).is_one()) return d;
      return std::nullopt;
    }
    case FieldKind::Galois: {
      std::uint64_t q = ctx->order();
      for (unsigned long d : divisors(q - 1))
        if (a.pow(static_cast<long>(d)).is_one()) return d;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// specialisation

namespace {

Coeff eval_mpoly(const MPoly& p, const std::vector<Coeff>& vals, const CtxPtr& target) {
  Coeff acc = Coeff::zero(target);
  std::vector<std::vector<Coeff>> powers(vals.size());
  auto power = [&](std::size_t i, unsigned e) -> const Coeff& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Coeff::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * vals[i]);
    return cache[e];
  };
  for (const auto& [m, c] : p) {
    Coeff term = Coeff::from_rational(target, c);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (m.e[i]) term *= power(i, m.e[i]);
    acc += term;
  }
  return acc;
}

}  // namespace

Coeff specialize(const Coeff& a, const Assignment& assignment, const CtxPtr& target) {
  if (!a.valid() || !target) throw Error(Errc::CtxMismatch, "uninitialised coefficient");
  if (a.ctx()->same_as(*target)) return a;
  if (auto r = std::get_if<Rational>(&a.value())) return Coeff::from_rational(target, *r);
  const auto* f = std::get_if<RatFuncValue>(&a.value());
  if (!f) throw Error(Errc::CtxMismatch, "cannot map " + a.ctx()->to_string() + " into " + target->to_string());
  const auto& names = a.ctx()->params();
  std::vector<Coeff> vals;
  for (const auto& name : names) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw Error(Errc::UnassignedParameter, name);
    const Coeff& v = it->second;
    if (v.ctx()->same_as(*target)) {
      vals.push_back(v);
    } else if (auto r = std::get_if<Rational>(&v.value())) {
      vals.push_back(Coeff::from_rational(target, *r));
    } else {
      throw Error(Errc::CtxMismatch, "value for '" + name + "' is not in " + target->to_string());
    }
  }
  Coeff den = eval_mpoly(f->den, vals, target);
  if (den.is_zero()) throw Error(Errc::DenominatorVanishes, a.to_string());
  return eval_mpoly(f->num, vals, target) / den;
}

// ---------------------------------------------------------------------------
// expression evaluation

Coeff eval_coeff(const Expr& e, const CtxPtr& ctx, const IdentResolver& resolver) {
  switch (e.kind) {
    case Expr::Kind::Number: return Coeff::from_rational(ctx, Rational(e.number));
    case Expr::Kind::Ident: {
      if (resolver) {
        if (auto v = resolver(e.ident)) return *v;
      }
      if (auto z = zeta_index(e.ident)) return Coeff::zeta(ctx, *z);
      if (ctx->kind() == FieldKind::RatFunc && ctx->param_index(e.ident)) return Coeff::param(ctx, e.ident);
      if (ctx->kind() == FieldKind::Galois && e.ident == "g") return Coeff::galois_generator(ctx);
      throw Error(Errc::ParseError, "unknown identifier '" + e.ident + "' in " + ctx->to_string());
    }
    case Expr::Kind::Add: return eval_coeff(e.args[0], ctx, resolver) + eval_coeff(e.args[1], ctx, resolver);
    case Expr::Kind::Sub: return eval_coeff(e.args[0], ctx, resolver) - eval_coeff(e.args[1], ctx, resolver);
    case Expr::Kind::Mul: return eval_coeff(e.args[0], ctx, resolver) * eval_coeff(e.args[1], ctx, resolver);
    case Expr::Kind::Div: return eval_coeff(e.args[0], ctx, resolver) / eval_coeff(e.args[1], ctx, resolver);
    case Expr::Kind::Neg: return -eval_coeff(e.args[0], ctx, resolver);
    case Expr::Kind::Pow: return eval_coeff(e.args[0], ctx, resolver).pow(e.exponent);
  }
  throw Error(Errc::ParseError, "bad expression");
}

Coeff parse_coeff(std::string_view text, const CtxPtr& ctx, const IdentResolver& resolver) {
  return eval_coeff(parse_expr(text), ctx, resolver);
}

// ---------------------------------------------------------------------------
// square roots

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rational(Integer(sqrt(n)), Integer(sqrt(d)));
}

}  // namespace

std::optional<Coeff> try_sqrt(const Coeff& a) {
  const auto& ctx = a.ctx();
  if (a.is_zero()) return a;
  switch (ctx->kind()) {
    case FieldKind::Rational:
    case FieldKind::RatFunc: {
      auto r = a.as_rational();
      if (!r) return std::nullopt;
      if (auto s = rational_sqrt(*r)) return Coeff::from_rational(ctx, *s);
      return std::nullopt;
    }
    case FieldKind::Cyclotomic: {
      unsigned long l = lcm_ul(2, ctx->level());
      Coeff z = Coeff::zeta(ctx, static_cast<unsigned>(l));
      Coeff rho = Coeff::one(ctx);
      for (unsigned long j = 0; j < l; ++j, rho *= z) {
        auto r = (a / (rho * rho)).as_rational();
        if (!r) continue;
        if (auto s = rational_sqrt(*r)) return Coeff::from_rational(ctx, *s) * rho;
      }
      return std::nullopt;
    }
    case FieldKind::Galois: {
      std::uint64_t q = ctx->order();
      if (q > 200000) return std::nullopt;
      const unsigned p = ctx->prime(), k = ctx->degree();
      for (std::uint64_t idx = 1; idx < q; ++idx) {
        GaloisValue v;
        v.c.assign(k, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k; ++i, t /= p) v.c[i] = static_cast<std::uint32_t>(t % p);
        Coeff c(ctx, std::move(v));
        if (c * c == a) return c;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace orepi
