#include "orepi/presentation.hpp"

#include <algorithm>
#include <set>

namespace orepi {

// ---------------------------------------------------------------------------
// term order

unsigned TermOrder::weight_of(const Word& w) const {
  unsigned s = 0;
  for (char c : w) s += weight[static_cast<Letter>(c)];
  return s;
}

bool TermOrder::less(const Word& a, const Word& b) const {
  unsigned wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(CtxPtr ctx, OrderPtr order)
    : ctx_(std::move(ctx)), order_(std::move(order)), terms_(WordLess{order_.get()}) {}

Coeff NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff::zero(ctx_) : it->second;
}

void NCPoly::add_term(const Word& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (w != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

NCPoly NCPoly::concat(const NCPoly& o) const {
  NCPoly r(ctx_, order_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

// ---------------------------------------------------------------------------
// families

const char* family_name(Family f) {
  switch (f) {
    case Family::Bh: return "Bh";
    case Family::Hpq: return "Hpq";
    case Family::M2: return "M2";
    case Family::UqB2: return "UqB2";
    case Family::WeylMalt: return "WeylMalt";
    case Family::WeylAJ: return "WeylAJ";
    case Family::BiQuad3: return "BiQuad3";
    case Family::ThreeCyclic: return "ThreeCyclic";
    case Family::DownUp: return "DownUp";
    case Family::Bqf: return "Bqf";
    case Family::QuantumPlane: return "QuantumPlane";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  static constexpr Family all[] = {Family::Bh,      Family::Hpq,         Family::M2,     Family::UqB2,
                                   Family::WeylMalt, Family::WeylAJ,     Family::BiQuad3, Family::ThreeCyclic,
                                   Family::DownUp,  Family::Bqf,         Family::QuantumPlane};
  for (Family f : all)
    if (name == family_name(f)) return f;
  if (name == "Weyl") return Family::WeylMalt;
  if (name == "H") return Family::Hpq;
  if (name == "Cyc3" || name == "3cyclic") return Family::ThreeCyclic;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(CtxPtr ctx, std::vector<std::string> generators, std::vector<unsigned> weights,
                           std::vector<std::string> precedence)
    : ctx_(std::move(ctx)) {
  if (generators.empty() || generators.size() > 200)
    throw Error(Errc::InvalidPresentation, "generator count out of range");
  if (weights.size() != generators.size())
    throw Error(Errc::InvalidPresentation, "one weight per generator required");
  if (precedence.empty()) precedence = generators;
  std::vector<std::string> sorted_g = generators, sorted_p = precedence;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_p.begin(), sorted_p.end());
  if (sorted_g != sorted_p || std::adjacent_find(sorted_g.begin(), sorted_g.end()) != sorted_g.end())
    throw Error(Errc::InvalidPresentation, "precedence must list each generator exactly once");
  names_ = precedence;
  auto order = std::make_shared<TermOrder>();
  order->weight.resize(names_.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (weights[i] == 0) throw Error(Errc::InvalidPresentation, "weights must be positive");
    Letter l = require_letter(generators[i]);
    order->weight[l] = weights[i];
    display_.push_back(l);
  }
  order_ = order;
  by_first_.resize(names_.size());
}

std::optional<Letter> Presentation::letter(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Presentation::require_letter(std::string_view name) const {
  auto l = letter(name);
  if (!l) throw Error(Errc::InvalidPresentation, "unknown generator '" + std::string(name) + "'");
  return *l;
}

Word Presentation::word(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) w.push_back(static_cast<char>(require_letter(n)));
  return w;
}

std::vector<std::string> Presentation::word_names(const Word& w) const {
  std::vector<std::string> out;
  for (char c : w) out.push_back(names_[static_cast<Letter>(c)]);
  return out;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += names_[letter_at(w, i)];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

NCPoly Presentation::scalar(const Coeff& c) const { return monomial(Word{}, c); }

NCPoly Presentation::monomial(const Word& w, const Coeff& c) const {
  NCPoly p(ctx_, order_);
  p.add_term(w, c);
  return p;
}

NCPoly Presentation::monomial(const Word& w) const { return monomial(w, one()); }

NCPoly Presentation::gen(std::string_view name) const {
  return monomial(Word(1, static_cast<char>(require_letter(name))));
}

void Presentation::add_rule(Word lhs, NCPoly rhs) {
  if (lhs.empty()) throw Error(Errc::InvalidPresentation, "empty rule lhs");
  for (const auto& r : rules_)
    if (r.lhs == lhs) throw Error(Errc::InvalidPresentation, "duplicate rule lhs " + word_string(lhs));
  for (const auto& [w, c] : rhs.terms())
    if (!order_->less(w, lhs)) oriented_ = false;
  by_first_[letter_at(lhs, 0)].push_back(rules_.size());
  rules_.push_back(Rule{std::move(lhs), std::move(rhs)});
}

std::string Presentation::to_string(const NCPoly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string cs = it->second.to_string();
    bool compound = cs.find(' ') != std::string::npos;
    bool neg = !compound && !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (compound) cs = "(" + cs + ")";
    if (it->first.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += word_string(it->first);
    } else {
      out += cs + "*" + word_string(it->first);
    }
  }
  return out;
}

OrientationReport validate_orientation(const Presentation& p) {
  OrientationReport rep;
  const auto& rules = p.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (const auto& [w, c] : rules[i].rhs.terms()) {
      if (!p.order()->less(w, rules[i].lhs)) {
        rep.ok = false;
        rep.issues.push_back({i, w, "rhs term " + p.word_string(w) + " is not below lhs " + p.word_string(rules[i].lhs)});
      }
    }
    for (std::size_t j = 0; j < rules.size(); ++j)
      if (i != j && rules[j].lhs.find(rules[i].lhs) != Word::npos) rep.containments.emplace_back(i, j);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// element expressions

namespace {

std::optional<Coeff> as_scalar(const NCPoly& p) {
  if (p.is_zero()) return Coeff::zero(p.ctx());
  if (p.size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
  return std::nullopt;
}

}  // namespace

NCPoly eval_element(const Expr& e, const Presentation& p, const IdentResolver& scalars) {
  switch (e.kind) {
    case Expr::Kind::Number: return p.scalar(Coeff::from_rational(p.ctx(), Rational(e.number)));
    case Expr::Kind::Ident:
      if (p.letter(e.ident)) return p.gen(e.ident);
      return p.scalar(eval_coeff(e, p.ctx(), scalars));
    case Expr::Kind::Add: return eval_element(e.args[0], p, scalars) + eval_element(e.args[1], p, scalars);
    case Expr::Kind::Sub: return eval_element(e.args[0], p, scalars) - eval_element(e.args[1], p, scalars);
    case Expr::Kind::Neg: return -eval_element(e.args[0], p, scalars);
    case Expr::Kind::Mul: return eval_element(e.args[0], p, scalars).concat(eval_element(e.args[1], p, scalars));
    case Expr::Kind::Div: {
      auto d = as_scalar(eval_element(e.args[1], p, scalars));
      if (!d) throw Error(Errc::ParseError, "division by a non-scalar element");
      return eval_element(e.args[0], p, scalars) * d->inverse();
    }
    case Expr::Kind::Pow: {
      NCPoly base = eval_element(e.args[0], p, scalars);
      if (e.exponent < 0) {
        auto s = as_scalar(base);
        if (!s) throw Error(Errc::ParseError, "negative power of a non-scalar element");
        return p.scalar(s->pow(e.exponent));
      }
      NCPoly r = p.scalar(p.one());
      for (long i = 0; i < e.exponent; ++i) r = r.concat(base);
      return r;
    }
  }
  throw Error(Errc::ParseError, "bad expression");
}

NCPoly parse_element(std::string_view text, const Presentation& p, const IdentResolver& scalars) {
  return eval_element(parse_expr(text), p, scalars);
}

NCPoly specialize(const NCPoly& a, const Assignment& assignment, const Presentation& target) {
  NCPoly r = target.zero();
  for (const auto& [w, c] : a.terms()) r.add_term(w, specialize(c, assignment, target.ctx()));
  return r;
}

Presentation specialize(const Presentation& p, const Assignment& assignment, const CtxPtr& target) {
  std::vector<std::string> gens, prec;
  std::vector<unsigned> weights;
  for (Letter l : p.display_order()) {
    gens.push_back(p.name(l));
    weights.push_back(p.order()->weight[l]);
  }
  for (std::size_t i = 0; i < p.num_generators(); ++i) prec.push_back(p.name(static_cast<Letter>(i)));
  Presentation out(target, gens, weights, prec);
  for (const auto& r : p.rules()) out.add_rule(r.lhs, specialize(r.rhs, assignment, out));
  if (p.family()) out.set_family(*p.family());
  return out;
}

// ---------------------------------------------------------------------------
// family construction

Family family_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Family {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BhParams>) return Family::Bh;
        else if constexpr (std::is_same_v<T, HpqParams>) return Family::Hpq;
        else if constexpr (std::is_same_v<T, M2Params>) return Family::M2;
        else if constexpr (std::is_same_v<T, UqB2Params>) return Family::UqB2;
        else if constexpr (std::is_same_v<T, WeylMaltParams>) return Family::WeylMalt;
        else if constexpr (std::is_same_v<T, WeylAJParams>) return Family::WeylAJ;
        else if constexpr (std::is_same_v<T, BiQuad3Params>) return Family::BiQuad3;
        else if constexpr (std::is_same_v<T, ThreeCyclicParams>) return Family::ThreeCyclic;
        else if constexpr (std::is_same_v<T, DownUpParams>) return Family::DownUp;
        else if constexpr (std::is_same_v<T, BqfParams>) return Family::Bqf;
        else return Family::QuantumPlane;
      },
      spec);
}

CtxPtr ctx_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> CtxPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BhParams>) return s.h.ctx();
        else if constexpr (std::is_same_v<T, HpqParams> || std::is_same_v<T, UqB2Params> ||
                           std::is_same_v<T, ThreeCyclicParams> || std::is_same_v<T, BqfParams> ||
                           std::is_same_v<T, QuantumPlaneParams>)
          return s.q.ctx();
        else if constexpr (std::is_same_v<T, M2Params> || std::is_same_v<T, DownUpParams>) return s.alpha.ctx();
        else if constexpr (std::is_same_v<T, WeylMaltParams> || std::is_same_v<T, WeylAJParams>)
          return s.data.q.at(0).ctx();
        else return s.q1.ctx();
      },
      spec);
}

int poly_degree(const std::vector<Coeff>& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<int>(i);
  return -1;
}

namespace {

using Term = std::pair<Coeff, std::vector<std::string>>;

void rule(Presentation& P, const std::vector<std::string>& lhs, const std::vector<Term>& rhs) {
  NCPoly r = P.zero();
  for (const auto& [c, w] : rhs) r.add_term(P.word(w), c);
  P.add_rule(P.word(lhs), std::move(r));
}

void nonzero(const Coeff& c, const char* name) {
  if (!c.valid()) throw Error(Errc::ZeroParameter, std::string(name) + " is missing");
  if (c.is_zero()) throw Error(Errc::ZeroParameter, name);
}

std::string idx(const char* base, std::size_t i) { return base + std::to_string(i + 1); }

void check_weyl(const WeylData& d) {
  const std::size_t n = d.q.size();
  if (n == 0) throw Error(Errc::InvalidPresentation, "Weyl family needs n >= 1");
  if (d.lambda.size() != n) throw Error(Errc::NonAntisymmetricLambda, "lambda must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    nonzero(d.q[i], "q_i");
    if (d.lambda[i].size() != n) throw Error(Errc::NonAntisymmetricLambda, "lambda must be n x n");
    if (!d.lambda[i][i].is_one()) throw Error(Errc::NonAntisymmetricLambda, "lambda_ii must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      nonzero(d.lambda[i][j], "lambda_ij");
      if (!(d.lambda[i][j] * d.lambda[j][i]).is_one())
        throw Error(Errc::NonAntisymmetricLambda,
                    "lambda_" + std::to_string(i + 1) + std::to_string(j + 1) + " * lambda_" +
                        std::to_string(j + 1) + std::to_string(i + 1) + " != 1");
    }
  }
}

Presentation weyl_skeleton(const CtxPtr& ctx, std::size_t n) {
  std::vector<std::string> gens, prec;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(idx("x", i));
    gens.push_back(idx("y", i));
    prec.push_back(idx("y", i));
    prec.push_back(idx("x", i));
  }
  return Presentation(ctx, gens, std::vector<unsigned>(gens.size(), 1), prec);
}

Presentation build(const BhParams& s) {
  nonzero(s.h, "h");
  const auto& h = s.h;
  Presentation P(h.ctx(), {"x1", "x2", "y1", "y2"}, {1, 1, 1, 1}, {"x1", "x2", "y1", "y2"});
  Coeff one = P.one();
  rule(P, {"x2", "x1"}, {{-one, {"x1", "x2"}}});
  rule(P, {"y2", "y1"}, {{-one, {"y1", "y2"}}});
  rule(P, {"y1", "x1"}, {{h, {"x1", "y1"}}, {h, {"x2", "y1"}}, {h, {"x1", "y2"}}});
  rule(P, {"y1", "x2"}, {{h, {"x1", "y2"}}});
  rule(P, {"y2", "x1"}, {{h, {"x2", "y1"}}});
  rule(P, {"y2", "x2"}, {{-h, {"x2", "y1"}}, {-h, {"x1", "y2"}}, {h, {"x2", "y2"}}});
  return P;
}

Presentation build(const HpqParams& s) {
  nonzero(s.p, "p");
  nonzero(s.q, "q");
  Presentation P(s.p.ctx(), {"t", "x", "y"}, {1, 1, 1}, {"t", "x", "y"});
  rule(P, {"x", "t"}, {{s.p, {"t", "x"}}});
  rule(P, {"y", "t"}, {{s.p.inverse(), {"t", "y"}}});
  rule(P, {"y", "x"}, {{s.q, {"x", "y"}}, {P.one(), {"t"}}});
  return P;
}

Presentation build(const M2Params& s) {
  nonzero(s.alpha, "alpha");
  nonzero(s.beta, "beta");
  const auto &a = s.alpha, &b = s.beta;
  Presentation P(a.ctx(), {"X11", "X12", "X21", "X22"}, {1, 1, 1, 1}, {"X11", "X12", "X21", "X22"});
  rule(P, {"X12", "X11"}, {{a, {"X11", "X12"}}});
  rule(P, {"X21", "X11"}, {{b, {"X11", "X21"}}});
  rule(P, {"X21", "X12"}, {{b / a, {"X12", "X21"}}});
  rule(P, {"X22", "X11"}, {{P.one(), {"X11", "X22"}}, {b - a.inverse(), {"X12", "X21"}}});
  rule(P, {"X22", "X12"}, {{b, {"X12", "X22"}}});
  rule(P, {"X22", "X21"}, {{a, {"X21", "X22"}}});
  return P;
}

Presentation build(const UqB2Params& s) {
  nonzero(s.q, "q");
  const Coeff q2 = s.q.pow(2), qm2 = s.q.pow(-2);
  Presentation P(s.q.ctx(), {"z", "e3", "e1", "e2"}, {1, 1, 1, 1}, {"z", "e3", "e1", "e2"});
  Coeff one = P.one();
  rule(P, {"e3", "z"}, {{one, {"z", "e3"}}});
  rule(P, {"e1", "z"}, {{one, {"z", "e1"}}});
  rule(P, {"e2", "z"}, {{one, {"z", "e2"}}});
  rule(P, {"e1", "e3"}, {{qm2, {"e3", "e1"}}});
  rule(P, {"e2", "e1"}, {{qm2, {"e1", "e2"}}, {-qm2, {"e3"}}});
  rule(P, {"e2", "e3"}, {{q2, {"e3", "e2"}}, {one, {"z"}}});
  return P;
}

Presentation build_weyl(const WeylData& d, bool maltsiniotis) {
  check_weyl(d);
  const std::size_t n = d.q.size();
  Presentation P = weyl_skeleton(d.q[0].ctx(), n);
  const Coeff one = P.one();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Coeff& l = d.lambda[i][j];
      const std::string xi = idx("x", i), yi = idx("y", i), xj = idx("x", j), yj = idx("y", j);
      if (maltsiniotis) {
        rule(P, {xj, xi}, {{(d.q[i] * l).inverse(), {xi, xj}}});
        rule(P, {yj, xi}, {{l, {xi, yj}}});
        rule(P, {yj, yi}, {{l.inverse(), {yi, yj}}});
        rule(P, {xj, yi}, {{d.q[i] * l, {yi, xj}}});
      } else {
        rule(P, {xj, xi}, {{l.inverse(), {xi, xj}}});
        rule(P, {yj, xi}, {{l, {xi, yj}}});
        rule(P, {yj, yi}, {{l.inverse(), {yi, yj}}});
        rule(P, {xj, yi}, {{l, {yi, xj}}});
      }
    }
    std::vector<Term> rhs{{d.q[j], {idx("y", j), idx("x", j)}}, {one, {}}};
    if (maltsiniotis)
      for (std::size_t k = 0; k < j; ++k) rhs.push_back({d.q[k] - one, {idx("y", k), idx("x", k)}});
    rule(P, {idx("x", j), idx("y", j)}, rhs);
  }
  return P;
}

Presentation build(const WeylMaltParams& s) { return build_weyl(s.data, true); }
Presentation build(const WeylAJParams& s) { return build_weyl(s.data, false); }

Presentation build(const BiQuad3Params& s) {
  nonzero(s.q1, "q1");
  nonzero(s.q2, "q2");
  nonzero(s.q3, "q3");
  Presentation P(s.q1.ctx(), {"x1", "x2", "x3"}, {1, 1, 1}, {"x1", "x2", "x3"});
  const std::array<std::vector<std::string>, 3> lhs{{{"x2", "x1"}, {"x3", "x1"}, {"x3", "x2"}}};
  const std::array<std::vector<std::string>, 3> ord{{{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}}};
  const std::array<Coeff, 3> qs{s.q1, s.q2, s.q3};
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<Term> rhs{{qs[r], ord[r]}};
    for (std::size_t k = 0; k < 3; ++k)
      if (s.lin[r][k].valid()) rhs.push_back({s.lin[r][k], {idx("x", k)}});
    if (s.consts[r].valid()) rhs.push_back({s.consts[r], {}});
    rule(P, lhs[r], rhs);
  }
  return P;
}

Presentation build(const ThreeCyclicParams& s) {
  nonzero(s.q, "q");
  const Coeff q2 = s.q.pow(2), qm2 = s.q.pow(-2);
  Presentation P(s.q.ctx(), {"x", "y", "z"}, {1, 1, 1}, {"x", "y", "z"});
  rule(P, {"y", "x"}, {{qm2, {"x", "y"}}, {-qm2 * s.alpha, {}}});
  rule(P, {"z", "x"}, {{q2, {"x", "z"}}, {-q2 * s.beta, {}}});
  rule(P, {"z", "y"}, {{qm2, {"y", "z"}}, {-qm2 * s.gamma, {}}});
  return P;
}

Presentation build(const DownUpParams& s) {
  if (!s.beta.valid() || s.beta.is_zero()) throw Error(Errc::DownUpNotNoetherian, "beta = 0");
  Presentation P(s.alpha.ctx(), {"u", "d"}, {1, 1}, {"u", "d"});
  rule(P, {"d", "u", "u"}, {{s.alpha, {"u", "d", "u"}}, {s.beta, {"u", "u", "d"}}, {s.gamma, {"u"}}});
  rule(P, {"d", "d", "u"}, {{s.alpha, {"d", "u", "d"}}, {s.beta, {"u", "d", "d"}}, {s.gamma, {"d"}}});
  return P;
}

Presentation build(const BqfParams& s) {
  nonzero(s.q, "q");
  int deg = poly_degree(s.f);
  unsigned ww = static_cast<unsigned>(std::max(deg, 1));
  Presentation P(s.q.ctx(), {"v", "u", "w"}, {1, 1, ww}, {"v", "u", "w"});
  auto f_of = [&](const std::string& g) {
    std::vector<Term> out;
    for (int j = 0; j <= deg; ++j)
      if (!s.f[j].is_zero()) out.push_back({s.f[j], std::vector<std::string>(j, g)});
    return out;
  };
  rule(P, {"u", "v"}, {{s.q, {"v", "u"}}});
  std::vector<Term> wu{{s.q, {"u", "w"}}};
  for (auto& t : f_of("v")) wu.push_back(t);
  rule(P, {"w", "u"}, wu);
  std::vector<Term> wv{{s.q.inverse(), {"v", "w"}}};
  for (auto& t : f_of("u")) wv.push_back(t);
  rule(P, {"w", "v"}, wv);
  return P;
}

Presentation build(const QuantumPlaneParams& s) {
  nonzero(s.q, "q");
  Presentation P(s.q.ctx(), {"x", "y"}, {1, 1}, {"x", "y"});
  rule(P, {"y", "x"}, {{s.q, {"x", "y"}}});
  return P;
}

}  // namespace

Presentation build_family(const FamilySpec& spec) {
  Presentation P = std::visit([](const auto& s) { return build(s); }, spec);
  P.set_family(family_of(spec));
  auto rep = validate_orientation(P);
  if (!rep.ok) throw Error(Errc::OrientationFailure, rep.issues.front().reason);
  return P;
}

// ---------------------------------------------------------------------------
// parameters from strings

FamilySpec family_spec_from_params(Family f, const std::map<std::string, std::string>& params,
                                   const CtxPtr& ctx) {
  std::set<std::string> used;
  auto get = [&](const std::string& name, std::optional<long> fallback) -> Coeff {
    used.insert(name);
    auto it = params.find(name);
    if (it != params.end()) return parse_coeff(it->second, ctx);
    if (ctx->kind() == FieldKind::RatFunc && ctx->param_index(name)) return Coeff::param(ctx, name);
    if (fallback) return Coeff::from_int(ctx, *fallback);
    throw Error(Errc::UnassignedParameter, std::string(family_name(f)) + " needs parameter '" + name + "'");
  };
  auto weyl = [&]() {
    used.insert("n");
    auto it = params.find("n");
    std::size_t n = 0;
    if (it != params.end()) {
      n = std::stoul(it->second);
    } else {
      while (params.count("q" + std::to_string(n + 1)) ||
             (ctx->kind() == FieldKind::RatFunc && ctx->param_index("q" + std::to_string(n + 1))))
        ++n;
    }
    if (n == 0 || n > 8) throw Error(Errc::RangeError, "Weyl rank n must be in 1..8");
    WeylData d;
    for (std::size_t i = 0; i < n; ++i) d.q.push_back(get("q" + std::to_string(i + 1), std::nullopt));
    d.lambda.assign(n, std::vector<Coeff>(n, Coeff::one(ctx)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::string key = "l" + std::to_string(i + 1) + std::to_string(j + 1);
        Coeff l = get(key, 1);
        d.lambda[i][j] = l;
        d.lambda[j][i] = l.inverse();
      }
    return d;
  };
  FamilySpec spec = [&]() -> FamilySpec {
    switch (f) {
      case Family::Bh: return BhParams{get("h", std::nullopt)};
      case Family::Hpq: return HpqParams{get("p", std::nullopt), get("q", std::nullopt)};
      case Family::M2: return M2Params{get("alpha", std::nullopt), get("beta", std::nullopt)};
      case Family::UqB2: return UqB2Params{get("q", std::nullopt)};
      case Family::WeylMalt: return WeylMaltParams{weyl()};
      case Family::WeylAJ: return WeylAJParams{weyl()};
      case Family::BiQuad3: {
        BiQuad3Params b;
        b.q1 = get("q1", std::nullopt);
        b.q2 = get("q2", std::nullopt);
        b.q3 = get("q3", std::nullopt);
        const char* names[3][3] = {{"a", "b", "c"}, {"alpha", "beta", "gamma"}, {"lambda", "mu", "nu"}};
        for (int r = 0; r < 3; ++r)
          for (int k = 0; k < 3; ++k) b.lin[r][k] = get(names[r][k], 0);
        for (int r = 0; r < 3; ++r) b.consts[r] = get("b" + std::to_string(r + 1), 0);
        return b;
      }
      case Family::ThreeCyclic:
        return ThreeCyclicParams{get("q", std::nullopt), get("alpha", 0), get("beta", 0), get("gamma", 0)};
      case Family::DownUp: return DownUpParams{get("alpha", std::nullopt), get("beta", std::nullopt), get("gamma", 0)};
      case Family::Bqf: {
        BqfParams b;
        b.q = get("q", std::nullopt);
        used.insert("f");
        auto it = params.find("f");
        if (it == params.end()) throw Error(Errc::UnassignedParameter, "Bqf needs parameter 'f'");
        Presentation tp(ctx, {"t"}, {1}, {"t"});
        NCPoly fp = parse_element(it->second, tp);
        for (const auto& [w, c] : fp.terms()) {
          if (b.f.size() <= w.size()) b.f.resize(w.size() + 1, Coeff::zero(ctx));
          b.f[w.size()] = c;
        }
        if (b.f.empty()) b.f.push_back(Coeff::zero(ctx));
        return b;
      }
      case Family::QuantumPlane: return QuantumPlaneParams{get("q", std::nullopt)};
    }
    throw Error(Errc::FamilyMismatch, "unknown family");
  }();
  for (const auto& [k, v] : params)
    if (!used.count(k))
      throw Error(Errc::UnassignedParameter, "parameter '" + k + "' is not used by " + family_name(f));
  return spec;
}

}  // namespace orepi
