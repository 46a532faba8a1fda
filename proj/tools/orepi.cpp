// orepi: command-line front end. Every subcommand prints one JSON report
//   {"command": ..., "checks": [{"name","status","detail","witness"?}], "result"?, "summary", "elapsed_ms"}
// Exit codes: 0 all checks pass, 1 some check failed or errored, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "orepi/center.hpp"
#include "orepi/identities.hpp"
#include "orepi/json_io.hpp"
#include "orepi/matrep.hpp"
#include "orepi/pidecide.hpp"
#include "orepi/rewrite.hpp"

using nlohmann::json;
using namespace orepi;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::vector<std::string> argv) : argv_(std::move(argv)) {}

  void add(const std::string& name, bool pass, const std::string& detail, json witness = nullptr) {
    json c{{"name", name}, {"status", pass ? "pass" : "fail"}, {"detail", detail}};
    if (!witness.is_null()) c["witness"] = std::move(witness);
    checks_.push_back(std::move(c));
  }
  void error(const std::string& name, const std::string& detail) {
    checks_.push_back(json{{"name", name}, {"status", "error"}, {"detail", detail}});
  }
  void set_result(json r) { result_ = std::move(r); }

  int finish(std::chrono::steady_clock::time_point t0) const {
    int pass = 0, fail = 0, err = 0;
    for (const auto& c : checks_) {
      const auto s = c["status"].get<std::string>();
      (s == "pass" ? pass : s == "fail" ? fail : err)++;
    }
    json out;
    out["command"] = argv_;
    out["checks"] = checks_;
    if (!result_.is_null()) out["result"] = result_;
    out["summary"] = json{{"pass", pass}, {"fail", fail}, {"error", err}};
    out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << out.dump(2) << "\n";
    return fail + err == 0 ? 0 : 1;
  }

 private:
  std::vector<std::string> argv_;
  json checks_ = json::array();
  json result_;
};

struct Options {
  std::string family, field, params, file, lemma, element, caps, algebra = "M2", q_rep;
  std::vector<std::string> elements;
  std::map<std::string, std::string> shorthand;  // --q, --f, ...
  unsigned n_max = 8, degree = 0, n = 2, d = 4;
  bool candidates = false;
};

std::map<std::string, std::string> parse_pairs(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  // Split on commas outside parentheses.
  int depth = 0;
  std::string cur;
  auto flush = [&]() {
    if (cur.find_first_not_of(" ") == std::string::npos) {
      cur.clear();
      return;
    }
    auto eq = cur.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=expr, got '" + cur + "'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    out[trim(cur.substr(0, eq))] = trim(cur.substr(eq + 1));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0)
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

std::vector<std::string> default_params(Family f) {
  switch (f) {
    case Family::Bh: return {"h"};
    case Family::Hpq: return {"p", "q"};
    case Family::M2: return {"alpha", "beta"};
    case Family::UqB2: return {"q"};
    case Family::WeylMalt:
    case Family::WeylAJ: return {"q1", "q2", "l12"};
    case Family::BiQuad3: return {"q1", "q2", "q3"};
    case Family::ThreeCyclic: return {"q", "alpha", "beta", "gamma"};
    case Family::DownUp: return {"alpha", "beta", "gamma"};
    case Family::Bqf: return {"q"};
    case Family::QuantumPlane: return {"q"};
  }
  return {};
}

// Field when --field is absent: symbols in the parameter values make a
// rational-function field, zN alone a cyclotomic one, otherwise Q.
CtxPtr infer_field(Family f, const std::map<std::string, std::string>& params) {
  if (params.empty()) return FieldCtx::ratfunc(default_params(f));
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  static const std::regex zeta("z([0-9]+)");
  std::set<std::string> symbols;
  unsigned long level = 1;
  for (const auto& [k, v] : params) {
    if (k == "n") continue;
    for (std::sregex_iterator it(v.begin(), v.end(), ident), end; it != end; ++it) {
      const std::string s = it->str();
      std::smatch m;
      if (std::regex_match(s, m, zeta))
        level = lcm_ul(level, std::stoul(m[1]));
      else if (!(k == "f" && s == "t"))
        symbols.insert(s);
    }
  }
  if (!symbols.empty()) {
    if (level > 1) throw UsageError("mixing zN with symbols needs an explicit --field");
    return FieldCtx::ratfunc({symbols.begin(), symbols.end()});
  }
  if (level > 1) return FieldCtx::cyclotomic(static_cast<unsigned>(level));
  return FieldCtx::rational();
}

struct Target {
  std::optional<FamilySpec> spec;
  std::optional<Presentation> P;
};

Family require_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

FamilySpec spec_from(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  const Family f = require_family(o.family);
  auto params = parse_pairs(o.params);
  for (const auto& [k, v] : o.shorthand) params[k] = v;
  const CtxPtr ctx = o.field.empty() ? infer_field(f, params) : FieldCtx::parse(o.field);
  return family_spec_from_params(f, params, ctx);
}

Target target_from(const Options& o) {
  Target t;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read " + o.file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad JSON: ") + e.what());
    }
    t.P.emplace(presentation_from_json(j));
    return t;
  }
  t.spec = spec_from(o);
  t.P.emplace(build_family(*t.spec));
  return t;
}

json witness_json(const QPlaneWitness& w) {
  json j{{"family", family_name(w.family)},
         {"kind", w.kind == WitnessKind::Subalgebra ? "Subalgebra" : "Quotient"},
         {"a", w.a},
         {"b", w.b},
         {"param", w.param.to_string()}};
  if (w.shift.valid() && !w.shift.is_zero()) j["shift"] = w.shift.to_string();
  if (w.kind == WitnessKind::Quotient) {
    j["normal"] = w.normal;
    j["cofactor"] = w.cofactor;
  }
  return j;
}

json central_set_json(const Presentation& P, const CentralSet& cs) {
  json els = json::array();
  for (const auto& e : cs.elements)
    els.push_back(json{{"name", e.name}, {"element", P.to_string(e.element)}, {"condition", e.condition}});
  return json{{"elements", els}, {"caps", cs.caps}, {"spanning_claimed", cs.spanning_claimed}, {"note", cs.note}};
}

json spanning_json(const Presentation& P, const SpanningReport& r) {
  json j{{"spanned", r.spanned}, {"degree", r.degree}, {"target", r.target}, {"rank", r.rank}};
  if (r.first_missing) j["first_missing"] = P.word_string(*r.first_missing);
  return j;
}

// ---------------------------------------------------------------------------

void cmd_families(Report& rep) {
  json list = json::array();
  for (Family f : {Family::Bh, Family::Hpq, Family::M2, Family::UqB2, Family::WeylMalt, Family::WeylAJ,
                   Family::BiQuad3, Family::ThreeCyclic, Family::DownUp, Family::Bqf, Family::QuantumPlane}) {
    json lemmas = json::array();
    for (const auto& l : all_lemmas())
      if (l.family == f) lemmas.push_back(l.name);
    json entry{{"name", family_name(f)}, {"default_params", default_params(f)}, {"lemmas", lemmas}};
    if (f == Family::Bqf) entry["extra"] = "f = polynomial in t";
    list.push_back(entry);
  }
  rep.set_result(list);
}

void cmd_build(const Options& o, Report& rep) {
  Target t = target_from(o);
  auto orient = validate_orientation(*t.P);
  rep.add("orientation", orient.ok, orient.ok ? "every rule rewrites to smaller words" : orient.issues.front().reason);
  rep.set_result(presentation_to_json(*t.P));
}

void cmd_normalize(const Options& o, Report& rep) {
  Target t = target_from(o);
  if (o.element.empty()) throw UsageError("--element is required");
  NCPoly a = parse_element(o.element, *t.P);
  NCPoly nf = normal_form(*t.P, a);
  rep.add("normal_form", true, t.P->to_string(nf));
  rep.set_result(json{{"input", o.element}, {"normal_form", t.P->to_string(nf)}, {"terms", poly_to_json(*t.P, nf)}});
}

void cmd_identity_check(const Options& o, Report& rep) {
  FamilySpec spec = spec_from(o);
  std::vector<LemmaId> ids;
  if (!o.lemma.empty()) {
    auto id = lemma_from_name(o.lemma);
    if (!id) throw UsageError("unknown lemma '" + o.lemma + "'");
    ids.push_back(*id);
  } else {
    for (const auto& l : all_lemmas())
      if (l.family == family_of(spec)) ids.push_back(l.id);
  }
  const Presentation P = build_family(spec);
  for (LemmaId id : ids) {
    try {
      auto r = check_paper_identity(id, spec, o.n_max);
      for (const auto& c : r.checks)
        rep.add(std::string(lemma_info(id).name) + " n=" + std::to_string(c.n) + " " + c.label, c.pass,
                c.pass ? "exact" : "residual " + P.to_string(c.residual));
    } catch (const Error& e) {
      rep.error(lemma_info(id).name, e.what());
    }
  }
}

void cmd_central_check(const Options& o, Report& rep) {
  Target t = target_from(o);
  const Presentation& P = *t.P;
  std::vector<std::pair<std::string, NCPoly>> els;
  for (const auto& e : o.elements) els.push_back({e, parse_element(e, P)});
  if (o.candidates) {
    if (!t.spec) throw UsageError("--candidates needs --family");
    try {
      auto cs = central_candidates(*t.spec);
      for (const auto& e : cs.elements) els.push_back({e.name, e.element});
      rep.set_result(central_set_json(P, cs));
    } catch (const Error& e) {
      rep.error("central_candidates", e.what());
    }
  }
  if (els.empty() && !o.candidates) throw UsageError("give --element or --candidates");
  const auto conf = overlap_check(P);
  if (!conf.confluent) {
    rep.error("confluence", "presentation is not confluent");
    return;
  }
  for (const auto& [name, a] : els) {
    auto r = is_central(P, a, false);
    json w = nullptr;
    if (!r.central) w = json{{"generator", r.failing_generator}, {"residual", P.to_string(*r.residual)}};
    rep.add("central " + name, r.central, r.central ? "commutes with every generator" : "fails at " + r.failing_generator, w);
  }
}

void cmd_pi_decide(const Options& o, Report& rep) {
  FamilySpec spec = spec_from(o);
  PiVerdict v;
  try {
    v = pi_decide(spec);
  } catch (const Error& e) {
    rep.error("pi_decide", e.what());
    return;
  }
  const Presentation P = build_family(spec);
  json result{{"verdict", verdict_name(v.verdict)}, {"reason", v.reason}, {"detail", v.detail}};
  json wj = nullptr;
  bool ok = true;
  std::string detail = std::string(verdict_name(v.verdict)) + " (" + v.reason + ")";
  if (v.witness) {
    wj = witness_json(*v.witness);
    auto wr = verify_witness_report(spec, *v.witness);
    ok = wr.ok;
    if (!wr.ok) detail += "; witness: " + wr.detail;
    result["witness"] = wj;
  }
  if (v.centrals) result["centrals"] = central_set_json(P, *v.centrals);
  if (v.spanning) {
    result["spanning"] = spanning_json(P, *v.spanning);
    if (!v.spanning->spanned) {
      ok = false;
      detail += "; spanning check failed";
    }
  }
  rep.add("verdict", ok, detail, wj);
  rep.set_result(result);
}

void cmd_confluence(const Options& o, Report& rep) {
  Target t = target_from(o);
  const Presentation& P = *t.P;
  auto r = overlap_check(P);
  json pairs = json::array();
  for (const auto& cp : r.pairs) {
    const bool ok = cp.residual.is_zero();
    pairs.push_back(json{{"word", P.word_string(cp.word)}, {"rules", {cp.rule_a, cp.rule_b}}, {"containment", cp.containment},
                         {"resolved", ok}, {"residual", P.to_string(cp.residual)}});
  }
  std::string detail = std::to_string(r.pairs.size()) + " ambiguities";
  if (const auto* f = r.first_failure())
    detail = "ambiguity " + P.word_string(f->word) + " leaves residual " + P.to_string(f->residual);
  rep.add("confluence", r.confluent, detail);
  rep.set_result(json{{"confluent", r.confluent}, {"pairs", pairs}});
}

void cmd_spanning(const Options& o, Report& rep) {
  Target t = target_from(o);
  const Presentation& P = *t.P;
  std::vector<CentralElement> centrals;
  std::map<std::string, unsigned> caps;
  if (o.elements.empty()) {
    if (!t.spec) throw UsageError("give --element or --family for default candidates");
    CentralSet cs = central_candidates(*t.spec);
    centrals = cs.elements;
    caps = cs.caps;
  } else {
    for (const auto& e : o.elements) centrals.push_back({e, parse_element(e, P), "given"});
    caps = implied_caps(P, centrals);
  }
  if (!o.caps.empty()) {
    caps.clear();
    for (const auto& [g, v] : parse_pairs(o.caps)) caps[g] = static_cast<unsigned>(std::stoul(v));
  }
  const unsigned D = o.degree ? o.degree : default_spanning_degree(caps);
  auto r = spanning_check(P, centrals, caps, D);
  rep.add("spanning", r.spanned,
          "rank " + std::to_string(r.rank) + " of " + std::to_string(r.target) + " at degree " + std::to_string(D) +
              (r.first_missing ? ", first missing " + P.word_string(*r.first_missing) : ""));
  rep.set_result(spanning_json(P, r));
}

CtxPtr rep_field(const Options& o) {
  if (!o.field.empty()) return FieldCtx::parse(o.field);
  return o.n <= 2 ? FieldCtx::rational() : FieldCtx::cyclotomic(o.n);
}

MatAlgebra algebra_from(const Options& o) {
  if (o.algebra == "M2" || o.algebra == "Mn") {
    const CtxPtr ctx = o.field.empty() ? FieldCtx::rational() : FieldCtx::parse(o.field);
    return full_matrix_algebra(ctx, o.algebra == "M2" ? 2 : o.n);
  }
  if (o.algebra == "qplane") {
    const CtxPtr ctx = rep_field(o);
    const Coeff q = o.q_rep.empty() ? Coeff::zeta(ctx, o.n) : parse_coeff(o.q_rep, ctx);
    return quantum_plane_rep(o.n, q);
  }
  throw UsageError("--algebra must be M2, Mn or qplane");
}

void cmd_matrep(const Options& o, Report& rep) {
  const CtxPtr ctx = rep_field(o);
  const Coeff q = o.q_rep.empty() ? Coeff::zeta(ctx, o.n) : parse_coeff(o.q_rep, ctx);
  MatAlgebra alg = quantum_plane_rep(o.n, q);
  const Matrix& X = alg.generators[0].second;
  const Matrix& Y = alg.generators[1].second;
  rep.add("relation yx = q xy", Y * X == q * (X * Y), "n = " + std::to_string(o.n));
  auto mat_json = [](const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      json r = json::array();
      for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j).to_string());
      rows.push_back(r);
    }
    return rows;
  };
  rep.set_result(json{{"n", o.n}, {"q", q.to_string()}, {"x", mat_json(X)}, {"y", mat_json(Y)},
                      {"span_dim", alg.span_basis().size()}});
}

void cmd_identity_search(const Options& o, Report& rep) {
  MatAlgebra alg = algebra_from(o);
  IdentitySpace s = multilinear_identity_search(alg, o.d);
  const bool has_std = s.contains(standard_coefficients(alg.ctx, o.d));
  rep.add("identity_search", true,
          "degree " + std::to_string(o.d) + ": dimension " + std::to_string(s.basis.size()) +
              (has_std ? ", contains the standard polynomial" : ""));
  json basis = json::array();
  for (const auto& v : s.basis) {
    json row = json::array();
    for (const auto& c : v) row.push_back(c.to_string());
    basis.push_back(row);
  }
  rep.set_result(json{{"degree", o.d}, {"dimension", s.basis.size()}, {"contains_standard", has_std},
                      {"permutations", s.perms}, {"basis", basis}});
}

bool is_usage_error(Errc c) {
  return c == Errc::ParseError || c == Errc::UnassignedParameter || c == Errc::InvalidField ||
         c == Errc::UnknownLemma || c == Errc::InvalidPresentation || c == Errc::RangeError;
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Rewriting engine and PI deciders for families of noncommutative algebras"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1, 1);
  Options o;

  auto add_target = [&](CLI::App* sc) {
    sc->add_option("--family", o.family, "family name");
    sc->add_option("--field", o.field, "Q, cyclo:N, ratfunc:a,b or gf:p[:poly]");
    sc->add_option("--params", o.params, "comma-separated name=expr pairs");
    for (const char* k : {"q", "p", "h", "f", "alpha", "beta", "gamma"})
      sc->add_option_function<std::string>(std::string("--") + k, [&o, k](const std::string& v) { o.shorthand[k] = v; },
                                           std::string("parameter ") + k);
  };

  auto* families = app.add_subcommand("families", "list families, parameters and identities");
  auto* build = app.add_subcommand("build", "print the presentation of a family");
  add_target(build);
  build->add_option("--file", o.file, "presentation JSON");
  auto* normalize = app.add_subcommand("normalize", "normal form of an element");
  add_target(normalize);
  normalize->add_option("--file", o.file, "presentation JSON");
  normalize->add_option("--element", o.element, "element expression")->required();
  auto* idc = app.add_subcommand("identity-check", "check closed-form identities");
  add_target(idc);
  idc->add_option("--lemma", o.lemma, "identity name; all of the family when omitted");
  idc->add_option("--n-max", o.n_max, "largest exponent")->check(CLI::Range(1u, 64u));
  auto* cc = app.add_subcommand("central-check", "test elements for centrality");
  add_target(cc);
  cc->add_option("--file", o.file, "presentation JSON");
  cc->add_option("--element", o.elements, "element expression (repeatable)");
  cc->add_flag("--candidates", o.candidates, "also test the family's known central elements");
  auto* pid = app.add_subcommand("pi-decide", "decide the PI property");
  add_target(pid);
  auto* conf = app.add_subcommand("confluence", "resolve all ambiguities");
  add_target(conf);
  conf->add_option("--file", o.file, "presentation JSON");
  auto* span = app.add_subcommand("spanning", "finite-over-center spanning check");
  add_target(span);
  span->add_option("--file", o.file, "presentation JSON");
  span->add_option("--element", o.elements, "central element (repeatable)");
  span->add_option("--caps", o.caps, "generator=cap pairs");
  span->add_option("--degree", o.degree, "degree bound D");
  auto* mr = app.add_subcommand("matrep", "quantum plane matrix model");
  mr->add_option("--n", o.n, "order of q")->check(CLI::Range(1u, 12u));
  mr->add_option("--q", o.q_rep, "q; defaults to zN");
  mr->add_option("--field", o.field, "coefficient field");
  auto* ids = app.add_subcommand("identity-search", "multilinear identities of a matrix algebra");
  ids->add_option("--algebra", o.algebra, "M2, Mn or qplane");
  ids->add_option("--n", o.n, "matrix size or order of q")->check(CLI::Range(1u, 6u));
  ids->add_option("--q", o.q_rep, "q for qplane");
  ids->add_option("--field", o.field, "coefficient field");
  ids->add_option("--degree", o.d, "identity degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  Report rep(args);
  try {
    if (*families) cmd_families(rep);
    else if (*build) cmd_build(o, rep);
    else if (*normalize) cmd_normalize(o, rep);
    else if (*idc) cmd_identity_check(o, rep);
    else if (*cc) cmd_central_check(o, rep);
    else if (*pid) cmd_pi_decide(o, rep);
    else if (*conf) cmd_confluence(o, rep);
    else if (*span) cmd_spanning(o, rep);
    else if (*mr) cmd_matrep(o, rep);
    else if (*ids) cmd_identity_search(o, rep);
  } catch (const UsageError& e) {
    rep.error("usage", e.what());
    rep.finish(t0);
    return 2;
  } catch (const Error& e) {
    rep.error(errc_name(e.code()), e.what());
    const int rc = rep.finish(t0);
    return is_usage_error(e.code()) ? 2 : rc;
  }
  return rep.finish(t0);
}
