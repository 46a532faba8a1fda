#include "orepi/json_io.hpp"

namespace orepi {

using nlohmann::json;

json field_to_json(const FieldCtx& ctx) {
  switch (ctx.kind()) {
    case FieldKind::Rational: return json{{"kind", "Q"}};
    case FieldKind::Cyclotomic: return json{{"kind", "cyclo"}, {"level", ctx.level()}};
    case FieldKind::RatFunc: return json{{"kind", "ratfunc"}, {"params", ctx.params()}};
    case FieldKind::Galois: return json{{"kind", "gf"}, {"p", ctx.prime()}, {"modulus", ctx.modulus()}};
  }
  return json{};
}

CtxPtr field_from_json(const json& j) {
  try {
    if (j.is_string()) return FieldCtx::parse(j.get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldCtx::rational();
    if (kind == "cyclo") return FieldCtx::cyclotomic(j.at("level").get<unsigned>());
    if (kind == "ratfunc") return FieldCtx::ratfunc(j.at("params").get<std::vector<std::string>>());
    if (kind == "gf") {
      std::vector<std::uint32_t> mod{0, 1};
      if (j.contains("modulus")) mod = j.at("modulus").get<std::vector<std::uint32_t>>();
      return FieldCtx::galois(j.at("p").get<unsigned>(), mod);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidField, e.what());
  }
  throw Error(Errc::InvalidField, "unknown field kind");
}

json poly_to_json(const Presentation& p, const NCPoly& a) {
  json terms = json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    terms.push_back(json{{"coeff", it->second.to_string()}, {"word", p.word_names(it->first)}});
  return terms;
}

NCPoly poly_from_json(const Presentation& p, const json& j) {
  NCPoly out = p.zero();
  try {
    for (const auto& t : j) {
      Coeff c = t.contains("coeff") ? parse_coeff(t.at("coeff").is_string() ? t.at("coeff").get<std::string>()
                                                                              : t.at("coeff").dump(),
                                                  p.ctx())
                                    : p.one();
      out.add_term(p.word(t.at("word").get<std::vector<std::string>>()), c);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidPresentation, e.what());
  }
  return out;
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["field"] = field_to_json(*p.ctx());
  if (p.family()) j["family"] = family_name(*p.family());
  std::vector<std::string> gens, prec;
  std::vector<unsigned> weights;
  for (Letter l : p.display_order()) {
    gens.push_back(p.name(l));
    weights.push_back(p.order()->weight[l]);
  }
  for (std::size_t i = 0; i < p.num_generators(); ++i) prec.push_back(p.name(static_cast<Letter>(i)));
  j["generators"] = gens;
  j["weights"] = weights;
  j["precedence"] = prec;
  json rules = json::array();
  for (const auto& r : p.rules()) rules.push_back(json{{"lhs", p.word_names(r.lhs)}, {"rhs", poly_to_json(p, r.rhs)}});
  j["rules"] = rules;
  return j;
}

Presentation presentation_from_json(const json& j) {
  try {
    CtxPtr ctx = j.contains("field") ? field_from_json(j.at("field")) : FieldCtx::rational();
    auto gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<unsigned> weights(gens.size(), 1);
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<unsigned>>();
    std::vector<std::string> prec = gens;
    if (j.contains("precedence")) prec = j.at("precedence").get<std::vector<std::string>>();
    Presentation p(ctx, gens, weights, prec);
    if (j.contains("family"))
      if (auto f = family_from_name(j.at("family").get<std::string>())) p.set_family(*f);
    for (const auto& r : j.at("rules")) {
      NCPoly rhs = poly_from_json(p, r.at("rhs"));
      p.add_rule(p.word(r.at("lhs").get<std::vector<std::string>>()), std::move(rhs));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidPresentation, e.what());
  }
}

}  // namespace orepi
