#include <gtest/gtest.h>

#include <set>

#include "orepi/errors.hpp"
#include "orepi/json_io.hpp"
#include "orepi/rewrite.hpp"
#include "support.hpp"

using namespace orepi;
using orepi::testing::spec;

namespace {

std::set<std::string> lhs_words(const Presentation& P) {
  std::set<std::string> out;
  for (const auto& r : P.rules()) out.insert(P.word_string(r.lhs));
  return out;
}

}  // namespace

TEST(BuildFamily, HpqRules) {
  const Presentation P = build_family(spec("Hpq", {}, "ratfunc:p,q"));
  EXPECT_EQ(P.num_generators(), 3u);
  ASSERT_EQ(P.rules().size(), 3u);
  auto expect = [&](const char* lhs, const char* rhs) {
    EXPECT_EQ(normal_form(P, parse_element(lhs, P)), parse_element(rhs, P)) << lhs;
  };
  expect("x*t", "p*t*x");
  expect("y*t", "p^-1*t*y");
  expect("y*x", "q*x*y + t");
}

TEST(BuildFamily, M2AndDownUpShape) {
  const Presentation M = build_family(spec("M2", {}, "ratfunc:alpha,beta"));
  EXPECT_EQ(M.num_generators(), 4u);
  EXPECT_EQ(M.rules().size(), 6u);
  try {
    build_family(spec("DownUp", {{"beta", "0"}}, "ratfunc:alpha,gamma"));
    FAIL() << "expected DownUpNotNoetherian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DownUpNotNoetherian);
  }
}

TEST(BuildFamily, ZeroParameterRejected) {
  EXPECT_THROW(build_family(spec("QuantumPlane", {{"q", "0"}}, "Q")), Error);
}

TEST(BuildFamily, LeadingWordsAreTheInversions) {
  for (const auto& [name, s] : orepi::testing::hygiene_instances()) {
    SCOPED_TRACE(name);
    const Presentation P = build_family(s);
    const auto lhs = lhs_words(P);
    if (name == "DownUp") {
      EXPECT_EQ(lhs, (std::set<std::string>{"d*u^2", "d^2*u"}));
      continue;
    }
    std::set<std::string> inversions;
    for (Letter a = 0; a < P.num_generators(); ++a)
      for (Letter b = 0; b < a; ++b) inversions.insert(P.word_string(Word{static_cast<char>(a), static_cast<char>(b)}));
    EXPECT_EQ(lhs, inversions);
  }
}

TEST(BuildFamily, GeneratorOrder) {
  auto order = [](const Presentation& P) {
    std::vector<std::string> names;
    for (Letter l = 0; l < P.num_generators(); ++l) names.push_back(P.name(l));
    return names;
  };
  using V = std::vector<std::string>;
  EXPECT_EQ(order(build_family(spec("Bh", {}, "ratfunc:h"))), (V{"x1", "x2", "y1", "y2"}));
  EXPECT_EQ(order(build_family(spec("Hpq", {}, "ratfunc:p,q"))), (V{"t", "x", "y"}));
  EXPECT_EQ(order(build_family(spec("UqB2", {}, "ratfunc:q"))), (V{"z", "e3", "e1", "e2"}));
  EXPECT_EQ(order(build_family(spec("WeylMalt", {{"n", "2"}}, "ratfunc:q1,q2,l12"))), (V{"y1", "x1", "y2", "x2"}));
  EXPECT_EQ(order(build_family(spec("Bqf", {{"f", "t^3"}}, "ratfunc:q"))), (V{"v", "u", "w"}));
  const Presentation B = build_family(spec("Bqf", {{"f", "t^3"}}, "ratfunc:q"));
  EXPECT_EQ(B.order()->weight_of(B.word({"w"})), 3u);
}

TEST(BuildFamily, Deterministic) {
  for (const auto& [name, s] : orepi::testing::hygiene_instances())
    EXPECT_EQ(presentation_to_json(build_family(s)), presentation_to_json(build_family(s))) << name;
}

TEST(Orientation, Examples) {
  EXPECT_TRUE(validate_orientation(build_family(spec("QuantumPlane", {}, "ratfunc:q"))).ok);
  EXPECT_TRUE(validate_orientation(build_family(spec("Bqf", {{"f", "t^3 + t"}}, "ratfunc:q"))).ok);

  Presentation P(FieldCtx::rational(), {"x", "y"}, {1, 1}, {"x", "y"});
  P.add_rule(P.word({"x", "y"}), P.monomial(P.word({"y", "x", "x"})));
  auto r = validate_orientation(P);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(P.word_string(r.issues[0].word), "y*x^2");
  EXPECT_THROW(normal_form(P, P.gen("x")), Error);
}

TEST(Json, RoundTrip) {
  for (const auto& [name, s] : orepi::testing::hygiene_instances()) {
    const Presentation P = build_family(s);
    const auto j = presentation_to_json(P);
    const Presentation R = presentation_from_json(j);
    EXPECT_EQ(presentation_to_json(R), j) << name;
    EXPECT_EQ(R.rules().size(), P.rules().size());
  }
}

TEST(Json, FieldForms) {
  EXPECT_EQ(field_from_json("cyclo:6")->level(), 6u);
  auto j = field_to_json(*FieldCtx::parse("ratfunc:p,q"));
  EXPECT_TRUE(field_from_json(j)->same_as(*FieldCtx::parse("ratfunc:p,q")));
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(presentation_from_json(nlohmann::json{{"generators", {"x"}}}), Error);
  auto j = presentation_to_json(build_family(spec("QuantumPlane", {}, "ratfunc:q")));
  j["rules"][0]["lhs"] = {"x", "nope"};
  EXPECT_THROW(presentation_from_json(j), Error);
}

TEST(Params, UnusedAndMissing) {
  try {
    spec("Hpq", {{"p", "2"}, {"q", "3"}, {"r", "1"}}, "Q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnassignedParameter);
  }
  try {
    spec("Hpq", {{"p", "2"}}, "Q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnassignedParameter);
  }
}

TEST(Element, ParseAndPrintRoundTrip) {
  std::mt19937 rng(5);
  for (const auto& [name, s] : orepi::testing::hygiene_instances()) {
    const Presentation P = build_family(s);
    for (int i = 0; i < 50; ++i) {
      NCPoly a = normal_form(P, orepi::testing::random_formal(P, rng));
      EXPECT_EQ(normal_form(P, parse_element(P.to_string(a), P)), a) << name << ": " << P.to_string(a);
    }
  }
}
