#include <gtest/gtest.h>

#include "orepi/center.hpp"
#include "orepi/errors.hpp"
#include "orepi/rewrite.hpp"
#include "support.hpp"

using namespace orepi;
using orepi::testing::spec;

namespace {

std::vector<std::string> names(const CentralSet& cs) {
  std::vector<std::string> out;
  for (const auto& e : cs.elements) out.push_back(e.name);
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::ParseError;
}

}  // namespace

TEST(IsCentral, Examples) {
  const Presentation U = build_family(spec("UqB2", {}, "ratfunc:q"));
  EXPECT_TRUE(is_central(U, U.gen("z")).central);

  const Presentation H = build_family(spec("Hpq", {}, "ratfunc:p,q"));
  auto r = is_central(H, H.gen("t"));
  EXPECT_FALSE(r.central);
  EXPECT_EQ(r.failing_generator, "x");
  EXPECT_EQ(*r.residual, normal_form(H, parse_element("(p^-1 - 1)*x*t", H)));

  const Presentation H6 = build_family(spec("Hpq", {{"p", "z2"}, {"q", "z3"}}, "cyclo:6"));
  EXPECT_TRUE(is_central(H6, parse_element("x^6", H6)).central);
  EXPECT_FALSE(is_central(H6, parse_element("x^3", H6)).central);
}

TEST(IsCentral, RequiresConfluence) {
  const Presentation B = build_family(spec("BiQuad3", {{"q1", "2"}, {"q2", "3"}, {"q3", "5"}, {"lambda", "1"}}, "Q"));
  EXPECT_EQ(code_of([&] { is_central(B, B.gen("x1")); }), Errc::NonConfluentPresentation);
}

TEST(Candidates, Examples) {
  using V = std::vector<std::string>;
  EXPECT_EQ(names(central_candidates(spec("UqB2", {{"q", "z5"}}, "cyclo:5"))), (V{"z", "e1^5", "e2^5", "e3^5"}));
  EXPECT_EQ(names(central_candidates(spec("M2", {{"alpha", "z3"}, {"beta", "z3"}}, "cyclo:3"))),
            (V{"X11^3", "X12^3", "X21^3", "X22^3"}));
  EXPECT_EQ(names(central_candidates(spec("Bqf", {{"f", "t"}, {"q", "z3"}}, "cyclo:3"))), (V{"u^3", "v^3"}));
  const auto gy = names(central_candidates(spec("Bqf", {{"f", "t^3"}, {"q", "z3"}}, "cyclo:3")));
  for (const char* n : {"f(u)", "f(v)", "w^3"}) EXPECT_NE(std::find(gy.begin(), gy.end(), n), gy.end()) << n;
}

TEST(Candidates, AllCentral) {
  const std::vector<FamilySpec> cases = {
      spec("UqB2", {{"q", "z5"}}, "cyclo:5"),
      spec("UqB2", {{"q", "z6"}}, "cyclo:6"),
      spec("M2", {{"alpha", "z3"}, {"beta", "z4"}}, "cyclo:12"),
      spec("ThreeCyclic", {{"q", "z6"}, {"alpha", "1"}, {"beta", "-2"}, {"gamma", "5"}}, "cyclo:6"),
      spec("Bh", {{"h", "z3"}}, "cyclo:3"),
      spec("Hpq", {{"p", "z3"}, {"q", "z4"}}, "cyclo:12"),
      spec("WeylMalt", {{"n", "2"}, {"q1", "-1"}, {"q2", "z3"}, {"l12", "z4"}}, "cyclo:12"),
      spec("WeylAJ", {{"n", "2"}, {"q1", "-1"}, {"q2", "z3"}, {"l12", "-1"}}, "cyclo:6"),
      spec("Bqf", {{"f", "t + 3*t^4"}, {"q", "z3"}}, "cyclo:3"),
      spec("QuantumPlane", {{"q", "z5"}}, "cyclo:5"),
  };
  for (const auto& s : cases) {
    const Presentation P = build_family(s);
    for (const auto& e : central_candidates(s).elements)
      EXPECT_TRUE(is_central(P, e.element).central) << family_name(family_of(s)) << " " << e.name;
  }
}

TEST(Candidates, ProductsAndSumsStayCentral) {
  const auto s = spec("UqB2", {{"q", "z5"}}, "cyclo:5");
  const Presentation P = build_family(s);
  const auto cs = central_candidates(s);
  for (std::size_t i = 0; i < cs.elements.size(); ++i)
    for (std::size_t j = i; j < cs.elements.size(); ++j) {
      const NCPoly& a = cs.elements[i].element;
      const NCPoly& b = cs.elements[j].element;
      EXPECT_TRUE(is_central(P, multiply(P, a, b), false).central);
      EXPECT_TRUE(is_central(P, a + b * P.num(3), false).central);
    }
}

TEST(Candidates, Hypotheses) {
  EXPECT_EQ(code_of([] { central_candidates(spec("UqB2", {{"q", "z4"}}, "cyclo:4")); }), Errc::HypothesisNotMet);
  EXPECT_EQ(code_of([] { central_candidates(spec("UqB2", {}, "ratfunc:q")); }), Errc::HypothesisNotMet);
  EXPECT_EQ(code_of([] { central_candidates(spec("Bqf", {{"f", "t^2"}, {"q", "z3"}}, "cyclo:3")); }),
            Errc::HypothesisNotMet);
  EXPECT_EQ(code_of([] { central_candidates(spec("Bqf", {{"f", "t"}, {"q", "-1"}}, "gf:3")); }),
            Errc::HypothesisNotMet);
}

TEST(Candidates, UqB2SmallOrders) {
  // Below order 5 only some powers are central; record which.
  for (unsigned l : {3u, 4u}) {
    const Presentation P = build_family(spec("UqB2", {{"q", "z" + std::to_string(l)}}, "cyclo:" + std::to_string(l)));
    auto central = [&](const char* g) {
      return is_central(P, P.monomial(P.word(std::vector<std::string>(l, g))), false).central;
    };
    EXPECT_TRUE(central("e3"));
    EXPECT_EQ(central("e1"), l == 3);
    EXPECT_EQ(central("e2"), l == 3);
  }
}

TEST(CharP, PowersCentralWhenOrderDoesNotDivide) {
  // GF(5), q = 2 of order 4; GF(7), q = 2 of order 3.
  struct Case {
    const char* field;
    const char* f;
    unsigned n;
  };
  for (const Case c : {Case{"gf:5", "t", 4}, Case{"gf:5", "t^2 + 3", 4}, Case{"gf:7", "t + t^3", 3}}) {
    const auto s = spec("Bqf", {{"f", c.f}, {"q", "2"}}, c.field);
    const Presentation P = build_family(s);
    const auto cs = central_candidates(s);
    ASSERT_EQ(cs.elements.size(), 2u) << c.field << " " << c.f;
    EXPECT_EQ(cs.elements[0].element, P.monomial(P.word(std::vector<std::string>(c.n, "u"))));
    EXPECT_EQ(cs.elements[1].element, P.monomial(P.word(std::vector<std::string>(c.n, "v"))));
    for (const auto& e : cs.elements) EXPECT_TRUE(is_central(P, e.element).central);
  }
}

TEST(CharP, ResidualWhenOrderDividesJPlusOne) {
  // f = t, q = -1 over GF(3): n = 2 divides j + 1 = 2, and w u^2 - u^2 w = 2 v u.
  const Presentation P = build_family(spec("Bqf", {{"f", "t"}, {"q", "-1"}}, "gf:3"));
  auto r = is_central(P, parse_element("u^2", P));
  EXPECT_FALSE(r.central);
  EXPECT_EQ(r.failing_generator, "w");
  EXPECT_FALSE(r.residual->is_zero());
}

TEST(CentralSearch, FindsKnownElements) {
  const Presentation P = build_family(spec("QuantumPlane", {{"q", "z3"}}, "cyclo:3"));
  auto basis = central_elements_upto(P, 3);
  // 1, x^3, y^3.
  EXPECT_EQ(basis.size(), 3u);
  for (const auto& c : basis) EXPECT_TRUE(is_central(P, c).central);
}

TEST(Automorphism, OrderExamples) {
  const CtxPtr Q = FieldCtx::rational();
  auto n = [&](long k) { return Coeff::from_int(Q, k); };
  auto a = gwa_auto_order(n(2), n(-1), n(1));
  EXPECT_FALSE(a.finite);
  EXPECT_EQ(a.tag, OrderCase::RepeatedRoot1);
  auto b = gwa_auto_order(n(0), n(1), n(0));
  EXPECT_TRUE(b.finite);
  EXPECT_EQ(b.m, 2u);
  auto c = gwa_auto_order(n(-2), n(-1), n(0));
  EXPECT_FALSE(c.finite);
  EXPECT_EQ(c.tag, OrderCase::RepeatedRootJordanBlock);
  EXPECT_EQ(code_of([&] { gwa_auto_order(n(1), n(0), n(0)); }), Errc::BetaZero);
  // t^2 - t - 1 has irrational roots.
  EXPECT_EQ(code_of([&] { gwa_auto_order(n(1), n(1), n(0)); }), Errc::RootsRequired);
}

TEST(Automorphism, FiniteOrderIsExact) {
  const CtxPtr C = FieldCtx::cyclotomic(12);
  const Coeff one = Coeff::one(C);
  std::vector<std::pair<Coeff, Coeff>> roots;
  for (unsigned a : {1u, 2u, 3u, 4u, 6u, 12u})
    for (unsigned b : {2u, 3u, 4u, 6u})
      if (a != b) roots.push_back({Coeff::zeta(C, a), Coeff::zeta(C, b)});
  for (const auto& [l, m] : roots) {
    const Coeff alpha = l + m, beta = -(l * m);
    for (const Coeff& gamma : {Coeff::zero(C), one}) {
      const auto o = gwa_auto_order(alpha, beta, gamma, std::make_pair(l, m));
      if (!o.finite) {
        EXPECT_TRUE(l.is_one() && !gamma.is_zero());
        continue;
      }
      const Matrix M = AffineAuto::downup(alpha, beta, gamma).matrix();
      const Matrix I = Matrix::identity(C, 3);
      Matrix pw = I;
      for (unsigned long k = 1; k <= o.m; ++k) {
        pw = pw * M;
        if (k < o.m && o.m % k == 0) EXPECT_FALSE(pw == I) << k;
      }
      EXPECT_TRUE(pw == I);
    }
  }
}

TEST(Automorphism, FixedPolynomials) {
  const CtxPtr Q = FieldCtx::rational();
  const Coeff one = Coeff::one(Q), zero = Coeff::zero(Q);
  AffineAuto swap{{{{zero, one}, {one, zero}}}, {zero, zero}};
  auto fixed = fixed_polynomials(swap, 1);
  EXPECT_EQ(fixed.size(), 2u);
  for (const auto& f : fixed) {
    EXPECT_EQ(swap.apply(f), f);
    if (f.count({1, 0})) EXPECT_EQ(f.at({1, 0}), f.at({0, 1}));
  }

  // alpha + beta = 1 with mu = -beta = 2 not a root of unity: beta x + y is fixed.
  const AffineAuto phi = AffineAuto::downup(Coeff::from_int(Q, 3), Coeff::from_int(Q, -2), zero);
  bool found = false;
  for (const auto& f : fixed_polynomials(phi, 1)) {
    EXPECT_EQ(phi.apply(f), f);
    if (f.count({0, 1}) && f.count({1, 0})) found = found || f.at({1, 0}) == Coeff::from_int(Q, -2) * f.at({0, 1});
  }
  EXPECT_TRUE(found);

  const AffineAuto sl2 = AffineAuto::downup(Coeff::from_int(Q, 2), Coeff::from_int(Q, -1), one);
  bool quadratic = false;
  for (const auto& f : fixed_polynomials(sl2, 2)) {
    EXPECT_EQ(sl2.apply(f), f);
    for (const auto& [m, c] : f) quadratic = quadratic || m.first + m.second == 2;
  }
  EXPECT_TRUE(quadratic);
}

TEST(DownUp, GeneratorsAreCentral) {
  const std::vector<FamilySpec> cases = {
      spec("DownUp", {{"alpha", "0"}, {"beta", "1"}, {"gamma", "0"}}, "Q"),
      spec("DownUp", {{"alpha", "0"}, {"beta", "1"}, {"gamma", "3"}}, "Q"),
      spec("DownUp", {{"alpha", "2"}, {"beta", "-1"}, {"gamma", "0"}}, "Q"),
      spec("DownUp", {{"alpha", "2"}, {"beta", "-1"}, {"gamma", "1"}}, "Q"),
      spec("DownUp", {{"alpha", "-1"}, {"beta", "-1"}, {"gamma", "2"}}, "cyclo:3"),
      spec("DownUp", {{"alpha", "z3 + z4"}, {"beta", "-z3*z4"}, {"gamma", "1"}}, "cyclo:12"),
  };
  for (const auto& s : cases) {
    const auto& d = std::get<DownUpParams>(s);
    const Presentation P = build_family(s);
    const auto cs = downup_center_generators(d);
    EXPECT_FALSE(cs.elements.empty());
    for (const auto& e : cs.elements)
      EXPECT_TRUE(is_central(P, e.element).central) << d.alpha.to_string() << " " << d.beta.to_string() << " " << e.name;
  }
}

TEST(DownUp, LiteralOmegaIsNotCentral) {
  // lambda = 1, mu = z3, gamma = 1: (2(du - ud))^3 without the gamma shift is not central.
  const auto s = spec("DownUp", {{"alpha", "1 + z3"}, {"beta", "-z3"}, {"gamma", "1"}}, "cyclo:3");
  const Presentation P = build_family(s);
  EXPECT_FALSE(is_central(P, power(P, parse_element("2*(d*u - u*d)", P), 3)).central);
}

TEST(DownUp, InfiniteOrderNeverSpans) {
  // phi of infinite order: the center is too small for any capped residual set to span.
  for (const auto& s : {spec("DownUp", {{"alpha", "1"}, {"beta", "2"}, {"gamma", "0"}}, "Q"),
                        spec("DownUp", {{"alpha", "2"}, {"beta", "-1"}, {"gamma", "0"}}, "Q"),
                        spec("DownUp", {{"alpha", "0"}, {"beta", "1"}, {"gamma", "1"}}, "Q")}) {
    const Presentation P = build_family(s);
    std::vector<CentralElement> cs;
    for (const auto& c : central_elements_upto(P, 6))
      if (!(c.size() == 1 && c.leading_word().empty())) cs.push_back({"c", c, ""});
    for (unsigned cu = 1; cu <= 4; ++cu)
      for (unsigned cd = 1; cd <= 4; ++cd)
        for (unsigned D = 4; D <= 6; ++D)
          EXPECT_FALSE(spanning_check(P, cs, {{"u", cu}, {"d", cd}}, D).spanned) << cu << " " << cd << " " << D;
  }
}

TEST(Spanning, Examples) {
  const auto H = spec("Hpq", {{"p", "z2"}, {"q", "z3"}}, "cyclo:6");
  const Presentation P = build_family(H);
  auto cs = central_candidates(H);
  auto r = spanning_check(P, cs.elements, {{"x", 6}, {"y", 6}, {"t", 2}}, 8);
  EXPECT_TRUE(r.spanned);
  EXPECT_EQ(r.rank, r.target);

  const Presentation Q = build_family(spec("QuantumPlane", {}, "ratfunc:q"));
  auto q = spanning_check(Q, {}, {{"x", 1}, {"y", 1}}, 2);
  EXPECT_FALSE(q.spanned);
  ASSERT_TRUE(q.first_missing.has_value());

  const auto B = spec("Bh", {{"h", "z2"}}, "Q");
  const Presentation PB = build_family(B);
  auto cb = central_candidates(B);
  EXPECT_TRUE(spanning_check(PB, cb.elements, cb.caps, 6).spanned);
}

TEST(Spanning, TooFewCentralsFail) {
  const auto H = spec("Hpq", {{"p", "z2"}, {"q", "z3"}}, "cyclo:6");
  const Presentation P = build_family(H);
  auto cs = central_candidates(H);
  cs.elements.pop_back();  // drop t^2
  EXPECT_FALSE(spanning_check(P, cs.elements, {{"x", 6}, {"y", 6}, {"t", 2}}, 8).spanned);
}
