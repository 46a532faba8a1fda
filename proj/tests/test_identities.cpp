#include <gtest/gtest.h>

#include "orepi/errors.hpp"
#include "orepi/identities.hpp"
#include "orepi/rewrite.hpp"
#include "support.hpp"

using namespace orepi;
using orepi::testing::spec;

namespace {

struct Sym {
  CtxPtr ctx = FieldCtx::ratfunc({"p", "q"});
  Coeff p = Coeff::param(ctx, "p"), q = Coeff::param(ctx, "q"), one = Coeff::one(ctx);
  Coeff n(long k) const { return Coeff::from_int(ctx, k); }
};

}  // namespace

TEST(QNumbers, Examples) {
  Sym s;
  EXPECT_TRUE(q_number(0, s.q).is_zero());
  auto c3 = FieldCtx::cyclotomic(3);
  EXPECT_TRUE(q_number(3, Coeff::zeta(c3, 3)).is_zero());
  EXPECT_EQ(q_number(4, s.one), s.n(4));
  EXPECT_EQ(pq_number(1, s.p, s.q), s.one);
  auto c6 = FieldCtx::cyclotomic(6);
  EXPECT_TRUE(pq_number(6, Coeff::zeta(c6, 2), Coeff::zeta(c6, 3)).is_zero());
  // p = q^-1: every summand is q^(n-1).
  EXPECT_EQ(pq_number(3, s.q.inverse(), s.q), s.n(3) * s.q.pow(2));
  EXPECT_EQ(q_factorial(3, s.q), (s.one + s.q) * (s.one + s.q + s.q * s.q));
  EXPECT_EQ(gauss_binomial(2, 1, s.q), s.one + s.q);
  for (unsigned k = 0; k < 6; ++k) EXPECT_TRUE(gauss_binomial(k, 0, s.q).is_one());
}

TEST(QNumbers, ClosedFormAgreesWithSum) {
  Sym s;
  for (unsigned n = 0; n <= 8; ++n)
    EXPECT_EQ(pq_number(n, s.p, s.q), (s.q.pow(n) - s.p.pow(-static_cast<long>(n))) / (s.q - s.p.inverse()));
}

TEST(QNumbers, Recurrences) {
  Sym s;
  auto Rq = FieldCtx::ratfunc({"q"});
  const Coeff q = Coeff::param(Rq, "q"), one = Coeff::one(Rq);
  for (unsigned k = 1; k <= 8; ++k) {
    EXPECT_EQ(pq_number(k + 1, s.p, s.q), s.q.pow(k) + s.p.inverse() * pq_number(k, s.p, s.q));
    EXPECT_EQ(q_number(k + 1, q), one + q * q_number(k, q));
    EXPECT_EQ(uqb2_B(k + 1, q), q * q * uqb2_B(k, q) + q.pow(-2 * static_cast<long>(k)));
    EXPECT_EQ(uqb2_C(k + 1, q), q.pow(-2) * uqb2_B(k, q) + uqb2_C(k, q));
    EXPECT_EQ(cyc3_c(k + 1, q), q.pow(2 * k) + cyc3_c(k, q));
    EXPECT_EQ(cyc3_d(k + 1, q), q.pow(-2 * static_cast<long>(k)) + cyc3_d(k, q));
    EXPECT_EQ(uqb2_B(k, q), (q.pow(2 * k) - q.pow(-2 * static_cast<long>(k))) / (q * q - q.pow(-2)));
  }
  EXPECT_TRUE(uqb2_C(1, q).is_zero());
  EXPECT_EQ(uqb2_C(2, q), q.pow(-2));
}

TEST(QNumbers, Vanishing) {
  for (unsigned a : {2u, 3u, 4u, 6u})
    for (unsigned b : {2u, 3u, 5u}) {
      auto ctx = FieldCtx::cyclotomic(static_cast<unsigned>(a * b));
      const Coeff p = Coeff::zeta(ctx, a), q = Coeff::zeta(ctx, b);
      if ((p * q).is_one()) continue;
      const unsigned l = static_cast<unsigned>(lcm_ul(a, b));
      for (unsigned n = 1; n <= 2 * l; ++n)
        if (n % l == 0) EXPECT_TRUE(pq_number(n, p, q).is_zero()) << a << " " << b << " " << n;
    }
  for (unsigned m : {2u, 3u, 4u, 5u, 6u, 8u}) {
    auto ctx = FieldCtx::cyclotomic(m);
    const Coeff q = Coeff::zeta(ctx, m);
    for (unsigned k = 1; k <= 3 * m; ++k) EXPECT_EQ(q_number(k, q).is_zero(), k % m == 0) << m << " " << k;
  }
}

TEST(QNumbers, GaussBinomialThrowsWhenFactorialVanishes) {
  // [3]! vanishes at a cube root of unity; [4 choose 2] is still defined there.
  EXPECT_EQ(gauss_binomial(4, 2, Coeff::zeta(FieldCtx::cyclotomic(3), 3)), Coeff::from_int(FieldCtx::cyclotomic(3), 0));
  auto c3 = FieldCtx::cyclotomic(3);
  try {
    gauss_binomial(6, 3, Coeff::zeta(c3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::QFactorialVanishes);
  }
}

TEST(Oracle, Examples) {
  const auto H = spec("Hpq", {}, "ratfunc:p,q");
  const Presentation PH = build_family(H);
  auto inst = oracle_rhs(LemmaId::HYxn, H, PH, 1);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0].lhs, parse_element("y*x", PH));
  EXPECT_EQ(normal_form(PH, inst[0].rhs), parse_element("q*x*y + t", PH));

  const auto U = spec("UqB2", {}, "ratfunc:q");
  const Presentation PU = build_family(U);
  for (const auto& i : oracle_rhs(LemmaId::UqB2IV, U, PU, 2))
    EXPECT_EQ(normal_form(PU, i.lhs), normal_form(PU, i.rhs));
  EXPECT_THROW(oracle_rhs(LemmaId::UqB2IV, U, PU, 1), Error);

  const auto C = spec("ThreeCyclic", {}, "ratfunc:q,alpha,beta,gamma");
  const Presentation PC = build_family(C);
  auto c = oracle_rhs(LemmaId::Cyc3I, C, PC, 1);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(normal_form(PC, c[0].rhs), normal_form(PC, parse_element("q^2*y*x + alpha", PC)));
  EXPECT_EQ(normal_form(PC, c[0].lhs), normal_form(PC, parse_element("x*y", PC)));

  EXPECT_THROW(oracle_rhs(LemmaId::HYxn, U, PU, 1), Error);
}

TEST(Oracle, CheckExamples) {
  EXPECT_TRUE(check_paper_identity(LemmaId::HYxn, spec("Hpq", {}, "ratfunc:p,q"), 8).all_pass());
  EXPECT_TRUE(check_paper_identity(LemmaId::M2K1, spec("M2", {}, "ratfunc:alpha,beta"), 6).all_pass());
  EXPECT_TRUE(check_paper_identity(LemmaId::BqfWku, spec("Bqf", {{"f", "t^2"}}, "ratfunc:q"), 5).all_pass());
}

TEST(Oracle, DetectsAWrongCoefficient) {
  // The oracle is only useful if a perturbed right side fails.
  const auto H = spec("Hpq", {}, "ratfunc:p,q");
  const Presentation P = build_family(H);
  for (const auto& i : oracle_rhs(LemmaId::HYxn, H, P, 3)) {
    NCPoly wrong = i.rhs + parse_element("x^2*t", P);
    EXPECT_FALSE(normal_form(P, i.lhs - wrong).is_zero());
  }
}

TEST(Oracle, LemmaNames) {
  EXPECT_EQ(lemma_from_name("H.yxn"), LemmaId::HYxn);
  EXPECT_EQ(lemma_from_name("UqB2.iv"), LemmaId::UqB2IV);
  EXPECT_FALSE(lemma_from_name("H.nope").has_value());
  for (const auto& l : all_lemmas()) EXPECT_EQ(lemma_from_name(l.name), l.id);
}

TEST(Oracle, SpecializedInstances) {
  // The closed forms also hold at roots of unity, where several coefficients vanish.
  EXPECT_TRUE(check_paper_identity(LemmaId::HYxn, spec("Hpq", {{"p", "z2"}, {"q", "z3"}}, "cyclo:6"), 8).all_pass());
  EXPECT_TRUE(check_paper_identity(LemmaId::UqB2I, spec("UqB2", {{"q", "z5"}}, "cyclo:5"), 8).all_pass());
  EXPECT_TRUE(check_paper_identity(LemmaId::Cyc3II, spec("ThreeCyclic", {{"q", "z6"}, {"alpha", "1"}, {"beta", "2"}, {"gamma", "3"}}, "cyclo:6"), 8).all_pass());
}

TEST(BiQuad3, ConsistencyMatchesConfluence) {
  std::mt19937 rng(31);
  const CtxPtr Q = FieldCtx::rational();
  for (unsigned i = 0; i < 12; ++i) {
    const auto good = biquad3_random_consistent(Q, rng);
    EXPECT_TRUE(biquad3_consistent(good));
    EXPECT_TRUE(overlap_check(build_family(good)).confluent);
    const auto bad = biquad3_random_violation(Q, rng, i);
    EXPECT_FALSE(biquad3_consistent(bad));
    EXPECT_FALSE(overlap_check(build_family(bad)).confluent);
  }
}

TEST(BiQuad3, LambdaCondition) {
  const auto s = std::get<BiQuad3Params>(spec("BiQuad3", {{"q1", "2"}, {"q2", "3"}, {"q3", "5"}, {"lambda", "1"}}, "Q"));
  EXPECT_FALSE(biquad3_consistent(s));
  const auto t = std::get<BiQuad3Params>(spec("BiQuad3", {{"q1", "2"}, {"q2", "1/2"}, {"q3", "5"}, {"lambda", "1"}}, "Q"));
  EXPECT_EQ(biquad3_consistent(t), overlap_check(build_family(t)).confluent);
}

TEST(Normality, ThetaAndZ) {
  EXPECT_TRUE(check_paper_identity(LemmaId::HThetaRel, spec("Hpq", {}, "ratfunc:p,q"), 1).all_pass());
  EXPECT_TRUE(check_paper_identity(LemmaId::WeylZiNormal, spec("WeylMalt", {{"n", "2"}}, "ratfunc:q1,q2,l12"), 1).all_pass());
  EXPECT_TRUE(
      check_paper_identity(LemmaId::Cyc3ERel, spec("ThreeCyclic", {}, "ratfunc:q,alpha,beta,gamma"), 1).all_pass());
}
