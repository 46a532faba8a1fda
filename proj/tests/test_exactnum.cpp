#include <gtest/gtest.h>

#include <random>

#include "orepi/errors.hpp"
#include "orepi/exactnum.hpp"

using namespace orepi;

namespace {

Coeff num(const CtxPtr& c, long k) { return Coeff::from_int(c, k); }

Coeff random_element(const CtxPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  switch (ctx->kind()) {
    case FieldKind::Rational: {
      long den = 0;
      while (den == 0) den = d(rng);
      return num(ctx, d(rng)) / num(ctx, den);
    }
    case FieldKind::Cyclotomic: {
      Coeff a = Coeff::zero(ctx), z = Coeff::zeta(ctx, ctx->level());
      for (long i = 0; i < 3; ++i) a += num(ctx, d(rng)) * z.pow(i);
      return a;
    }
    case FieldKind::RatFunc: {
      Coeff a = num(ctx, d(rng)), b = num(ctx, 1 + rng() % 3);
      for (const auto& p : ctx->params()) {
        a += num(ctx, d(rng)) * Coeff::param(ctx, p);
        b += num(ctx, rng() % 2) * Coeff::param(ctx, p).pow(2);
      }
      return a / b;
    }
    case FieldKind::Galois: {
      Coeff a = num(ctx, d(rng)), g = Coeff::galois_generator(ctx);
      return a + num(ctx, d(rng)) * g;
    }
  }
  return Coeff::zero(ctx);
}

}  // namespace

TEST(Field, Examples) {
  auto c4 = FieldCtx::cyclotomic(4);
  auto z4 = Coeff::zeta(c4, 4);
  EXPECT_EQ(z4 * z4, num(c4, -1));

  auto R = FieldCtx::ratfunc({"q"});
  auto q = Coeff::param(R, "q"), one = Coeff::one(R);
  EXPECT_EQ((q * q - one) / (q - one), q + one);

  auto Q = FieldCtx::rational();
  EXPECT_EQ((num(Q, 2) / num(Q, 3)).inverse(), num(Q, 3) / num(Q, 2));
}

TEST(Field, DivisionByZeroThrows) {
  auto Q = FieldCtx::rational();
  EXPECT_THROW(Coeff::zero(Q).inverse(), Error);
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (const char* spec : {"Q", "cyclo:6", "cyclo:5", "ratfunc:p,q", "gf:5", "gf:3:x^2+1"}) {
    SCOPED_TRACE(spec);
    auto ctx = FieldCtx::parse(spec);
    for (int i = 0; i < 1000; ++i) {
      Coeff a = random_element(ctx, rng), b = random_element(ctx, rng), c = random_element(ctx, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + (-a), Coeff::zero(ctx));
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Field, ParseAndPrintRoundTrip) {
  std::mt19937 rng(11);
  for (const char* spec : {"Q", "cyclo:12", "ratfunc:alpha,beta", "gf:7", "gf:2:x^3+x+1"}) {
    auto ctx = FieldCtx::parse(spec);
    for (int i = 0; i < 100; ++i) {
      Coeff a = random_element(ctx, rng);
      ASSERT_EQ(parse_coeff(a.to_string(), ctx), a) << spec << " " << a.to_string();
    }
  }
}

TEST(Field, GrammarExamples) {
  auto R = FieldCtx::ratfunc({"q"});
  EXPECT_EQ(parse_coeff("(q^2-1)/(q+1)", R), Coeff::param(R, "q") - Coeff::one(R));
  auto c5 = FieldCtx::cyclotomic(5);
  EXPECT_EQ(parse_coeff("z5^2", c5), Coeff::zeta(c5, 5).pow(2));
  EXPECT_EQ(parse_coeff(" - 1 ", FieldCtx::rational()), num(FieldCtx::rational(), -1));
  EXPECT_THROW(parse_coeff("q +", R), Error);
  EXPECT_THROW(FieldCtx::parse("gf:4"), Error);
}

TEST(RootOfUnity, Examples) {
  auto c6 = FieldCtx::cyclotomic(6);
  EXPECT_EQ(root_of_unity_order(Coeff::zeta(c6, 6).pow(3)), 2u);
  EXPECT_FALSE(root_of_unity_order(num(FieldCtx::rational(), 2)).has_value());
  auto c3 = FieldCtx::cyclotomic(3);
  EXPECT_EQ(root_of_unity_order(-Coeff::zeta(c3, 3)), 6u);
  EXPECT_FALSE(root_of_unity_order(Coeff::param(FieldCtx::ratfunc({"q"}), "q")).has_value());
  EXPECT_EQ(root_of_unity_order(num(FieldCtx::parse("gf:7"), 3)), 6u);
  EXPECT_THROW(root_of_unity_order(Coeff::zero(c3)), Error);
}

TEST(RootOfUnity, OrderIsMinimal) {
  for (unsigned level : {4u, 5u, 6u, 8u, 9u, 12u}) {
    auto ctx = FieldCtx::cyclotomic(level);
    auto z = Coeff::zeta(ctx, level);
    for (long k = 0; k < 2 * static_cast<long>(level); ++k) {
      for (Coeff a : {z.pow(k), -z.pow(k), z.pow(k) + Coeff::one(ctx)}) {
        if (a.is_zero()) continue;
        auto m = root_of_unity_order(a);
        if (!m) {
          // Roots of unity in Q(zeta_N) have order dividing 2N.
          EXPECT_FALSE(a.pow(2 * level).is_one());
          continue;
        }
        EXPECT_TRUE(a.pow(static_cast<long>(*m)).is_one());
        for (unsigned long d : divisors(*m))
          if (d < *m) EXPECT_FALSE(a.pow(static_cast<long>(d)).is_one());
      }
    }
  }
}

TEST(Specialize, Examples) {
  auto R = FieldCtx::ratfunc({"p", "q"});
  auto p = Coeff::param(R, "p"), q = Coeff::param(R, "q"), one = Coeff::one(R);
  auto c3 = FieldCtx::cyclotomic(3);
  auto z = Coeff::zeta(c3, 3);
  EXPECT_EQ(specialize((q * q - one) / (q - one), {{"q", z}, {"p", Coeff::one(c3)}}, c3), z + Coeff::one(c3));
  auto Q = FieldCtx::rational();
  const auto Rq = FieldCtx::ratfunc({"q"});
  EXPECT_EQ(specialize(Coeff::param(Rq, "q"), {{"q", num(Q, 2)}}, Q), num(Q, 2));
  try {
    specialize(one / (q - p.inverse()), {{"q", z}, {"p", z.inverse()}}, c3);
    FAIL() << "expected DenominatorVanishes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DenominatorVanishes);
  }
  try {
    specialize(q, {}, c3);
    FAIL() << "expected UnassignedParameter";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnassignedParameter);
  }
}

TEST(Specialize, IsAHomomorphism) {
  std::mt19937 rng(3);
  auto R = FieldCtx::ratfunc({"p", "q"});
  auto c12 = FieldCtx::cyclotomic(12);
  const Assignment at{{"p", Coeff::zeta(c12, 4)}, {"q", Coeff::zeta(c12, 3) + Coeff::one(c12)}};
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Coeff x = random_element(R, rng), y = random_element(R, rng);
    try {
      Coeff sx = specialize(x, at, c12), sy = specialize(y, at, c12);
      EXPECT_EQ(specialize(x * y, at, c12), sx * sy);
      EXPECT_EQ(specialize(x + y, at, c12), sx + sy);
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::DenominatorVanishes);
    }
  }
  EXPECT_GT(checked, 200);
}
