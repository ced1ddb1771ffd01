#include <gtest/gtest.h>

#include <random>

#include "ennola/rational_function.hpp"

using ennola::PolyQU;
using ennola::RatQU;

namespace {

const PolyQU q = PolyQU::q();
const PolyQU u = PolyQU::u();

RatQU random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  PolyQU num = q * c(rng) + u * c(rng) + c(rng);
  PolyQU den = q * c(rng) + c(rng);
  if (den.is_zero()) den = PolyQU(1);
  return RatQU(num, den);
}

}  // namespace

TEST(RatQU, InverseCancels) {
  const RatQU r(PolyQU(1), q - 1);
  EXPECT_EQ(r * RatQU(q - 1), RatQU(1));
}

TEST(RatQU, SumOfFractions) {
  const RatQU s = RatQU(PolyQU(1), q - 1) + RatQU(PolyQU(1), q + 1);
  EXPECT_EQ(s, RatQU(q * 2, q * q - 1));
}

TEST(RatQU, DivisionByZero) {
  EXPECT_THROW(RatQU(PolyQU(1), PolyQU()), std::domain_error);
  EXPECT_THROW(RatQU(0).inverse(), std::domain_error);
}

TEST(RatQU, ToPolyExactAndInexact) {
  EXPECT_EQ(RatQU(q * q - 1, q - 1).to_poly(), q + 1);
  EXPECT_THROW(RatQU(q, q - 1).to_poly(), ennola::NotPolynomial);
}

TEST(RatQU, CancelledFactorRecoversPolynomial) {
  std::mt19937 rng(21);
  for (int i = 0; i < 30; ++i) {
    const PolyQU p = q.pow(static_cast<unsigned>(i % 4)) * (i - 7) + u * i;
    EXPECT_EQ((RatQU((q - 1) * p) / RatQU(q - 1)).to_poly(), p);
  }
}

TEST(RatQU, CanonicalFormIsUnique) {
  const RatQU a(q * 2 - 2, q * q - 1);
  const RatQU b(PolyQU(-4), q * -2 - 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), b.num());
  EXPECT_EQ(a.den(), b.den());
}

TEST(RatQU, FieldAxioms) {
  std::mt19937 rng(22);
  for (int i = 0; i < 40; ++i) {
    const RatQU a = random_rat(rng);
    const RatQU b = random_rat(rng);
    const RatQU c = random_rat(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, RatQU(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(RatQU, ScalarRationals) {
  RatQU r(ennola::Rational(1, 2));
  r *= RatQU(q * q - q);
  EXPECT_EQ(r, RatQU(q * q - q, PolyQU(2)));
  EXPECT_TRUE(r.has_constant_den());
  EXPECT_FALSE(r.is_polynomial());
}

TEST(RatQU, SubstAndAdams) {
  const RatQU r(u, q - 1);
  EXPECT_EQ(r.subst(-q, PolyQU(-1)), RatQU(PolyQU(1), q + 1));
  EXPECT_EQ(r.adams(2), RatQU(u * u, q * q - 1));
  EXPECT_EQ(r.negate_q(), RatQU(-u, q + 1));
}
