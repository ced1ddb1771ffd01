#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "ennola/poly.hpp"

using ennola::Integer;
using ennola::PolyQU;

namespace {

const PolyQU q = PolyQU::q();
const PolyQU u = PolyQU::u();

PolyQU random_poly(std::mt19937& rng, int max_deg = 4, int terms = 5) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  PolyQU p;
  for (int i = 0; i < terms; ++i) {
    p += PolyQU::monomial(coeff(rng), static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng) / 2));
  }
  return p;
}

}  // namespace

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ((q - 1) * (q + 1), q * q - 1); }

TEST(Poly, MultiplicativeIdentity) {
  const PolyQU p = u * q + u + q.pow(3) + q;
  EXPECT_EQ(p * PolyQU(1), p);
}

TEST(Poly, AdditiveInverse) { EXPECT_TRUE(((q - 1) + (PolyQU(1) - q)).is_zero()); }

TEST(Poly, ToString) {
  EXPECT_EQ((q.pow(3) + q * 2 + 1).to_string(), "q^3 + 2*q + 1");
  EXPECT_EQ((q.pow(5) - q.pow(4) + q.pow(3) - q.pow(2)).to_string(), "q^5 - q^4 + q^3 - q^2");
  EXPECT_EQ(PolyQU().to_string(), "0");
  EXPECT_EQ((-u).to_string(), "-u");
}

TEST(Poly, SubstUnitRecoversU) {
  const PolyQU p = u * q + u + q.pow(3) + q;
  EXPECT_EQ(p.subst(q, PolyQU(1)), q.pow(3) + q * 2 + 1);
}

TEST(Poly, SubstMinusOneMinusQ) {
  const PolyQU p = u * q + u + q.pow(3) + q;
  EXPECT_EQ(p.subst(-q, PolyQU(-1)), -q.pow(3) - 1);
}

TEST(Poly, SubstOfZero) { EXPECT_TRUE(PolyQU().subst(-q, PolyQU(7)).is_zero()); }

TEST(Poly, IdentitySubstitution) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const PolyQU p = random_poly(rng);
    EXPECT_EQ(p.subst(q, u), p);
  }
}

TEST(Poly, SubstAgreesWithEvaluation) {
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    const PolyQU p = random_poly(rng);
    const PolyQU s = p.subst(q * 2 + 1, PolyQU(3));
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(s.evaluate(x), p.evaluate(2 * x + 1, 3));
  }
}

TEST(Poly, ExactDivision) {
  auto r = ennola::divide(q * q - 1, q - 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, q + 1);
  EXPECT_FALSE(ennola::divide(q, q - 1).has_value());
}

TEST(Poly, DivisionByZeroThrows) { EXPECT_THROW(ennola::divide(q, PolyQU()), std::domain_error); }

TEST(Poly, DivideExactIntegers) {
  EXPECT_EQ((q * 4 + 6).divide_exact(2), q * 2 + 3);
  EXPECT_THROW((q * 4 + 3).divide_exact(2), ennola::NotPolynomial);
}

TEST(Poly, MultiplyThenDivideRecovers) {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const PolyQU a = random_poly(rng);
    PolyQU b = random_poly(rng);
    if (b.is_zero()) continue;
    auto r = ennola::divide(a * b, b);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, a);
  }
}

TEST(Poly, ProductMatchesEvaluation) {
  std::mt19937 rng(14);
  for (int i = 0; i < 50; ++i) {
    const PolyQU a = random_poly(rng);
    const PolyQU b = random_poly(rng);
    const PolyQU c = a * b;
    for (long x = -2; x <= 2; ++x) {
      for (long y = -2; y <= 2; ++y) EXPECT_EQ(c.evaluate(x, y), a.evaluate(x, y) * b.evaluate(x, y));
    }
  }
}

TEST(Poly, GcdDividesBothAndIsMaximal) {
  std::mt19937 rng(15);
  for (int i = 0; i < 40; ++i) {
    const PolyQU common = random_poly(rng, 2, 3);
    const PolyQU a = common * random_poly(rng, 2, 3);
    const PolyQU b = common * random_poly(rng, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const PolyQU g = ennola::gcd(a, b);
    ASSERT_FALSE(g.is_zero());
    EXPECT_TRUE(ennola::divide(a, g).has_value());
    EXPECT_TRUE(ennola::divide(b, g).has_value());
    if (!common.is_zero()) EXPECT_TRUE(ennola::divide(g, common).has_value() || common.is_constant());
  }
}

TEST(Poly, GcdOfCoprime) { EXPECT_TRUE(ennola::gcd(q - 1, q + 1).is_constant()); }

TEST(Poly, AdamsAndNegateQ) {
  const PolyQU p = q * u + q.pow(2) * 3 - 1;
  EXPECT_EQ(p.adams(2), q.pow(2) * u.pow(2) + q.pow(4) * 3 - 1);
  EXPECT_EQ(p.negate_q(), -q * u + q.pow(2) * 3 - 1);
}

TEST(Poly, Degrees) {
  const PolyQU p = q.pow(3) * u + q;
  EXPECT_EQ(p.q_degree(), 3);
  EXPECT_EQ(p.u_degree(), 1);
  EXPECT_EQ(p.q_low_degree(), 1);
  EXPECT_EQ(p.u_coefficient(1), q.pow(3));
  EXPECT_EQ(PolyQU().q_degree(), -1);
}

TEST(Poly, JsonRoundTrip) {
  const PolyQU p = q.pow(3) * u * Integer("123456789012345678901234567890") - q + 7;
  EXPECT_EQ(PolyQU::from_json(p.to_json()), p);
}

TEST(Poly, BigCoefficientsStayExact) {
  PolyQU p = q + 1;
  p = p.pow(80);
  EXPECT_EQ(p.evaluate(1), Integer(1) << 80);
}
