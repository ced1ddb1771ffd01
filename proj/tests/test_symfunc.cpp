#include <gtest/gtest.h>

#include <random>

#include "ennola/characters.hpp"
#include "ennola/ennola.hpp"
#include "ennola/symfunc.hpp"

using ennola::Basis;
using ennola::GradedSeries;
using ennola::MultiPartition;
using ennola::Partition;
using ennola::PolyQU;
using ennola::Rational;
using ennola::RatQU;
using ennola::SymFunc;

namespace {

const PolyQU q = PolyQU::q();
const PolyQU u = PolyQU::u();

SymFunc schur(const Partition& lambda) { return SymFunc::basis_element(Basis::Schur, MultiPartition({lambda})); }
SymFunc power(const Partition& lambda) { return SymFunc::basis_element(Basis::PowerSum, MultiPartition({lambda})); }

RatQU random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  switch (c(rng) + 3) {
    case 0: return RatQU(q * c(rng) + 1);
    case 1: return RatQU(u * c(rng) - q);
    case 2: return RatQU(Rational(c(rng), 2));
    case 3: return RatQU(PolyQU(1), q + 1);
    default: return RatQU(c(rng));
  }
}

SymFunc random_element(std::mt19937& rng, int k, int n, Basis basis) {
  SymFunc f(k, n, basis);
  std::bernoulli_distribution keep(0.4);
  for (std::size_t s = 0; s < f.dim(); ++s) {
    if (keep(rng)) f.at(s) = random_coeff(rng);
  }
  return f;
}

GradedSeries random_series(std::mt19937& rng, int k, int N) {
  GradedSeries g(k, N);
  for (int n = 1; n <= N; ++n) g.set(n, random_element(rng, k, n, Basis::PowerSum));
  return g;
}

// s_lambda * s_1 by adding one box.
SymFunc pieri_box(const Partition& lambda) {
  SymFunc out(1, lambda.size() + 1, Basis::Schur);
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    if (i > 0 && i < parts.size() && parts[i - 1] == parts[i]) continue;
    std::vector<int> next = parts;
    if (i == parts.size()) {
      next.push_back(1);
    } else {
      ++next[i];
    }
    out.set(MultiPartition({Partition(next)}), RatQU(1));
  }
  return out;
}

}  // namespace

TEST(Moebius, Values) {
  const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(ennola::moebius(n), expected[n - 1]) << n;
}

TEST(SymFunc, DegreeOneBasesCoincide) {
  const auto mu = MultiPartition({Partition({1}), Partition({1})});
  EXPECT_EQ(SymFunc::basis_element(Basis::PowerSum, mu).to(Basis::Schur), SymFunc::basis_element(Basis::Schur, mu));
}

TEST(SymFunc, SchurTwoInPowerSums) {
  SymFunc expected(1, 2, Basis::PowerSum);
  expected.set(MultiPartition({Partition({2})}), RatQU(Rational(1, 2)));
  expected.set(MultiPartition({Partition({1, 1})}), RatQU(Rational(1, 2)));
  EXPECT_EQ(schur(Partition({2})).to(Basis::PowerSum), expected);
}

TEST(SymFunc, BasisRoundTrip) {
  std::mt19937 rng(31);
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 5; ++i) {
      const SymFunc f = random_element(rng, k, 4, Basis::PowerSum);
      EXPECT_EQ(f.to(Basis::Schur).to(Basis::PowerSum), f);
      const SymFunc g = random_element(rng, k, 4, Basis::Schur);
      EXPECT_EQ(g.to(Basis::PowerSum).to(Basis::Schur), g);
    }
  }
}

TEST(SymFunc, EqualityAcrossBases) {
  const SymFunc s = schur(Partition({2, 1}));
  EXPECT_EQ(s, s.to(Basis::PowerSum));
}

TEST(SymFunc, MultiplyExamples) {
  EXPECT_EQ(ennola::multiply(power(Partition({1})), power(Partition({1}))), power(Partition({1, 1})));
  EXPECT_EQ(ennola::multiply(schur(Partition({1})), schur(Partition({1}))).to(Basis::Schur),
            schur(Partition({2})) + schur(Partition({1, 1})));
  const SymFunc f = schur(Partition({3, 1}));
  EXPECT_EQ(ennola::multiply(f, SymFunc::scalar(1, RatQU(1))), f);
  EXPECT_THROW(ennola::multiply(f, SymFunc::scalar(2, RatQU(1))), std::invalid_argument);
}

TEST(SymFunc, PieriRule) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : ennola::enumerate_partitions(n)) {
      EXPECT_EQ(ennola::multiply(schur(lambda), schur(Partition({1}))).to(Basis::Schur), pieri_box(lambda)) << lambda;
    }
  }
}

TEST(SymFunc, MultiplyIsCommutativeAndAssociative) {
  std::mt19937 rng(32);
  for (int i = 0; i < 4; ++i) {
    const SymFunc a = random_element(rng, 2, 1, Basis::Schur);
    const SymFunc b = random_element(rng, 2, 2, Basis::PowerSum);
    const SymFunc c = random_element(rng, 2, 1, Basis::PowerSum);
    EXPECT_EQ(ennola::multiply(a, b), ennola::multiply(b, a));
    EXPECT_EQ(ennola::multiply(ennola::multiply(a, b), c), ennola::multiply(a, ennola::multiply(b, c)));
  }
}

TEST(HallPairing, SchurOrthonormal) {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = ennola::enumerate_partitions(n);
    for (const auto& a : parts) {
      const SymFunc sa = schur(a).to(Basis::PowerSum);
      for (const auto& b : parts) EXPECT_EQ(ennola::hall_pairing(sa, schur(b)), RatQU(a == b ? 1 : 0));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : ennola::enumerate_multipartitions(n, 2)) {
      for (const auto& b : ennola::enumerate_multipartitions(n, 2)) {
        EXPECT_EQ(ennola::hall_pairing(SymFunc::basis_element(Basis::Schur, a), SymFunc::basis_element(Basis::Schur, b)),
                  RatQU(a == b ? 1 : 0));
      }
    }
  }
}

TEST(HallPairing, PowerSumsOrthogonal) {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = ennola::enumerate_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const RatQU expected = a == b ? RatQU(a.z()) : RatQU(0);
        EXPECT_EQ(ennola::hall_pairing(power(a), power(b)), expected);
        EXPECT_EQ(ennola::hall_pairing(power(a).to(Basis::Schur), power(b).to(Basis::Schur)), expected);
      }
    }
  }
}

TEST(HallPairing, BilinearSymmetric) {
  std::mt19937 rng(33);
  for (int i = 0; i < 5; ++i) {
    const SymFunc f = random_element(rng, 2, 3, Basis::Schur);
    const SymFunc g = random_element(rng, 2, 3, Basis::PowerSum);
    const SymFunc h = random_element(rng, 2, 3, Basis::Schur);
    const RatQU c = random_coeff(rng);
    EXPECT_EQ(ennola::hall_pairing(f, g), ennola::hall_pairing(g, f));
    EXPECT_EQ(ennola::hall_pairing(f * c + h, g), c * ennola::hall_pairing(f, g) + ennola::hall_pairing(h, g));
    EXPECT_EQ(ennola::hall_pairing(f, g), ennola::hall_pairing(f.to(Basis::PowerSum), g.to(Basis::Schur)));
    EXPECT_EQ(ennola::hall_pairing(f, SymFunc(2, 3, Basis::Schur)), RatQU(0));
  }
  EXPECT_THROW(ennola::hall_pairing(schur(Partition({1})), schur(Partition({2}))), std::invalid_argument);
}

TEST(Adams, Definition) {
  EXPECT_EQ(power(Partition({2, 1})).adams(2), power(Partition({4, 2})));
  EXPECT_EQ((power(Partition({1})) * RatQU(q + u)).adams(3), power(Partition({3})) * RatQU(q.pow(3) + u.pow(3)));
  GradedSeries g(1, 4);
  g.set(1, power(Partition({1})));
  const GradedSeries a = g.adams(2);
  EXPECT_EQ(a[2], power(Partition({2})));
  EXPECT_TRUE(a[1].is_zero());
  EXPECT_TRUE(a[4].is_zero());
}

TEST(Adams, OfElementaryTwo) {
  EXPECT_EQ(schur(Partition({1, 1})).adams(2).to(Basis::Schur),
            schur(Partition({2, 2})) - schur(Partition({2, 1, 1})) + schur(Partition::rectangle(1, 4)));
}

TEST(Adams, BasisIndependent) {
  std::mt19937 rng(34);
  for (int i = 0; i < 6; ++i) {
    const SymFunc f = random_element(rng, 2, 2, Basis::Schur);
    EXPECT_EQ(f.adams(2), f.to(Basis::PowerSum).adams(2));
    EXPECT_EQ(f.adams(3).adams(2), f.adams(6));
  }
}

TEST(Series, ExpOfQTimesP1IsGeometric) {
  GradedSeries f(1, 5);
  f.set(1, power(Partition({1})) * RatQU(q));
  const GradedSeries e = ennola::pleth_exp(f);
  EXPECT_EQ(e[0], SymFunc::scalar(1, RatQU(1)));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(e[n], schur(Partition({n})) * RatQU(q.pow(static_cast<unsigned>(n))));
}

TEST(Series, ExpOfP1IsCompleteHomogeneous) {
  GradedSeries f(1, 5);
  f.set(1, power(Partition({1})));
  const GradedSeries e = ennola::pleth_exp(f);
  for (int n = 1; n <= 5; ++n) {
    // h_n = sum_rho p_rho / z_rho.
    SymFunc h(1, n, Basis::PowerSum);
    for (const auto& rho : ennola::enumerate_partitions(n)) h.set(MultiPartition({rho}), RatQU(Rational(1) / Rational(rho.z())));
    EXPECT_EQ(e[n], h);
  }
}

TEST(Series, ExpLogOfZeroAndOne) {
  const GradedSeries zero(2, 4);
  EXPECT_EQ(ennola::pleth_exp(zero), GradedSeries::one(2, 4));
  EXPECT_EQ(ennola::pleth_log(GradedSeries::one(2, 4)), zero);
  EXPECT_THROW(ennola::pleth_exp(GradedSeries::one(2, 4)), std::invalid_argument);
  EXPECT_THROW(ennola::pleth_log(zero), std::invalid_argument);
}

TEST(Series, LogOfCompleteHomogeneous) {
  GradedSeries h = GradedSeries::one(1, 5);
  for (int n = 1; n <= 5; ++n) h.set(n, schur(Partition({n})));
  GradedSeries expected(1, 5);
  expected.set(1, power(Partition({1})));
  EXPECT_EQ(ennola::pleth_log(h), expected);
}

TEST(Series, ExpLogInverse) {
  std::mt19937 rng(35);
  for (int k = 1; k <= 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      const GradedSeries f = random_series(rng, k, 5);
      EXPECT_EQ(ennola::pleth_log(ennola::pleth_exp(f)), f);
      const GradedSeries g = GradedSeries::one(k, 5) + random_series(rng, k, 5);
      EXPECT_EQ(ennola::pleth_exp(ennola::pleth_log(g)), g);
    }
  }
}

TEST(Series, ExpIsHomomorphism) {
  std::mt19937 rng(36);
  for (int k = 1; k <= 2; ++k) {
    const GradedSeries f = random_series(rng, k, 5);
    const GradedSeries g = random_series(rng, k, 5);
    EXPECT_EQ(ennola::pleth_exp(f + g), ennola::multiply(ennola::pleth_exp(f), ennola::pleth_exp(g)));
  }
}

TEST(Series, OrdinaryLogExpInverse) {
  std::mt19937 rng(37);
  const GradedSeries f = random_series(rng, 2, 4);
  EXPECT_EQ(ennola::series_log(ennola::series_exp(f)), f);
}

TEST(Series, ExpDoesNotCommuteWithSignOfT) {
  GradedSeries f(1, 2);
  f.set(1, power(Partition({1})) * RatQU(q));
  const GradedSeries lhs = ennola::pleth_exp(f).negate_T();
  const GradedSeries rhs = ennola::pleth_exp(f.negate_T());
  EXPECT_FALSE(lhs == rhs);
  EXPECT_EQ(lhs[2], schur(Partition({2})) * RatQU(q * q));
  EXPECT_EQ(rhs[2], schur(Partition({1, 1})) * RatQU(q * q));
}

TEST(Series, PowerOfGeometric) {
  GradedSeries f = GradedSeries::one(1, 5);
  for (int n = 1; n <= 5; ++n) f.set(n, power(Partition::rectangle(1, n)));
  EXPECT_EQ(ennola::series_pow_exp_of_log(f, RatQU(1)), f);
  EXPECT_EQ(ennola::series_pow_exp_of_log(f, RatQU(0)), GradedSeries::one(1, 5));
  const GradedSeries sq = ennola::series_pow_exp_of_log(f, RatQU(2));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(sq[n], power(Partition::rectangle(1, n)) * RatQU(n + 1));
  const GradedSeries half = ennola::series_pow_exp_of_log(f, RatQU(Rational(1, 2)));
  EXPECT_EQ(ennola::multiply(half, half), f);
  const GradedSeries sym = ennola::series_pow_exp_of_log(f, RatQU(q));
  EXPECT_EQ(ennola::multiply(sym, ennola::series_pow_exp_of_log(f, RatQU(PolyQU(1) - q))), f);
}

TEST(Series, LogOfDeformedPowerScalesLog) {
  // log f1 = sum_d h_d log psi_d(f2) with h = u(q-1) implies Log f1 = h Log f2.
  const int N = 4;
  for (int k = 1; k <= 2; ++k) {
    const GradedSeries f2 = ennola::cauchy_omega(k, N);
    const GradedSeries log_f2 = ennola::series_log(f2);
    GradedSeries log_f1(k, N);
    for (int d = 1; d <= N; ++d) log_f1 += log_f2.adams(static_cast<unsigned>(d)) * ennola::phi_u(d);
    const GradedSeries f1 = ennola::series_exp(log_f1);
    EXPECT_EQ(ennola::pleth_log(f1), ennola::pleth_log(f2) * RatQU(u * (q - 1)));
  }
}
