#include <gtest/gtest.h>

#include <set>

#include "ennola/characters.hpp"
#include "ennola/hall_littlewood.hpp"
#include "ennola/types.hpp"
#include "oracles.hpp"

using ennola::Basis;
using ennola::GradedSeries;
using ennola::Integer;
using ennola::MultiPartition;
using ennola::MultiType;
using ennola::Partition;
using ennola::PolyQU;
using ennola::Rational;
using ennola::RatQU;
using ennola::SymFunc;
using ennola::Type;

namespace {

const PolyQU q = PolyQU::q();

SymFunc schur(const Partition& lambda) { return SymFunc::basis_element(Basis::Schur, MultiPartition({lambda})); }

std::size_t type_count(int n) {
  // prod_{d, lambda nonempty} 1 / (1 - T^{d |lambda|})
  std::vector<std::size_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int d = 1; d <= n; ++d) {
    for (int s = 1; s * d <= n; ++s) {
      const std::size_t atoms = ennola::partition_count(s);
      for (std::size_t a = 0; a < atoms; ++a) {
        for (int t = s * d; t <= n; ++t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - s * d)];
      }
    }
  }
  return c[static_cast<std::size_t>(n)];
}

}  // namespace

TEST(Type, Statistics) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : ennola::enumerate_partitions(n)) {
      const Type t = Type::of_partition(mu);
      EXPECT_EQ(t.r_stat(), 2 * n);
      EXPECT_EQ(t.r_prime_stat(), (n + 1) / 2 + n);
      EXPECT_EQ(t.n_stat(), mu.n_stat());
    }
  }
  const Type two({{2, Partition({1}), 1}});
  EXPECT_EQ(two.size(), 2);
  EXPECT_EQ(two.n_stat(), 0);
  EXPECT_EQ(two.r_stat(), 3);
  EXPECT_EQ(two.r_prime_stat(), 2);
  const Type pair({{1, Partition({1}), 2}});
  EXPECT_EQ(pair.r_stat(), 4);
  EXPECT_EQ(pair.r_prime_stat(), 3);
  const auto stats = ennola::type_stats(pair);
  EXPECT_EQ(stats.r, 4);
}

TEST(Type, EntriesMergeAndSort) {
  const Type t({{1, Partition({1}), 1}, {2, Partition({1}), 1}, {1, Partition({1}), 1}});
  ASSERT_EQ(t.entries().size(), 2u);
  EXPECT_EQ(t.entries()[0].m, 2);
  EXPECT_EQ(t.size(), 4);
  EXPECT_THROW(Type({{0, Partition({1}), 1}}), std::invalid_argument);
  EXPECT_THROW(Type({{1, Partition(), 1}}), std::invalid_argument);
}

TEST(Type, Dual) {
  EXPECT_EQ(ennola::dual_type(Type({{1, Partition({2}), 1}})), Type({{1, Partition({1, 1}), 1}}));
  const Type two({{2, Partition({1}), 1}});
  EXPECT_EQ(two.dual(), two);
}

TEST(Type, ParseAndPrint) {
  const Type t = ennola::parse_type("2:1^1;1:2.1^1");
  EXPECT_EQ(t, Type({{2, Partition({1}), 1}, {1, Partition({2, 1}), 1}}));
  EXPECT_EQ(ennola::parse_type("1:1^2^1"), Type({{1, Partition({1, 1}), 1}}));
  EXPECT_EQ(ennola::parse_type("1:1^2"), Type({{1, Partition({1}), 2}}));
  EXPECT_EQ(ennola::parse_type("3:2.1"), Type({{3, Partition({2, 1}), 1}}));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& ty : ennola::enumerate_types(n)) EXPECT_EQ(ennola::parse_type(ty.to_string()), ty) << ty;
  }
}

TEST(Type, ParseErrors) {
  EXPECT_THROW(ennola::parse_type("1"), ennola::ParseError);
  EXPECT_THROW(ennola::parse_type("0:1"), ennola::ParseError);
  EXPECT_THROW(ennola::parse_type("1:1^0"), ennola::ParseError);
  try {
    ennola::parse_type("1:1;2:x");
    FAIL() << "expected a parse error";
  } catch (const ennola::ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(ennola::parse_multitype("1:1^1,1:2^1"), ennola::ParseError);
}

TEST(CTau, Examples) {
  EXPECT_EQ(ennola::c_tau(Type({{1, Partition({2}), 1}})), Rational(1));
  EXPECT_EQ(ennola::c_tau(Type({{2, Partition({1}), 1}})), Rational(-1, 2));
  EXPECT_EQ(ennola::c_tau(Type({{1, Partition({1}), 1}, {2, Partition({1}), 1}})), Rational(0));
  EXPECT_EQ(ennola::c_tau(Type({{1, Partition({1}), 2}})), Rational(-1, 2));
  EXPECT_EQ(ennola::c_tau(Type({{1, Partition({1}), 1}, {1, Partition({2}), 1}})), Rational(-1));
}

TEST(Type, Enumeration) {
  const auto one = ennola::enumerate_types(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Type({{1, Partition({1}), 1}}));
  const auto two = ennola::enumerate_types(2);
  const std::set<Type> expected = {Type({{1, Partition({1}), 2}}), Type({{2, Partition({1}), 1}}),
                                   Type({{1, Partition({1, 1}), 1}}), Type({{1, Partition({2}), 1}})};
  EXPECT_EQ(std::set<Type>(two.begin(), two.end()), expected);
  for (int n = 1; n <= 7; ++n) {
    const auto all = ennola::enumerate_types(n);
    EXPECT_EQ(all.size(), type_count(n));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& t : all) EXPECT_EQ(t.size(), n);
  }
}

TEST(SchurOfType, Examples) {
  for (const auto& mu : ennola::enumerate_partitions(4)) EXPECT_EQ(ennola::schur_of_type(Type::of_partition(mu)), schur(mu));
  EXPECT_EQ(ennola::schur_of_type(Type({{2, Partition({1}), 1}})), schur(Partition({2})) - schur(Partition({1, 1})));
  EXPECT_EQ(ennola::schur_of_type(Type({{1, Partition({1}), 2}})), schur(Partition({2})) + schur(Partition({1, 1})));
}

TEST(SchurOfType, RegularTypesGiveCharacters) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : ennola::enumerate_partitions(n)) {
      const Type t = Type::regular(lambda);
      for (const auto& mu : ennola::enumerate_partitions(n)) EXPECT_EQ(ennola::c_omega(t, mu), Integer(ennola::character_value(mu, lambda)));
    }
  }
}

TEST(SchurOfType, MatchesCharacterFormula) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : ennola::enumerate_types(n)) {
      for (const auto& mu : ennola::enumerate_partitions(n)) EXPECT_EQ(Rational(ennola::c_omega(t, mu)), oracle::c_omega(t, mu)) << t << " " << mu;
    }
  }
}

TEST(SchurOfType, DualTypeSign) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : ennola::enumerate_types(n)) {
      const Integer sign = t.r_stat() % 2 ? -1 : 1;
      for (const auto& mu : ennola::enumerate_partitions(n)) EXPECT_EQ(ennola::c_omega(t, mu.dual()), sign * ennola::c_omega(t.dual(), mu)) << t << " " << mu;
    }
  }
}

TEST(TypePolys, CentralizerOrders) {
  EXPECT_EQ(ennola::a_prime_poly(Type({{1, Partition({1}), 1}})), q + 1);
  EXPECT_EQ(ennola::a_prime_poly(Type({{1, Partition({1, 1}), 1}})), (q * q - 1) * (q * q + q));
  EXPECT_EQ(ennola::a_poly(Type({{2, Partition({1}), 1}})), q * q - 1);
  EXPECT_EQ(ennola::a_poly(Type({{1, Partition({1}), 2}})), (q - 1) * (q - 1));
}

TEST(LogOverTypes, MatchesDirectLog) {
  // Log(sum_lambda u_lambda T^|lambda|) = sum_tau c_tau u_tau T^|tau| with u_lambda = H~_lambda / a_lambda.
  const int N = 4;
  for (int k = 1; k <= 2; ++k) {
    auto base = [k](const Partition& lambda) {
      const SymFunc h = ennola::transformed_hl(lambda);
      SymFunc out = h;
      for (int i = 1; i < k; ++i) {
        SymFunc next(i + 1, lambda.size(), Basis::Schur);
        for (const auto& [key, c] : out.terms()) {
          for (const auto& [key2, c2] : h.terms()) {
            auto comps = key.components();
            comps.push_back(key2[0]);
            next.set(MultiPartition(comps), c * c2);
          }
        }
        out = next;
      }
      return out * RatQU(PolyQU(1), ennola::a_poly(lambda));
    };
    GradedSeries series = GradedSeries::one(k, N);
    for (int n = 1; n <= N; ++n) {
      SymFunc f(k, n, Basis::PowerSum);
      for (const auto& lambda : ennola::enumerate_partitions(n)) f += base(lambda);
      series.set(n, f);
    }
    const GradedSeries direct = ennola::pleth_log(series);
    for (int n = 1; n <= N; ++n) {
      SymFunc sum(k, n, Basis::PowerSum);
      for (const auto& tau : ennola::enumerate_types(n)) {
        const Rational c = ennola::c_tau(tau);
        if (c != 0) sum += ennola::extend_to_type(base, tau) * RatQU(c);
      }
      EXPECT_EQ(direct[n], sum) << "k=" << k << " n=" << n;
    }
  }
}

TEST(MultiType, ParseAndStats) {
  const MultiType m = ennola::parse_multitype("2:1^1,1:2^1,1:1^2^1");
  EXPECT_EQ(m.k(), 3u);
  EXPECT_EQ(m.size(), 2);
  EXPECT_EQ(m.r_stat(), 3 + 4 + 4);
  EXPECT_EQ(m.to_string(), "2:1^1,1:2^1,1:1^2^1");
  EXPECT_EQ(MultiType::of_multipartition(ennola::parse_multipartition("2,1^2,2")).schur(),
            SymFunc::basis_element(Basis::Schur, ennola::parse_multipartition("2,1^2,2")));
}
