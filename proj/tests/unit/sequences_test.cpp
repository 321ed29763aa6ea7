#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "greedy/errors.hpp"
#include "greedy/sequences.hpp"
#include "greedy/special.hpp"
#include "oracles.hpp"

using namespace greedy;

namespace {

Configuration one_point() { return Configuration{CirclePoint{}}; }

}  // namespace

TEST(CanonicalStructural, Examples) {
  EXPECT_EQ(canonical_structural(4).turns(), (std::vector<double>{0.0, 0.5, 0.25, 0.75}));
  EXPECT_EQ(canonical_structural(8).turns(),
            (std::vector<double>{0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875}));
  EXPECT_EQ(canonical_structural(2).turns(), (std::vector<double>{0.0, 0.5}));
  EXPECT_TRUE(canonical_structural(0).empty());
}

TEST(CanonicalStructural, MatchesRadicalInverseAndRecursion) {
  const auto seq = canonical_structural(5000);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    ASSERT_TRUE(seq[n].is_dyadic());
    ASSERT_EQ(seq[n].turns(), oracle::van_der_corput(n));
  }
  // x_{2^k + l} = 2^{-k-1} + x_l
  for (unsigned k = 0; k < 12; ++k) {
    for (std::size_t l = 0; l < (std::size_t{1} << k); ++l) {
      ASSERT_EQ(seq[(std::size_t{1} << k) + l].turns(), std::ldexp(1.0, -static_cast<int>(k) - 1) + seq[l].turns());
    }
  }
}

TEST(CanonicalStructural, PowerOfTwoSectionsAreRootsOfUnity) {
  for (unsigned m = 0; m <= 16; ++m) {
    const std::size_t n = std::size_t{1} << m;
    auto a = canonical_structural(n).turns();
    std::sort(a.begin(), a.end());
    for (std::size_t k = 0; k < n; ++k) ASSERT_EQ(a[k], std::ldexp(static_cast<double>(k), -static_cast<int>(m)));
  }
}

TEST(DyadicPotentialTable, Entries) {
  const DyadicPotentialTable t(RieszParameter(2.0), 10);
  for (unsigned j = 0; j <= 10; ++j) EXPECT_NEAR(t.at(j), std::ldexp(1.0, 2 * j) / 4.0, 1e-12 * t.at(j));
  EXPECT_THROW((void)t.at(11), DomainError);
  EXPECT_THROW((void)t.extremal_value(2048), DomainError);
  const DyadicPotentialTable log_table(RieszParameter(0.0), 5);
  EXPECT_DOUBLE_EQ(log_table.extremal_value(7), -3.0 * std::log(2.0));
}

TEST(ExtremalValuesStructural, Examples) {
  const auto v = extremal_values_structural(3, RieszParameter(1.0));
  ASSERT_EQ(v.size(), 3U);
  EXPECT_DOUBLE_EQ(v[0], 0.5);
  EXPECT_NEAR(v[2], std::sqrt(2.0) + 0.5, 1e-15);
  for (double s : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(extremal_values_structural(1, RieszParameter(s))[0], std::exp2(-s), 1e-15);
  }
}

TEST(ExtremalValuesStructural, MatchDirectPotentialOfSequence) {
  const auto seq = canonical_structural(513);
  for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const auto v = extremal_values_structural(512, RieszParameter(s));
    for (std::size_t n = 1; n <= 512; ++n) {
      const double direct = potential(seq.prefix(n), seq[n], RieszParameter(s));
      ASSERT_NEAR(v[n - 1], direct, 1e-11 * std::max(1.0, std::abs(direct))) << "s=" << s << " N=" << n;
    }
  }
}

TEST(ExtremalValuesStructural, MersenneIndicesTelescope) {
  for (double s : {0.5, 1.0, 2.0}) {
    const auto v = extremal_values_structural(4095, RieszParameter(s));
    for (unsigned p = 1; p <= 12; ++p) {
      const std::uint64_t n = (1ULL << p) - 1;
      const double l = roots_energy(1ULL << p, RieszParameter(s)) / std::ldexp(1.0, static_cast<int>(p));
      EXPECT_NEAR(v[n - 1], l, 1e-12 * l);
    }
  }
}

TEST(ExtremalValuesStructural, BelowContinuousEnergyLine) {
  for (double s : {0.1, 0.5, 0.9}) {
    const auto v = extremal_values_structural(4096, RieszParameter(s));
    const double i = continuous_energy(s);
    for (std::size_t n = 1; n <= v.size(); ++n) ASSERT_LT(v[n - 1], static_cast<double>(n) * i);
  }
}

TEST(GreedyNumerical, FromOnePointReachesQuarterTurns) {
  const auto run = greedy_numerical(one_point(), RieszParameter(1.0), 4);
  ASSERT_EQ(run.points.size(), 4U);
  auto t = run.points.turns();
  std::sort(t.begin(), t.end());
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(t[k], 0.25 * k, 1e-12);
  const auto structural = extremal_values_structural(3, RieszParameter(1.0));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(run.extremal_values[k], structural[k], 1e-6);
}

TEST(GreedyNumerical, LogKernelPicksAntipode) {
  const auto run = greedy_numerical(one_point(), RieszParameter(0.0), 2);
  EXPECT_NEAR(run.points[1].turns(), 0.5, 1e-12);
  EXPECT_NEAR(run.extremal_values[0], -std::log(2.0), 1e-15);
}

TEST(GreedyNumerical, NewPointLandsInLongArc) {
  const Configuration initial{CirclePoint{}, CirclePoint::dyadic(1, 2)};
  const auto run = greedy_numerical(initial, RieszParameter(0.5), 3);
  const double t = run.points[2].turns();
  EXPECT_GT(t, 0.25);
  EXPECT_LT(t, 1.0);
  EXPECT_NEAR(t, 0.625, 1e-9);
  EXPECT_EQ(run.first_greedy_step(), 2U);
}

TEST(GreedyNumerical, Validation) {
  EXPECT_THROW(greedy_numerical(Configuration{}, RieszParameter(1.0), 4), DomainError);
  EXPECT_THROW(greedy_numerical(one_point(), RieszParameter(1.0), 4, 63), DomainError);
  const Configuration initial = Configuration::from_turns(std::vector<double>{0.0, 0.1, 0.37});
  const auto run = greedy_numerical(initial, RieszParameter(1.0), 2);
  EXPECT_EQ(run.points.size(), 3U);
  EXPECT_EQ(run.extremal_values.size(), 2U);
  EXPECT_THROW(Configuration::from_turns(std::vector<double>{0.1, 0.1}), DomainError);
}

TEST(GreedyNumerical, ReproducesStructuralExtremalValues) {
  for (double s : {0.5, 1.0, 1.5, 2.0}) {
    const auto run = greedy_numerical(one_point(), RieszParameter(s), 129);
    const auto structural = extremal_values_structural(128, RieszParameter(s));
    for (std::size_t n = 1; n <= 128; ++n) {
      ASSERT_NEAR(run.extremal_values[n - 1], structural[n - 1], 1e-6) << "s=" << s << " N=" << n;
    }
  }
}

TEST(GreedyNumerical, Deterministic) {
  const Configuration initial = Configuration::from_turns(std::vector<double>{0.0, 0.1, 0.37});
  const auto a = greedy_numerical(initial, RieszParameter(0.5), 40);
  const auto b = greedy_numerical(initial, RieszParameter(0.5), 40);
  EXPECT_EQ(a.points.turns(), b.points.turns());
  EXPECT_EQ(a.extremal_values, b.extremal_values);
}

TEST(GreedyNumerical, ExtremalValuesMonotoneAfterInitialSet) {
  const Configuration initial = Configuration::from_turns(std::vector<double>{0.0, 0.1, 0.37});
  for (double s : {0.5, 1.0, 2.0}) {
    const auto run = greedy_numerical(initial, RieszParameter(s), 200);
    for (std::size_t n = run.first_greedy_step() + 1; n < run.points.size(); ++n) {
      ASSERT_LE(run.extremal_values[n - 2], run.extremal_values[n - 1] * (1.0 + 1e-12))
          << "s=" << s << " n=" << n;
    }
  }
}

TEST(GreedyNumerical, EnergyNotBelowRootsOfUnity) {
  const Configuration initial = Configuration::from_turns(std::vector<double>{0.0, 0.1, 0.37});
  for (double s : {0.5, 2.0}) {
    const auto run = greedy_numerical(initial, RieszParameter(s), 256);
    const auto e = energy_series_from_extremal(run.extremal_values);
    for (std::size_t n = 2; n <= 256; ++n) {
      ASSERT_LE(roots_energy(n, RieszParameter(s)), e[n - 1] * (1.0 + 1e-12));
    }
  }
}

TEST(EnergySeries, Examples) {
  EXPECT_EQ(energy_series_from_extremal({}), (std::vector<double>{0.0}));
  const std::vector<double> one{0.5};
  EXPECT_EQ(energy_series_from_extremal(one), (std::vector<double>{0.0, 1.0}));
  const std::vector<double> two{0.5, std::sqrt(2.0)};
  const auto e = energy_series_from_extremal(two);
  EXPECT_NEAR(e[2], 1.0 + 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(e[2], static_cast<double>(oracle::energy({0.0, 0.5, 0.25}, 1.0)), 1e-14);
}

TEST(EnergySeries, MatchesDirectEnergyOfGreedyRun) {
  const Configuration initial = Configuration::from_turns(std::vector<double>{0.0, 0.1, 0.37});
  const auto run = greedy_numerical(initial, RieszParameter(0.5), 64);
  const auto e = energy_series_from_extremal(run.extremal_values);
  for (std::size_t n : {2U, 3U, 10U, 64U}) {
    const double direct = energy(run.points.prefix(n), RieszParameter(0.5));
    EXPECT_NEAR(e[n - 1], direct, 1e-11 * direct);
  }
}
