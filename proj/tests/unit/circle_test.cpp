#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "greedy/circle.hpp"
#include "greedy/errors.hpp"
#include "greedy/summation.hpp"
#include "oracles.hpp"

using namespace greedy;

namespace {

CirclePoint at(double t) { return CirclePoint::from_turns(t); }

}  // namespace

TEST(CirclePoint, DyadicIsReducedToLowestTerms) {
  const auto p = CirclePoint::dyadic(4, 3);
  ASSERT_TRUE(p.is_dyadic());
  EXPECT_EQ(p.dyadic_angle()->numerator, 1U);
  EXPECT_EQ(p.dyadic_angle()->level, 1U);
  EXPECT_EQ(p.turns(), 0.5);
  EXPECT_EQ(CirclePoint::dyadic(0, 7), CirclePoint{});
}

TEST(CirclePoint, RejectsBadDyadic) {
  EXPECT_THROW(CirclePoint::dyadic(8, 3), DomainError);
  EXPECT_THROW(CirclePoint::dyadic(1, 53), DomainError);
}

TEST(CirclePoint, TurnsAreReducedIntoUnitInterval) {
  EXPECT_DOUBLE_EQ(at(1.25).turns(), 0.25);
  EXPECT_DOUBLE_EQ(at(-0.25).turns(), 0.75);
  EXPECT_EQ(at(1.0).turns(), 0.0);
  EXPECT_THROW(at(NAN), DomainError);
  EXPECT_THROW(at(INFINITY), DomainError);
}

TEST(CirclePoint, QuarterTurnsAreExactComplex) {
  EXPECT_EQ(CirclePoint::dyadic(1, 2).to_complex(), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(CirclePoint::dyadic(1, 1).to_complex(), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(CirclePoint::dyadic(3, 2).to_complex(), std::complex<double>(0.0, -1.0));
}

TEST(ChordDistance, Examples) {
  EXPECT_DOUBLE_EQ(chord_distance(at(0.0), at(0.5)), 2.0);
  EXPECT_DOUBLE_EQ(chord_distance(at(0.0), at(0.25)), std::sqrt(2.0));
  EXPECT_NEAR(chord_distance(at(0.0), at(1.0 / 3.0)),
              static_cast<double>(oracle::chord(0.0L, 1.0L / 3.0L)), 1e-15);
  EXPECT_NEAR(chord_distance(at(0.0), at(1.0 / 3.0)), std::sqrt(3.0), 1e-15);
}

TEST(ChordDistance, ZeroSignalsCoincidence) {
  EXPECT_EQ(chord_distance(at(0.3), at(0.3)), 0.0);
  EXPECT_EQ(chord_distance(CirclePoint::dyadic(1, 2), at(0.25)), 0.0);
  EXPECT_EQ(chord_distance(at(0.0), at(1.0 - 1e-18)), 0.0);
}

TEST(ChordDistance, AccurateForNearbyDyadicPoints) {
  const double d = chord_distance(CirclePoint::dyadic(1, 40), CirclePoint{});
  EXPECT_NEAR(d / (2.0 * std::numbers::pi * std::ldexp(1.0, -40)), 1.0, 1e-15);
}

TEST(TurnDifference, WrapsAcrossZero) {
  EXPECT_DOUBLE_EQ(turn_difference(at(0.9), at(0.1)), -0.2);
  EXPECT_DOUBLE_EQ(turn_difference(CirclePoint::dyadic(7, 3), CirclePoint::dyadic(1, 3)), -0.25);
}

TEST(Kernel, Examples) {
  EXPECT_DOUBLE_EQ(kernel(RieszParameter(0.0), at(0.0), at(0.5)), -std::log(2.0));
  EXPECT_DOUBLE_EQ(kernel(RieszParameter(1.0), at(0.0), at(0.5)), 0.5);
  EXPECT_NEAR(kernel(RieszParameter(2.0), at(0.0), at(0.25)), 0.5, 1e-15);
  EXPECT_THROW(kernel(RieszParameter(1.0), at(0.2), at(0.2)), CoincidentPointsError);
}

TEST(Kernel, SymmetricExactly) {
  for (double s : {0.0, 0.3, 1.0, 2.0, 3.7}) {
    const RieszParameter p(s);
    EXPECT_EQ(kernel(p, at(0.123), at(0.771)), kernel(p, at(0.771), at(0.123)));
  }
}

TEST(RieszParameter, Regimes) {
  EXPECT_EQ(RieszParameter(0.0).regime(), Regime::log);
  EXPECT_EQ(RieszParameter(0.4).regime(), Regime::subcritical);
  EXPECT_EQ(RieszParameter(1.0).regime(), Regime::critical);
  EXPECT_EQ(RieszParameter(1.2).regime(), Regime::supercritical);
  EXPECT_THROW(RieszParameter(-0.1), DomainError);
  EXPECT_THROW(RieszParameter(NAN), DomainError);
}

TEST(Configuration, RejectsDuplicates) {
  EXPECT_THROW((Configuration{at(0.25), at(0.5), at(1.25)}), CoincidentPointsError);
  Configuration c{at(0.1)};
  EXPECT_THROW(c.append(at(0.1)), CoincidentPointsError);
  c.append(at(0.2));
  EXPECT_EQ(c.size(), 2U);
  EXPECT_EQ(c.prefix(1).size(), 1U);
  EXPECT_EQ(c.prefix(9).size(), 2U);
}

TEST(Potential, Examples) {
  const Configuration one{CirclePoint{}};
  EXPECT_DOUBLE_EQ(potential(one, at(0.5), RieszParameter(1.0)), 0.5);
  EXPECT_DOUBLE_EQ(potential(one, at(0.5), RieszParameter(0.0)), -std::log(2.0));
  const Configuration three{at(0.0), at(0.5), at(0.25)};
  EXPECT_NEAR(potential(three, at(0.75), RieszParameter(1.0)), std::sqrt(2.0) + 0.5, 1e-15);
  EXPECT_NEAR(potential(three, at(0.75), RieszParameter(1.0)),
              static_cast<double>(oracle::potential({0.0, 0.5, 0.25}, 0.75, 1.0)), 1e-15);
  EXPECT_THROW(potential(three, at(0.5), RieszParameter(1.0)), CoincidentPointsError);
}

TEST(Energy, Examples) {
  const RieszParameter one(1.0);
  EXPECT_DOUBLE_EQ(energy(Configuration{at(0.0), at(0.5)}, one), 1.0);
  EXPECT_NEAR(energy(roots_of_unity(3), one), 2.0 * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(energy(roots_of_unity(4), RieszParameter(2.0)), 5.0, 1e-14);
  EXPECT_EQ(energy(Configuration{at(0.3)}, one), 0.0);
  EXPECT_EQ(energy(Configuration{}, one), 0.0);
}

TEST(Energy, MatchesOracleForIrregularPoints) {
  const std::vector<double> t{0.0, 0.13, 0.4, 0.41, 0.77, 0.9};
  for (double s : {0.0, 0.5, 1.0, 2.5}) {
    const double e = energy(Configuration::from_turns(t), RieszParameter(s));
    EXPECT_NEAR(e, static_cast<double>(oracle::energy(t, s)), 1e-12 * std::max(1.0, std::abs(e)));
  }
}

TEST(RootsEnergy, Examples) {
  EXPECT_EQ(roots_energy(1, RieszParameter(0.7)), 0.0);
  EXPECT_DOUBLE_EQ(roots_energy(2, RieszParameter(1.0)), 1.0);
  EXPECT_NEAR(roots_energy(4, RieszParameter(2.0)), 5.0, 1e-14);
  EXPECT_THROW(roots_energy(0, RieszParameter(1.0)), DomainError);
  EXPECT_THROW(roots_energy(4, RieszParameter(0.0)), DomainError);
}

TEST(RootsEnergy, AgreesWithDirectEnergy) {
  for (std::size_t n : {2U, 3U, 5U, 16U, 37U, 128U}) {
    for (double s : {0.25, 1.0, 3.0}) {
      const double l = roots_energy(n, RieszParameter(s));
      EXPECT_NEAR(l, static_cast<double>(oracle::energy(oracle::roots(n), s)), 1e-11 * l);
    }
  }
}

TEST(MidpointPotential, Examples) {
  EXPECT_DOUBLE_EQ(midpoint_potential(1, RieszParameter(1.0)), 0.5);
  EXPECT_NEAR(midpoint_potential(2, RieszParameter(1.0)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(midpoint_potential(1, RieszParameter(0.5)), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(midpoint_potential(0, RieszParameter(1.0)), DomainError);
}

TEST(MidpointPotential, MatchesOracleAndRootsEnergyDifference) {
  for (std::size_t n : {1U, 2U, 3U, 7U, 64U, 100U}) {
    for (double s : {0.5, 1.0, 1.5, 2.0}) {
      const RieszParameter p(s);
      const double u = midpoint_potential(n, p);
      EXPECT_NEAR(u, static_cast<double>(oracle::midpoint(n, s)), 1e-12 * u);
      const double x = static_cast<double>(n);
      EXPECT_NEAR(u, roots_energy(2 * n, p) / (2 * x) - roots_energy(n, p) / x, 1e-10 * u);
    }
  }
}

TEST(LejaSupNorm, Examples) {
  const Configuration one{CirclePoint{}};
  EXPECT_DOUBLE_EQ(leja_sup_norm_log(one, at(0.5)), std::log(2.0));
  const Configuration three{CirclePoint::dyadic(0, 0), CirclePoint::dyadic(1, 1),
                            CirclePoint::dyadic(1, 2)};
  EXPECT_NEAR(leja_sup_norm_log(three, CirclePoint::dyadic(3, 2)), std::log(4.0), 1e-15);
  EXPECT_THROW(leja_sup_norm_log(three, CirclePoint{}), CoincidentPointsError);
}

TEST(PairwiseSum, ReversalChangesLittle) {
  std::vector<double> v;
  for (int k = 1; k <= 5000; ++k) v.push_back(std::pow(std::sin(k * 0.37), -2.0) + 1.0 / k);
  std::vector<double> r(v.rbegin(), v.rend());
  const double a = greedy::pairwise_sum(v);
  const double b = greedy::pairwise_sum(r);
  EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(a));
}
