#pragma once

// Independent reference computations for the tests. Nothing here shares code
// with the library: distances come from complex arithmetic in radians and
// sums are plain long double loops.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

// Values frozen from mpmath at 30 digits.
inline constexpr double kZetaHalf = -1.4603545088095868;
inline constexpr double kZeta3 = 1.2020569031595943;
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kGammaThreeQuarters = 1.2254167024651776;
inline constexpr double kContinuousEnergyHalf = 1.1803405990160962;
inline constexpr double kSubcriticalDyadicHalf = -0.4826392884367166;  // (sqrt2-1) 2 zeta(1/2) / sqrt(2 pi)
inline constexpr double kSubcriticalMersenneHalf = -1.1651943158780213;  // 2 zeta(1/2) / sqrt(2 pi)
inline constexpr double kCriticalSecondOrder = 0.4812614133803565;  // (gamma + log(8/pi)) / pi
inline constexpr double kSupercriticalThree = 0.0678443143051044;  // 7 zeta(3) / (4 pi^3)
inline constexpr double kLambdaTwoThirds = -0.6365141682948128;
inline constexpr double kLambdaFourSevenths = -0.9556998911125343;
inline constexpr double kGTwoThirdsHalf = 1.3938468501173518;

inline std::complex<long double> on_circle(long double turns) {
  const long double a = 2.0L * std::numbers::pi_v<long double> * turns;
  return {std::cos(a), std::sin(a)};
}

inline long double chord(long double x, long double y) {
  return std::abs(on_circle(x) - on_circle(y));
}

inline long double riesz(long double s, long double d) {
  return s == 0.0L ? -std::log(d) : std::pow(d, -s);
}

inline long double potential(const std::vector<double>& turns, double z, double s) {
  long double acc = 0.0L;
  for (double t : turns) acc += riesz(s, chord(t, z));
  return acc;
}

inline long double energy(const std::vector<double>& turns, double s) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    for (std::size_t j = 0; j < turns.size(); ++j) {
      if (i != j) acc += riesz(s, chord(turns[i], turns[j]));
    }
  }
  return acc;
}

inline std::vector<double> roots(std::size_t n) {
  std::vector<double> t;
  for (std::size_t k = 0; k < n; ++k) t.push_back(static_cast<double>(k) / static_cast<double>(n));
  return t;
}

// Van der Corput radical inverse in base 2, computed digit by digit.
inline double van_der_corput(std::size_t n) {
  double x = 0.0;
  double scale = 0.5;
  while (n) {
    if (n & 1U) x += scale;
    scale /= 2.0;
    n >>= 1;
  }
  return x;
}

// Potential of the n-th roots of unity at the midpoint between two of them.
inline long double midpoint(std::size_t n, double s) {
  return potential(roots(n), 0.5 / static_cast<double>(n), s);
}

inline long double harmonic_minus_log(std::size_t n) {
  long double h = 0.0L;
  for (std::size_t k = n; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
  return h - std::log(static_cast<long double>(n));
}

}  // namespace oracle
