#pragma once

#include <optional>
#include <utility>

#include "greedy/circle.hpp"

namespace greedy {

/// Gamma(x) for x > 0; DomainError otherwise.
double gamma_fn(double x);

/// Riemann zeta for real s > 0, s != 1. PoleError at s = 1, DomainError for
/// s <= 0.
double zeta(double s);

/// Euler-Mascheroni constant.
double euler_gamma() noexcept;

/// I_s(sigma) for 0 <= s < 1 (0 at s = 0), from
/// 2^{-s}/sqrt(pi) * Gamma((1-s)/2) / Gamma(1-s/2). DomainError otherwise.
double continuous_energy(double s);

/// The same quantity as Gamma(1-s) / Gamma(1-s/2)^2, kept separate so the
/// two forms can be checked against each other.
double continuous_energy_alt(double s);

/// (2^s - 1) 2 zeta(s) / (2 pi)^s: limit along N = 2^n of the subcritical
/// second-order and supercritical first-order normalized sequences.
double dyadic_limit_constant(double s);

/// 2 zeta(s) / (2 pi)^s: limit along N = 2^p - 1 of the same sequences.
double mersenne_limit_constant(double s);

/// (gamma + log(8/pi)) / pi, limit of T(N) as N -> infinity.
double critical_limit_constant() noexcept;

struct ConstantsCatalog {
  double s = 0.0;
  Regime regime = Regime::log;
  std::optional<double> i_sigma;
  std::optional<double> zeta_s;
  double first_order_limit = 0.0;
  std::optional<double> limsup_second_order;
  // [lower, upper]; the true liminf is somewhere inside.
  std::optional<std::pair<double, double>> liminf_bracket;
};

/// Regime-dependent limit constants. Liminf brackets combine a Theta search
/// up to max_bits with the known landmarks 1/(2^s-1) and -2 log 2.
/// DomainError for negative or non-finite s.
ConstantsCatalog limit_catalog(double s, unsigned max_bits = 16);

}  // namespace greedy
