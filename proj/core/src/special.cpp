#include "greedy/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "greedy/binary.hpp"
#include "greedy/errors.hpp"

namespace greedy {
namespace {

constexpr double kPi = std::numbers::pi;

// Terms of the accelerated eta series; error is about 5.8^{-n}.
constexpr int kEtaTerms = 24;

// Dirichlet eta via Cohen, Rodriguez Villegas and Zagier (algorithm 1).
double eta(double s) {
  const int n = kEtaTerms;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum += c * std::pow(static_cast<double>(k + 1), -s);
    b = static_cast<double>(k + n) * static_cast<double>(k - n) * b /
        ((static_cast<double>(k) + 0.5) * static_cast<double>(k + 1));
  }
  return sum / d;
}

void require_subcritical_or_log(double s, const char* what) {
  if (!(s >= 0.0 && s < 1.0)) {
    throw DomainError(std::string(what) + ": requires 0 <= s < 1");
  }
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn: x must be positive and finite");
  }
  return std::tgamma(x);
}

double zeta(double s) {
  if (s == 1.0) throw PoleError("zeta: pole at s = 1");
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("zeta: requires finite s > 0");
  }
  return eta(s) / -std::expm1((1.0 - s) * std::numbers::ln2);
}

double euler_gamma() noexcept { return std::numbers::egamma; }

double continuous_energy(double s) {
  require_subcritical_or_log(s, "continuous_energy");
  if (s == 0.0) return 0.0;
  return std::exp2(-s) / std::sqrt(kPi) * gamma_fn((1.0 - s) / 2.0) /
         gamma_fn(1.0 - s / 2.0);
}

double continuous_energy_alt(double s) {
  require_subcritical_or_log(s, "continuous_energy_alt");
  if (s == 0.0) return 0.0;
  const double g = gamma_fn(1.0 - s / 2.0);
  return gamma_fn(1.0 - s) / (g * g);
}

double dyadic_limit_constant(double s) {
  return std::expm1(s * std::numbers::ln2) * mersenne_limit_constant(s);
}

double mersenne_limit_constant(double s) {
  return 2.0 * zeta(s) * std::pow(2.0 * kPi, -s);
}

double critical_limit_constant() noexcept {
  return (std::numbers::egamma + std::log(8.0 / kPi)) / kPi;
}

ConstantsCatalog limit_catalog(double s, unsigned max_bits) {
  const RieszParameter param(s);
  ConstantsCatalog cat;
  cat.s = s;
  cat.regime = param.regime();
  switch (cat.regime) {
    case Regime::log:
      // First order is I_0 = 0; the second-order entries describe
      // log ||P_N|| / log(N+1), which oscillates between 0 and 1.
      cat.i_sigma = 0.0;
      cat.first_order_limit = 0.0;
      cat.limsup_second_order = 1.0;
      cat.liminf_bracket = std::pair{0.0, 0.0};
      break;
    case Regime::subcritical: {
      const double c = dyadic_limit_constant(s);
      const double landmark = 1.0 / std::expm1(s * std::numbers::ln2);
      const auto search = search_g_extremes(s, max_bits);
      cat.i_sigma = continuous_energy(s);
      cat.zeta_s = zeta(s);
      cat.first_order_limit = *cat.i_sigma;
      cat.limsup_second_order = c;
      // liminf = gbar * c with c < 0 and max(search, landmark) <= gbar < 2^s/(2^s-1)
      cat.liminf_bracket = std::pair{(landmark + 1.0) * c,
                                     std::max(search.best_sup(), landmark) * c};
      break;
    }
    case Regime::critical: {
      const double c = critical_limit_constant();
      const auto search = search_lambda(max_bits);
      cat.first_order_limit = 1.0 / kPi;
      cat.limsup_second_order = c;
      cat.liminf_bracket =
          std::pair{c + lambda_lower_bound() / kPi,
                    c + std::min(search.best_inf(), -2.0 * std::numbers::ln2) / kPi};
      break;
    }
    case Regime::supercritical: {
      const double c = dyadic_limit_constant(s);
      const double landmark = 1.0 / std::expm1(s * std::numbers::ln2);
      const auto search = search_g_extremes(s, max_bits);
      cat.zeta_s = zeta(s);
      cat.first_order_limit = c;
      cat.limsup_second_order = c;
      cat.liminf_bracket = std::pair{0.0, std::min(search.best_inf(), landmark) * c};
      break;
    }
  }
  return cat;
}

}  // namespace greedy
