#include "greedy/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "greedy/errors.hpp"
#include "greedy/special.hpp"

namespace greedy {
namespace {

constexpr double kPi = std::numbers::pi;

struct KindName {
  SeriesKind kind;
  std::string_view name;
  Regime regime;
};

constexpr std::array<KindName, 9> kKinds{{
    {SeriesKind::R_subcritical, "R_subcritical", Regime::subcritical},
    {SeriesKind::W_subcritical, "W_subcritical", Regime::subcritical},
    {SeriesKind::W1_critical, "W1_critical", Regime::critical},
    {SeriesKind::T_critical, "T_critical", Regime::critical},
    {SeriesKind::W_supercritical, "W_supercritical", Regime::supercritical},
    {SeriesKind::log_ratio, "log_ratio", Regime::log},
    {SeriesKind::second_order_1, "second_order_1", Regime::critical},
    {SeriesKind::second_order_subcritical, "second_order_subcritical", Regime::subcritical},
    {SeriesKind::first_order_supercritical, "first_order_supercritical",
     Regime::supercritical},
}};

const KindName& lookup(SeriesKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  return kKinds.front();
}

bool is_extremal(SeriesKind kind) {
  return kind == SeriesKind::second_order_1 || kind == SeriesKind::second_order_subcritical ||
         kind == SeriesKind::first_order_supercritical;
}

RieszParameter checked_parameter(SeriesKind kind, double s, const char* what) {
  const RieszParameter param(s);
  if (param.regime() != series_regime(kind)) {
    throw DomainError(std::string(what) + ": kind " + std::string(to_string(kind)) +
                      " needs the " + std::string(to_string(series_regime(kind))) +
                      " regime, got s = " + std::to_string(s));
  }
  return param;
}

double nd(std::uint64_t n) { return static_cast<double>(n); }

// The normalization applied to an extremal value U_{N,s}(a_N).
double normalize_extremal(SeriesKind kind, double s, double i_sigma, std::uint64_t n,
                          double u) {
  const double x = nd(n);
  switch (kind) {
    case SeriesKind::second_order_subcritical: return (u - x * i_sigma) / std::pow(x, s);
    case SeriesKind::second_order_1: return (u - x * std::log(x) / kPi) / x;
    default: return u / std::pow(x, s);
  }
}

double direct_value(SeriesKind kind, RieszParameter param, double i_sigma, std::uint64_t n) {
  const double s = param.value();
  const double x = nd(n);
  switch (kind) {
    case SeriesKind::R_subcritical:
      return (roots_energy(n, param) - x * x * i_sigma) / std::pow(x, 1.0 + s);
    case SeriesKind::W_subcritical:
      return (midpoint_potential(n, param) - x * i_sigma) / std::pow(x, s);
    case SeriesKind::W1_critical: return midpoint_potential(n, param) / (x * std::log(x));
    case SeriesKind::T_critical:
      return (midpoint_potential(n, param) - x * std::log(x) / kPi) / x;
    case SeriesKind::W_supercritical: return midpoint_potential(n, param) / std::pow(x, s);
    case SeriesKind::log_ratio:
      // both logs are of exact powers of two at N = 2^m - 1, so the ratio is exactly 1 there
      return std::log(std::ldexp(1.0, static_cast<int>(tau_b(n)))) / std::log(x + 1.0);
    default: return 0.0;
  }
}

}  // namespace

std::string_view to_string(SeriesKind kind) noexcept { return lookup(kind).name; }

std::optional<SeriesKind> series_kind_from_string(std::string_view name) noexcept {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

Regime series_regime(SeriesKind kind) noexcept { return lookup(kind).regime; }

double NormalizedSeries::at(std::uint64_t n) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), n,
                                   [](const SeriesEntry& e, std::uint64_t v) { return e.n < v; });
  if (it == entries.end() || it->n != n) {
    throw DomainError("NormalizedSeries::at: N = " + std::to_string(n) + " not in series");
  }
  return it->value;
}

NormalizedSeries normalized_series(SeriesKind kind, double s, std::uint64_t n_max) {
  const RieszParameter param = checked_parameter(kind, s, "normalized_series");
  if (n_max < 2) throw DomainError("normalized_series: N_max must be >= 2");
  if (n_max > kSeriesBudget) {
    throw BudgetError("normalized_series: N_max exceeds " + std::to_string(kSeriesBudget));
  }
  const bool direct = !is_extremal(kind) && kind != SeriesKind::log_ratio;
  if (direct && n_max > kDirectSeriesBudget) {
    throw BudgetError("normalized_series: N_max exceeds " + std::to_string(kDirectSeriesBudget) +
                      " for " + std::string(to_string(kind)));
  }

  const double i_sigma = param.regime() == Regime::subcritical ? continuous_energy(s) : 0.0;
  NormalizedSeries out;
  out.s = s;
  out.kind = kind;
  out.entries.reserve(n_max);
  if (is_extremal(kind)) {
    const auto table = dyadic_table_for(n_max, param);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      out.entries.push_back({n, normalize_extremal(kind, s, i_sigma, n, table.extremal_value(n))});
    }
    return out;
  }
  const std::uint64_t first = kind == SeriesKind::W1_critical ? 2 : 1;
  for (std::uint64_t n = first; n <= n_max; ++n) {
    out.entries.push_back({n, direct_value(kind, param, i_sigma, n)});
  }
  return out;
}

NormalizedSeries extremal_second_order_series(double s, std::uint64_t n_max) {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("extremal_second_order_series: requires 0 < s < 1");
  }
  return normalized_series(SeriesKind::second_order_subcritical, s, n_max);
}

NormalizedSeries dyadic_reconstruction(SeriesKind kind, double s, std::uint64_t n_max) {
  if (!is_extremal(kind)) {
    throw DomainError("dyadic_reconstruction: kind must be an extremal series");
  }
  const RieszParameter param = checked_parameter(kind, s, "dyadic_reconstruction");
  if (n_max < 1 || n_max > kSeriesBudget) {
    throw BudgetError("dyadic_reconstruction: N_max out of range");
  }
  const auto table = dyadic_table_for(n_max, param);
  const double i_sigma = param.regime() == Regime::subcritical ? continuous_energy(s) : 0.0;

  // Normalized dyadic value at 2^j: W_s, T or U/N^s depending on the kind.
  std::vector<double> dyadic;
  for (unsigned j = 0; j <= table.max_exponent(); ++j) {
    const std::uint64_t m = std::uint64_t{1} << j;
    dyadic.push_back(normalize_extremal(kind, s, i_sigma, m, table.at(j)));
  }

  NormalizedSeries out;
  out.s = s;
  out.kind = kind;
  out.entries.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto e = decompose(n).exponents;
    double acc = 0.0;
    for (unsigned j : e) {
      const double ratio = std::ldexp(1.0, static_cast<int>(j)) / nd(n);
      if (kind == SeriesKind::second_order_1) {
        acc += ratio * (dyadic[j] + std::log(ratio) / kPi);
      } else {
        acc += dyadic[j] * std::pow(ratio, s);
      }
    }
    out.entries.push_back({n, acc});
  }
  return out;
}

double theta_limit_prediction(const ThetaVector& theta, double s) {
  if (!(s > 0.0)) throw DomainError("theta_limit_prediction: requires s > 0");
  if (s == 1.0) return critical_limit_constant() + lambda_value(theta) / kPi;
  return g_value(theta, s) * dyadic_limit_constant(s);
}

LimitPointCheck limit_point_check(const ThetaVector& theta, double s, unsigned depth,
                                  std::uint64_t budget) {
  if (depth < 1) throw DomainError("limit_point_check: depth must be >= 1");
  const RieszParameter param(s);
  if (param.is_log()) throw DomainError("limit_point_check: requires s > 0");
  const std::uint64_t m = theta.odd_denominator();
  const unsigned z = theta.trailing_zeros();
  if (depth + static_cast<unsigned>(std::bit_width(m)) > 62 || z > depth) {
    throw BudgetError("limit_point_check: witness index overflows");
  }
  const std::uint64_t n = (m << depth) + ((std::uint64_t{1} << z) - 1);
  if (n > budget) {
    throw BudgetError("limit_point_check: N = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget));
  }
  SeriesKind kind = SeriesKind::first_order_supercritical;
  if (param.regime() == Regime::subcritical) kind = SeriesKind::second_order_subcritical;
  if (param.regime() == Regime::critical) kind = SeriesKind::second_order_1;
  const double i_sigma = param.regime() == Regime::subcritical ? continuous_energy(s) : 0.0;

  LimitPointCheck out;
  out.n = n;
  out.predicted = theta_limit_prediction(theta, s);
  out.observed =
      normalize_extremal(kind, s, i_sigma, n, dyadic_table_for(n, param).extremal_value(n));
  out.gap = std::abs(out.observed - out.predicted);
  return out;
}

double star_discrepancy(std::span<const double> turns) {
  if (turns.empty()) return 1.0;
  std::vector<double> x(turns.begin(), turns.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double target = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * n);
    worst = std::max(worst, std::abs(x[i] - target));
  }
  return 1.0 / (2.0 * n) + worst;
}

DiscrepancyReport uniform_distribution_report(const GreedyRun& run, std::size_t n) {
  const double s = run.s.value();
  if (!(s < 1.0)) {
    throw DomainError("uniform_distribution_report: requires 0 <= s < 1");
  }
  if (n < 1 || n > run.points.size()) {
    throw DomainError("uniform_distribution_report: section length out of range");
  }
  const auto turns = run.points.prefix(n).turns();
  const auto energies = energy_series_from_extremal(
      std::span<const double>(run.extremal_values).first(n - 1));
  const double x = static_cast<double>(n);

  DiscrepancyReport out;
  out.n = n;
  out.star_discrepancy = star_discrepancy(turns);
  out.energy_gap = energies.back() / (x * x) - continuous_energy(s);
  return out;
}

}  // namespace greedy
