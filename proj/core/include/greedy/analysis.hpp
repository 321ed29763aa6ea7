#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "greedy/binary.hpp"
#include "greedy/sequences.hpp"

namespace greedy {

enum class SeriesKind {
  R_subcritical,              // (L_s(N) - N^2 I_s) / N^{1+s}
  W_subcritical,              // (U_s(N) - N I_s) / N^s
  W1_critical,                // U_1(N) / (N log N), N >= 2
  T_critical,                 // (U_1(N) - N log N / pi) / N
  W_supercritical,            // U_s(N) / N^s
  log_ratio,                  // log ||P_N|| / log(N + 1)
  second_order_1,             // (U_{N,1}(a_N) - N log N / pi) / N
  second_order_subcritical,   // (U_{N,s}(a_N) - N I_s) / N^s
  first_order_supercritical,  // U_{N,s}(a_N) / N^s
};

std::string_view to_string(SeriesKind kind) noexcept;
std::optional<SeriesKind> series_kind_from_string(std::string_view name) noexcept;

/// Regime a kind belongs to; s must match it.
Regime series_regime(SeriesKind kind) noexcept;

struct SeriesEntry {
  std::uint64_t n = 0;
  double value = 0.0;
};

struct NormalizedSeries {
  double s = 0.0;
  SeriesKind kind = SeriesKind::log_ratio;
  std::vector<SeriesEntry> entries;

  /// Value at N; DomainError if N is not in the series.
  [[nodiscard]] double at(std::uint64_t n) const;
};

// Largest N accepted by any series, and by the kinds that sum the roots of
// unity directly (quadratic cost).
inline constexpr std::uint64_t kSeriesBudget = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDirectSeriesBudget = std::uint64_t{1} << 15;

/// Entries for N = 1..n_max (W1_critical starts at N = 2). DomainError if
/// s is outside the kind's regime or n_max < 2; BudgetError past the budgets
/// above.
NormalizedSeries normalized_series(SeriesKind kind, double s, std::uint64_t n_max);

/// second_order_subcritical for 0 < s < 1.
NormalizedSeries extremal_second_order_series(double s, std::uint64_t n_max);

/// The extremal kinds (second_order_subcritical, second_order_1,
/// first_order_supercritical) rebuilt term by term from the dyadic values:
/// e.g. sum_k W_s(2^{n_k}) (2^{n_k}/N)^s in the subcritical case.
NormalizedSeries dyadic_reconstruction(SeriesKind kind, double s, std::uint64_t n_max);

/// Limit point indexed by theta: G(theta; s) times the dyadic constant for
/// s != 1, (gamma + log(8/pi) + Lambda(theta)) / pi for s = 1.
/// DomainError for s <= 0.
double theta_limit_prediction(const ThetaVector& theta, double s);

struct LimitPointCheck {
  std::uint64_t n = 0;
  double predicted = 0.0;
  double observed = 0.0;
  double gap = 0.0;
};

/// Evaluates the normalized extremal sequence at N = 2^depth M + (2^z - 1),
/// where M is theta's odd denominator and z its number of trailing zeros,
/// and compares with theta_limit_prediction. BudgetError if N > budget.
LimitPointCheck limit_point_check(const ThetaVector& theta, double s, unsigned depth,
                                  std::uint64_t budget = kSeriesBudget);

/// 1/(2N) + max_i |x_(i) - (2i-1)/(2N)| over the sorted turns. An empty set
/// has discrepancy 1.
double star_discrepancy(std::span<const double> turns);

struct DiscrepancyReport {
  std::size_t n = 0;
  double star_discrepancy = 0.0;
  double energy_gap = 0.0;  // E_s(alpha_N) / N^2 - I_s(sigma)
};

/// Report for the section of the first n points of run. Requires
/// 1 <= n <= run size and 0 <= s < 1.
DiscrepancyReport uniform_distribution_report(const GreedyRun& run, std::size_t n);

}  // namespace greedy
