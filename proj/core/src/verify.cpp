#include "greedy/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "greedy/analysis.hpp"
#include "greedy/binary.hpp"
#include "greedy/circle.hpp"
#include "greedy/errors.hpp"
#include "greedy/sequences.hpp"
#include "greedy/special.hpp"
#include "greedy/summation.hpp"

namespace greedy {
namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(b), 1e-300);
  return std::abs(a - b) / scale;
}

std::string tagged(const char* name, double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s[s=%g]", name, s);
  return buf;
}

class Collector {
 public:
  explicit Collector(std::vector<CheckResult>& out) : out_(out) {}

  // residual <= budget passes
  void bound(std::string name, double residual, double budget) {
    out_.push_back({std::move(name), residual <= budget, residual, budget});
  }
  // residual counts violations
  void count(std::string name, std::size_t violations) {
    bound(std::move(name), static_cast<double>(violations), 0.0);
  }

 private:
  std::vector<CheckResult>& out_;
};

std::uint64_t largest_power_of_two(std::uint64_t n) { return std::bit_floor(n); }

void check_binary(Collector& c) {
  std::size_t bad = 0;
  constexpr std::uint64_t kLimit = 1'000'000;
  for (std::uint64_t n = 1; n <= kLimit; ++n) {
    const auto e = decompose(n);
    const unsigned t = tau_b(n);
    if (e.value() != n || e.length() != t) ++bad;
    if (n < (std::uint64_t{1} << t) - 1) ++bad;
    if (tau_b(2 * n) != t) ++bad;
  }
  c.count("binary_expansion", bad);
}

void check_norm(Collector& c, std::uint64_t n_max) {
  const auto seq = canonical_structural(n_max + 1);
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double lhs = leja_sup_norm_log(seq.prefix(n), seq[n]);
    worst = std::max(worst, std::abs(lhs - tau_b(n) * std::numbers::ln2));
  }
  c.bound("norm_identity", worst, 1e-7);

  const auto ratio = normalized_series(SeriesKind::log_ratio, 0.0, n_max);
  double mersenne = 0.0;
  for (std::uint64_t m = 1; (std::uint64_t{1} << m) - 1 <= n_max; ++m) {
    mersenne = std::max(mersenne, std::abs(ratio.at((std::uint64_t{1} << m) - 1) - 1.0));
  }
  c.bound("mersenne_ratio_exact", mersenne, 0.0);

  // log ||P_{2^k N}|| / log(2^k N + 1) along k, measured on the sequence itself
  const auto long_seq = canonical_structural((std::uint64_t{64} << 6) + 1);
  std::size_t bad = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    double prev = INFINITY;
    for (unsigned k = 0; k <= 6; ++k) {
      const std::uint64_t m = n << k;
      const double r = leja_sup_norm_log(long_seq.prefix(m), long_seq[m]) /
                       std::log(static_cast<double>(m) + 1.0);
      if (!(r < prev)) ++bad;
      prev = r;
    }
  }
  c.count("dyadic_multiple_ratio_decreasing", bad);
}

void check_structure(Collector& c) {
  std::size_t bad = 0;
  for (unsigned m = 0; m <= 16; ++m) {
    const std::size_t n = std::size_t{1} << m;
    auto a = canonical_structural(n).turns();
    auto b = roots_of_unity(n).turns();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) ++bad;
  }
  c.count("structural_sections_are_roots", bad);
}

void check_roots(Collector& c, RieszParameter s, std::uint64_t n_max) {
  const double sv = s.value();
  const std::uint64_t top = std::min<std::uint64_t>(n_max, 1024);
  double neighbour = 0.0;
  double midpoint = 0.0;
  for (std::uint64_t n = 2; n <= top; ++n) {
    const auto roots = roots_of_unity(n);
    const double sum = pairwise_sum(1, n, [&](std::size_t k) { return kernel(s, roots[k], roots[0]); });
    neighbour = std::max(neighbour, rel_diff(sum, roots_energy(n, s) / static_cast<double>(n)));
  }
  for (std::uint64_t n = 1; n <= top; ++n) {
    const double x = static_cast<double>(n);
    const double rhs = roots_energy(2 * n, s) / (2.0 * x) - roots_energy(n, s) / x;
    midpoint = std::max(midpoint, rel_diff(midpoint_potential(n, s), rhs));
  }
  c.bound(tagged("roots_neighbour_sum", sv), neighbour, 1e-10);
  c.bound(tagged("midpoint_from_roots_energy", sv), midpoint, 1e-10);

  double direct = 0.0;
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(n_max, 512);
       n += n < 128 ? 1 : n) {
    direct = std::max(direct, rel_diff(energy(roots_of_unity(n), s), roots_energy(n, s)));
  }
  c.bound(tagged("roots_energy_vs_direct", sv), direct, 1e-9);
}

void check_decomposition(Collector& c, RieszParameter s, std::uint64_t n_max) {
  const double sv = s.value();
  const auto seq = canonical_structural(n_max + 1);
  const auto table = dyadic_table_for(n_max, s);
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    worst = std::max(worst, rel_diff(potential(seq.prefix(n), seq[n], s), table.extremal_value(n)));
  }
  c.bound(tagged("binary_decomposition", sv), worst, 1e-9);

  const auto values = extremal_values_structural(std::min<std::uint64_t>(n_max, 256), s);
  const auto energies = energy_series_from_extremal(values);
  double energy_gap = 0.0;
  for (std::uint64_t n = 2; n <= values.size(); ++n) {
    energy_gap = std::max(energy_gap, rel_diff(energies[n - 1], energy(seq.prefix(n), s)));
  }
  c.bound(tagged("energy_from_extremal", sv), energy_gap, 1e-9);
}

void check_s2(Collector& c, std::uint64_t n_max) {
  const RieszParameter two(2.0);
  double brute = 0.0;
  for (std::uint64_t n = 2; n <= 64; ++n) {
    const double x = static_cast<double>(n);
    brute = std::max(brute, rel_diff(energy(roots_of_unity(n), two), x * (x * x - 1.0) / 12.0));
  }
  c.bound("s2_brute_force", brute, 1e-10);

  double closed = 0.0;
  for (std::uint64_t n = 1; n <= std::max<std::uint64_t>(n_max, 4096); ++n) {
    const double x = static_cast<double>(n);
    if (n >= 2) closed = std::max(closed, rel_diff(roots_energy(n, two) / x, (x * x - 1.0) / 12.0));
    closed = std::max(closed, rel_diff(midpoint_potential(n, two), x * x / 4.0));
  }
  c.bound("s2_closed_form", closed, 1e-10);

  const auto table = dyadic_table_for(n_max, two);
  double extremal = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    double exact = 0.0;
    for (unsigned j : decompose(n).exponents) exact += std::ldexp(1.0, 2 * static_cast<int>(j)) / 4.0;
    extremal = std::max(extremal, rel_diff(table.extremal_value(n), exact));
  }
  c.bound("s2_extremal_exact", extremal, 1e-10);
}

void check_subcritical(Collector& c, double s, std::uint64_t n_max) {
  const RieszParameter param(s);
  const double i_sigma = continuous_energy(s);
  const auto table = dyadic_table_for(n_max, param);
  std::size_t above = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (!(table.extremal_value(n) < static_cast<double>(n) * i_sigma)) ++above;
  }
  c.count(tagged("extremal_below_continuous_energy", s), above);

  double doubling = 0.0;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(n_max, 1024); ++n) {
    const double x = static_cast<double>(n);
    const double w = (midpoint_potential(n, param) - x * i_sigma) / std::pow(x, s);
    auto r = [&](std::uint64_t m) {
      const double y = static_cast<double>(m);
      return (roots_energy(m, param) - y * y * i_sigma) / std::pow(y, 1.0 + s);
    };
    doubling = std::max(doubling, std::abs(w - (std::exp2(s) * r(2 * n) - r(n))));
  }
  c.bound(tagged("dyadic_doubling_decomposition", s), doubling, 1e-12);

  const auto series = extremal_second_order_series(s, n_max);
  const auto rebuilt = dyadic_reconstruction(SeriesKind::second_order_subcritical, s, n_max);
  double recon = 0.0;
  for (std::size_t i = 0; i < series.entries.size(); ++i) {
    recon = std::max(recon, std::abs(series.entries[i].value - rebuilt.entries[i].value));
  }
  c.bound(tagged("second_order_reconstruction", s), recon, 1e-10);

  const std::uint64_t top = largest_power_of_two(n_max);
  c.bound(tagged("dyadic_second_order_limit", s),
          std::abs(series.at(top) - dyadic_limit_constant(s)), 1e-4);
}

void check_critical(Collector& c, std::uint64_t n_max) {
  const RieszParameter one(1.0);
  double identity = 0.0;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(n_max, 1024); ++n) {
    const double x = static_cast<double>(n);
    const double t = (midpoint_potential(n, one) - x * std::log(x) / kPi) / x;
    auto rest = [&](std::uint64_t m) {
      const double y = static_cast<double>(m);
      return (roots_energy(m, one) - y * y * std::log(y) / kPi) / (y * y);
    };
    const double rhs = 2.0 * rest(2 * n) - rest(n) + std::log(4.0) / kPi;
    identity = std::max(identity, std::abs(t - rhs));
  }
  c.bound("critical_doubling_identity", identity, 1e-9);

  const std::uint64_t top = largest_power_of_two(n_max);
  const auto t = normalized_series(SeriesKind::T_critical, 1.0, top);
  c.bound("critical_second_order_limit", std::abs(t.at(top) - critical_limit_constant()), 1e-3);

  // U_1(N) / (N log N) approaches 1/pi like 1/log N; check the approach is monotone
  std::size_t bad = 0;
  double prev = INFINITY;
  for (std::uint64_t n = 2; n <= top; n *= 2) {
    const double x = static_cast<double>(n);
    const double gap = std::abs(midpoint_potential(n, one) / (x * std::log(x)) - 1.0 / kPi);
    if (!(gap < prev)) ++bad;
    prev = gap;
  }
  c.count("critical_first_order_approach", bad);

  const auto series = normalized_series(SeriesKind::second_order_1, 1.0, n_max);
  const auto rebuilt = dyadic_reconstruction(SeriesKind::second_order_1, 1.0, n_max);
  double recon = 0.0;
  for (std::size_t i = 0; i < series.entries.size(); ++i) {
    recon = std::max(recon, std::abs(series.entries[i].value - rebuilt.entries[i].value));
  }
  c.bound("critical_reconstruction", recon, 1e-10);
}

void check_supercritical(Collector& c, double s, std::uint64_t n_max) {
  const RieszParameter param(s);
  const std::uint64_t top = largest_power_of_two(n_max);
  const double x = static_cast<double>(top);
  // the next correction term is of order N^{1-s}
  c.bound(tagged("supercritical_limit", s),
          std::abs(midpoint_potential(top, param) / std::pow(x, s) - dyadic_limit_constant(s)),
          std::pow(x, 1.0 - s));

  const auto series = normalized_series(SeriesKind::first_order_supercritical, s, n_max);
  std::size_t outside = 0;
  const double cap = dyadic_limit_constant(s) * 1.5 + 1.0;
  for (const auto& e : series.entries) {
    if (!(e.value > 0.0 && e.value < cap)) ++outside;
  }
  c.count(tagged("supercritical_bounded", s), outside);
}

void check_special(Collector& c) {
  double forms = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double s = 0.05 * k;
    forms = std::max(forms, rel_diff(continuous_energy(s), continuous_energy_alt(s)));
  }
  c.bound("continuous_energy_forms", forms, 1e-12);

  std::size_t wrong_sign = 0;
  for (int k = 1; k <= 19; ++k) {
    if (!(zeta(0.05 * k) < 0.0)) ++wrong_sign;
  }
  for (double s : {1.001, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 40.0}) {
    if (!(zeta(s) > 1.0)) ++wrong_sign;
  }
  c.count("zeta_sign", wrong_sign);

  constexpr std::size_t kTerms = 1'000'000;
  const double harmonic =
      pairwise_sum(kTerms, [](std::size_t k) { return 1.0 / static_cast<double>(k + 1); });
  c.bound("euler_gamma_limit",
          std::abs(harmonic - std::log(static_cast<double>(kTerms)) - euler_gamma()),
          1.0 / static_cast<double>(kTerms));
}

void check_theta(Collector& c) {
  constexpr unsigned kBits = 12;
  std::size_t bad = 0;
  for (const auto& th : enumerate_theta(kBits, kBits)) {
    const double g_half = g_value(th, 0.5);
    const double g_two = g_value(th, 2.0);
    const double lam = lambda_value(th);
    if (!(g_half >= 1.0 && g_half < std::sqrt(2.0) / (std::sqrt(2.0) - 1.0))) ++bad;
    if (!(g_two > 0.0 && g_two <= 1.0)) ++bad;
    if (!(lam > lambda_lower_bound() && lam <= 0.0)) ++bad;
  }
  c.count("theta_brackets", bad);
}

}  // namespace

bool VerificationReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

VerificationReport verify_all(const VerifyOptions& options) {
  if (options.n_max < 2) throw DomainError("verify_all: N_max must be >= 2");
  if (options.n_max > kVerifyBudget) {
    throw BudgetError("verify_all: N_max exceeds " + std::to_string(kVerifyBudget));
  }
  for (double s : options.s_grid) RieszParameter{s};

  VerificationReport report;
  report.n_max = options.n_max;
  report.s_grid = options.s_grid;
  Collector c(report.checks);

  check_binary(c);
  check_norm(c, options.n_max);
  check_structure(c);
  check_special(c);
  check_theta(c);
  bool did_s2 = false;
  bool did_critical = false;
  for (double s : options.s_grid) {
    const RieszParameter param(s);
    if (param.is_log()) continue;
    check_roots(c, param, options.n_max);
    check_decomposition(c, param, options.n_max);
    switch (param.regime()) {
      case Regime::subcritical: check_subcritical(c, s, options.n_max); break;
      case Regime::critical:
        if (!did_critical) check_critical(c, options.n_max);
        did_critical = true;
        break;
      case Regime::supercritical: check_supercritical(c, s, options.n_max); break;
      case Regime::log: break;
    }
    if (s == 2.0 && !did_s2) {
      check_s2(c, options.n_max);
      did_s2 = true;
    }
  }
  return report;
}

}  // namespace greedy
