#include "greedy/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "greedy/binary.hpp"
#include "greedy/errors.hpp"
#include "greedy/summation.hpp"

namespace greedy {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTolerance = 1e-12;
constexpr std::size_t kMinSamplesPerGap = 8;
constexpr std::size_t kRefinedGaps = 4;
constexpr double kCandidateMargin = 0.05;
constexpr std::size_t kLogChunk = 16;

std::uint64_t bit_reverse(std::uint64_t n, unsigned bits) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < bits; ++i) {
    r = (r << 1) | ((n >> i) & 1U);
  }
  return r;
}

double reduce_half(double d) { return d - std::nearbyint(d); }

enum class FastKernel { log, quarter_root, inverse_root, inverse, general };

FastKernel fast_kernel_for(double s) {
  if (s == 0.0) return FastKernel::log;
  if (s == 0.5) return FastKernel::quarter_root;
  if (s == 1.0) return FastKernel::inverse_root;
  if (s == 2.0) return FastKernel::inverse;
  return FastKernel::general;
}

// Frozen copy of the current points used by the sample scan. Squared chord
// lengths come from 2 - 2 cos(x - a) via a dot product, which is cheap but
// loses relative accuracy close to a point; the final value and the polish
// step go through the sine-based distance instead.
class ScanField {
 public:
  ScanField(double s, std::span<const double> turns) : s_(s), kind_(fast_kernel_for(s)) {
    cos_.reserve(turns.size());
    sin_.reserve(turns.size());
    for (double t : turns) {
      const double a = 2.0 * kPi * reduce_half(t);
      cos_.push_back(std::cos(a));
      sin_.push_back(std::sin(a));
    }
  }

  double operator()(double x) const {
    const double a = 2.0 * kPi * reduce_half(x);
    const double cx = std::cos(a);
    const double sx = std::sin(a);
    const std::size_t m = cos_.size();
    const double* c = cos_.data();
    const double* sn = sin_.data();
    auto d2 = [&](std::size_t k) {
      return std::max(2.0 - 2.0 * (cx * c[k] + sx * sn[k]), DBL_MIN);
    };
    double acc = 0.0;
    switch (kind_) {
      case FastKernel::log:
        // chunked products keep the log count down; 16 factors <= 4 never overflow
        for (std::size_t k = 0; k < m;) {
          const std::size_t end = std::min(m, k + kLogChunk);
          double prod = 1.0;
          for (; k < end; ++k) prod *= d2(k);
          acc += std::log(prod);
        }
        return -0.5 * acc;
      case FastKernel::quarter_root:
        for (std::size_t k = 0; k < m; ++k) acc += 1.0 / std::sqrt(std::sqrt(d2(k)));
        return acc;
      case FastKernel::inverse_root:
        for (std::size_t k = 0; k < m; ++k) acc += 1.0 / std::sqrt(d2(k));
        return acc;
      case FastKernel::inverse:
        for (std::size_t k = 0; k < m; ++k) acc += 1.0 / d2(k);
        return acc;
      case FastKernel::general:
        for (std::size_t k = 0; k < m; ++k) acc += std::pow(d2(k), -0.5 * s_);
        return acc;
    }
    return acc;
  }

 private:
  double s_;
  FastKernel kind_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// d/dx of the running potential at x (turns), sine-based.
double potential_slope(std::span<const double> turns, double x, double s) {
  return pairwise_sum(turns.size(), [&](std::size_t k) {
    const double delta = reduce_half(x - turns[k]);
    const double sn = std::sin(kPi * delta);
    const double cs = std::cos(kPi * delta);
    if (s == 0.0) return -kPi * cs / sn;
    const double d = 2.0 * std::abs(sn);
    return -2.0 * kPi * s * std::pow(d, -s - 1.0) * cs * (sn > 0.0 ? 1.0 : -1.0);
  });
}

double wrap_turns(double x) {
  const double t = x - std::floor(x);
  return t >= 1.0 ? 0.0 : t;
}

struct Bracket {
  double lo;
  double hi;
};

// Golden-section search on [lo, hi]; returns the final bracket.
template <typename F>
Bracket golden_section(const F& f, Bracket b, unsigned iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b.hi - inv_phi * (b.hi - b.lo);
  double x2 = b.lo + inv_phi * (b.hi - b.lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (unsigned i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b.hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = b.hi - inv_phi * (b.hi - b.lo);
      f1 = f(x1);
    } else {
      b.lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = b.lo + inv_phi * (b.hi - b.lo);
      f2 = f(x2);
    }
  }
  return b;
}

// Bisection on the sign of the slope; the bracket must straddle the minimum.
double bisect_slope(std::span<const double> turns, double s, Bracket b) {
  for (;;) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (!(mid > b.lo && mid < b.hi)) return mid;
    if (potential_slope(turns, mid, s) > 0.0) {
      b.hi = mid;
    } else {
      b.lo = mid;
    }
  }
}

struct GapCandidate {
  double value;
  double x;
  double h;
};

bool prefer(double v, double x, double best_v, double best_x) {
  const double scale = std::max({std::abs(v), std::abs(best_v), 1.0});
  if (std::abs(v - best_v) <= kTieTolerance * scale) return wrap_turns(x) < wrap_turns(best_x);
  return v < best_v;
}

double refine_candidate(const ScanField& field, std::span<const double> turns, double s,
                        const GapCandidate& c, unsigned refine_iters) {
  const Bracket scan{c.x - c.h, c.x + c.h};
  const Bracket gold = golden_section(field, scan, refine_iters);
  // The scan field is only accurate to its rounding noise, so widen the
  // golden bracket a little before trusting it for the polish.
  const double pad = std::max(gold.hi - gold.lo, 1e-3 * c.h);
  Bracket polish{std::max(scan.lo, gold.lo - pad), std::min(scan.hi, gold.hi + pad)};
  const bool straddles = (polish.lo == scan.lo || potential_slope(turns, polish.lo, s) < 0.0) &&
                         (polish.hi == scan.hi || potential_slope(turns, polish.hi, s) > 0.0);
  if (!straddles) polish = scan;
  return bisect_slope(turns, s, polish);
}

double next_greedy_turn(std::span<const double> turns, double s, std::size_t grid,
                        unsigned refine_iters) {
  std::vector<double> sorted(turns.begin(), turns.end());
  std::sort(sorted.begin(), sorted.end());
  const ScanField field(s, turns);

  // best sample of every gap
  std::vector<GapCandidate> gaps;
  gaps.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double lo = sorted[i];
    const double hi = i + 1 < sorted.size() ? sorted[i + 1] : sorted[0] + 1.0;
    const double len = hi - lo;
    const auto samples = std::max(
        kMinSamplesPerGap, static_cast<std::size_t>(std::ceil(static_cast<double>(grid) * len)));
    const double h = len / static_cast<double>(samples + 1);
    GapCandidate best{INFINITY, lo, 0.0};
    for (std::size_t j = 1; j <= samples; ++j) {
      const double x = lo + static_cast<double>(j) * h;
      const double v = field(x);
      if (best.h == 0.0 || prefer(v, x, best.value, best.x)) best = {v, x, h};
    }
    gaps.push_back(best);
  }

  // Nearly balanced gaps can swap order once refined, so polish a few.
  const auto keep = std::min(gaps.size(), kRefinedGaps);
  std::partial_sort(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(keep), gaps.end(),
                    [](const GapCandidate& a, const GapCandidate& b) { return a.value < b.value; });
  const double margin = kCandidateMargin * std::max(std::abs(gaps.front().value), 1.0);

  double best_v = INFINITY;
  double best_x = 0.0;
  for (std::size_t k = 0; k < keep; ++k) {
    if (k > 0 && gaps[k].value > gaps.front().value + margin) break;
    const double x = refine_candidate(field, turns, s, gaps[k], refine_iters);
    const double v = field(x);
    if (k == 0 || prefer(v, x, best_v, best_x)) {
      best_v = v;
      best_x = x;
    }
  }
  return wrap_turns(best_x);
}

}  // namespace

Configuration canonical_structural(std::size_t n) {
  std::vector<CirclePoint> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto bits = static_cast<unsigned>(std::bit_width(k));
    pts.push_back(CirclePoint::dyadic(bit_reverse(k, bits), bits));
  }
  return Configuration(std::move(pts));
}

DyadicPotentialTable::DyadicPotentialTable(RieszParameter s, unsigned max_exponent)
    : s_(s) {
  if (max_exponent > 62) throw DomainError("DyadicPotentialTable: exponent too large");
  values_.reserve(max_exponent + 1);
  for (unsigned j = 0; j <= max_exponent; ++j) {
    values_.push_back(s.is_log() ? -std::numbers::ln2
                                 : midpoint_potential(std::uint64_t{1} << j, s));
  }
}

double DyadicPotentialTable::at(unsigned j) const {
  if (j >= values_.size()) throw DomainError("DyadicPotentialTable::at: exponent out of range");
  return values_[j];
}

double DyadicPotentialTable::extremal_value(std::uint64_t n) const {
  const auto e = decompose(n).exponents;
  if (e.front() >= values_.size()) {
    throw DomainError("DyadicPotentialTable::extremal_value: N beyond table");
  }
  return pairwise_sum(e.size(), [&](std::size_t k) { return values_[e[k]]; });
}

DyadicPotentialTable dyadic_table_for(std::uint64_t n_max, RieszParameter s) {
  if (n_max == 0) throw DomainError("dyadic_table_for: N_max must be >= 1");
  return DyadicPotentialTable(s, static_cast<unsigned>(std::bit_width(n_max) - 1));
}

std::vector<double> extremal_values_structural(std::uint64_t n_max, RieszParameter s) {
  const auto table = dyadic_table_for(n_max, s);
  std::vector<double> out;
  out.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(table.extremal_value(n));
  return out;
}

GreedyRun greedy_numerical(const Configuration& initial, RieszParameter s, std::size_t n,
                           std::size_t grid, unsigned refine_iters) {
  if (initial.empty()) throw DomainError("greedy_numerical: initial set is empty");
  if (grid < 64) throw DomainError("greedy_numerical: grid must be >= 64");

  GreedyRun run;
  run.s = s;
  run.initial = initial;
  run.points = initial;
  for (std::size_t k = 1; k < initial.size(); ++k) {
    run.extremal_values.push_back(potential(initial.prefix(k), initial[k], s));
  }

  std::vector<double> turns = initial.turns();
  turns.reserve(std::max(n, initial.size()));
  for (std::size_t k = initial.size(); k < n; ++k) {
    const double x = next_greedy_turn(turns, s.value(), grid, refine_iters);
    const CirclePoint z = CirclePoint::from_turns(x);
    run.extremal_values.push_back(potential(run.points, z, s));
    run.points.append(z);
    turns.push_back(z.turns());
  }
  return run;
}

std::vector<double> energy_series_from_extremal(std::span<const double> extremal_values) {
  std::vector<double> out;
  out.reserve(extremal_values.size() + 1);
  // Neumaier-compensated running sum
  double sum = 0.0;
  double comp = 0.0;
  out.push_back(0.0);
  for (double v : extremal_values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    out.push_back(2.0 * (sum + comp));
  }
  return out;
}

}  // namespace greedy
