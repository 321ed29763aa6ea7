#include "greedy/circle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "greedy/errors.hpp"
#include "greedy/summation.hpp"

namespace greedy {
namespace {

constexpr double kPi = std::numbers::pi;

DyadicAngle reduce(std::uint64_t numerator, unsigned level) {
  if (numerator == 0) return {0, 0};
  const unsigned tz = static_cast<unsigned>(std::countr_zero(numerator));
  const unsigned shift = std::min(tz, level);
  return {numerator >> shift, level - shift};
}

double dyadic_turns(const DyadicAngle& a) {
  return std::ldexp(static_cast<double>(a.numerator), -static_cast<int>(a.level));
}

double reduce_half(double d) { return d - std::nearbyint(d); }

void require_positive_count(std::uint64_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": N must be >= 1");
}

void require_riesz(RieszParameter s, const char* what) {
  if (s.is_log()) throw DomainError(std::string(what) + ": requires s > 0");
}

}  // namespace

CirclePoint CirclePoint::dyadic(std::uint64_t numerator, unsigned level) {
  if (level > kMaxLevel) {
    throw DomainError("CirclePoint::dyadic: level exceeds " +
                      std::to_string(kMaxLevel));
  }
  if (numerator >= (std::uint64_t{1} << level)) {
    throw DomainError("CirclePoint::dyadic: numerator must be < 2^level");
  }
  return CirclePoint(reduce(numerator, level));
}

CirclePoint CirclePoint::from_turns(double turns) {
  if (!std::isfinite(turns)) {
    throw DomainError("CirclePoint::from_turns: angle must be finite");
  }
  double t = turns - std::floor(turns);
  if (t >= 1.0) t = 0.0;
  return CirclePoint(t);
}

std::optional<DyadicAngle> CirclePoint::dyadic_angle() const noexcept {
  if (const auto* d = std::get_if<DyadicAngle>(&angle_)) return *d;
  return std::nullopt;
}

double CirclePoint::turns() const noexcept {
  if (const auto* d = std::get_if<DyadicAngle>(&angle_)) return dyadic_turns(*d);
  return std::get<double>(angle_);
}

std::complex<double> CirclePoint::to_complex() const {
  if (const auto* d = std::get_if<DyadicAngle>(&angle_); d && d->level <= 2) {
    switch (d->numerator << (2 - d->level)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * kPi * reduce_half(turns());
  return {std::cos(angle), std::sin(angle)};
}

bool operator==(const CirclePoint& a, const CirclePoint& b) noexcept {
  const auto da = a.dyadic_angle();
  const auto db = b.dyadic_angle();
  if (da && db) return *da == *db;
  return a.turns() == b.turns();
}

double turn_difference(const CirclePoint& x, const CirclePoint& y) noexcept {
  const auto dx = x.dyadic_angle();
  const auto dy = y.dyadic_angle();
  if (dx && dy) {
    const unsigned level = std::max(dx->level, dy->level);
    if (level == 0) return 0.0;
    const auto ax = static_cast<std::int64_t>(dx->numerator << (level - dx->level));
    const auto ay = static_cast<std::int64_t>(dy->numerator << (level - dy->level));
    const std::int64_t full = std::int64_t{1} << level;
    std::int64_t diff = ax - ay;
    if (2 * diff > full) diff -= full;
    if (2 * diff < -full) diff += full;
    return std::ldexp(static_cast<double>(diff), -static_cast<int>(level));
  }
  return reduce_half(x.turns() - y.turns());
}

double chord_distance(const CirclePoint& z, const CirclePoint& w) noexcept {
  const double delta = turn_difference(z, w);
  if (delta == 0.0) return 0.0;
  return 2.0 * std::abs(std::sin(kPi * delta));
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::log: return "log";
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "unknown";
}

RieszParameter::RieszParameter(double s) : s_(s) {
  if (!std::isfinite(s) || s < 0.0) {
    throw DomainError("RieszParameter: s must be finite and >= 0");
  }
}

Regime RieszParameter::regime() const noexcept {
  if (s_ == 0.0) return Regime::log;
  if (s_ < 1.0) return Regime::subcritical;
  if (s_ == 1.0) return Regime::critical;
  return Regime::supercritical;
}

double kernel_from_distance(RieszParameter s, double d) noexcept {
  const double e = s.value();
  if (e == 0.0) return -std::log(d);
  if (e == 1.0) return 1.0 / d;
  if (e == 2.0) return 1.0 / (d * d);
  return std::pow(d, -e);
}

double kernel(RieszParameter s, const CirclePoint& z, const CirclePoint& w) {
  const double d = chord_distance(z, w);
  if (d == 0.0) throw CoincidentPointsError("kernel: coincident points");
  return kernel_from_distance(s, d);
}

Configuration::Configuration(std::vector<CirclePoint> points)
    : points_(std::move(points)) {
  std::vector<double> t = turns();
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
    throw CoincidentPointsError("Configuration: points must be pairwise distinct");
  }
}

Configuration::Configuration(std::initializer_list<CirclePoint> points)
    : Configuration(std::vector<CirclePoint>(points)) {}

Configuration Configuration::from_turns(std::span<const double> turns) {
  std::vector<CirclePoint> pts;
  pts.reserve(turns.size());
  for (double t : turns) pts.push_back(CirclePoint::from_turns(t));
  return Configuration(std::move(pts));
}

bool Configuration::contains(const CirclePoint& p) const noexcept {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

void Configuration::append(const CirclePoint& p) {
  if (contains(p)) {
    throw CoincidentPointsError("Configuration::append: point already present");
  }
  points_.push_back(p);
}

Configuration Configuration::prefix(std::size_t n) const {
  Configuration out;
  const std::size_t m = std::min(n, points_.size());
  out.points_.assign(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

std::vector<double> Configuration::turns() const {
  std::vector<double> t;
  t.reserve(points_.size());
  for (const auto& p : points_) t.push_back(p.turns());
  return t;
}

Configuration roots_of_unity(std::size_t n) {
  std::vector<CirclePoint> pts;
  pts.reserve(n);
  if (std::has_single_bit(n)) {
    const auto level = static_cast<unsigned>(std::countr_zero(n));
    for (std::size_t k = 0; k < n; ++k) pts.push_back(CirclePoint::dyadic(k, level));
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      pts.push_back(CirclePoint::from_turns(static_cast<double>(k) / static_cast<double>(n)));
    }
  }
  return Configuration(std::move(pts));
}

double potential(const Configuration& config, const CirclePoint& z,
                 RieszParameter s) {
  const auto pts = config.points();
  return pairwise_sum(pts.size(), [&](std::size_t k) { return kernel(s, pts[k], z); });
}

double energy(const Configuration& config, RieszParameter s) {
  const auto pts = config.points();
  if (pts.size() < 2) return 0.0;
  const double half = pairwise_sum(pts.size() - 1, [&](std::size_t i) {
    return pairwise_sum(i + 1, pts.size(),
                        [&](std::size_t j) { return kernel(s, pts[i], pts[j]); });
  });
  return 2.0 * half;
}

double roots_energy(std::uint64_t n, RieszParameter s) {
  require_positive_count(n, "roots_energy");
  require_riesz(s, "roots_energy");
  if (n == 1) return 0.0;
  const double nd = static_cast<double>(n);
  // sin(k pi / N) evaluated on the short side so every argument is exact-ish.
  const double sum = pairwise_sum(1, n, [&](std::size_t k) {
    const std::uint64_t m = std::min<std::uint64_t>(k, n - k);
    return std::pow(std::sin(kPi * static_cast<double>(m) / nd), -s.value());
  });
  return std::exp2(-s.value()) * nd * sum;
}

double midpoint_potential(std::uint64_t n, RieszParameter s) {
  require_positive_count(n, "midpoint_potential");
  require_riesz(s, "midpoint_potential");
  // |e^{i pi/N} - e^{2 pi i k/N}| = 2 |sin(pi (2k-1) / (2N))|
  const double twice_n = 2.0 * static_cast<double>(n);
  return pairwise_sum(1, n + 1, [&](std::size_t k) {
    const std::uint64_t j = 2 * k - 1;
    const std::uint64_t m = std::min<std::uint64_t>(j, 2 * n - j);
    const double d = 2.0 * std::sin(kPi * static_cast<double>(m) / twice_n);
    return kernel_from_distance(s, d);
  });
}

double leja_sup_norm_log(const Configuration& config, const CirclePoint& z) {
  const auto pts = config.points();
  return pairwise_sum(pts.size(), [&](std::size_t k) {
    const double d = chord_distance(z, pts[k]);
    if (d == 0.0) {
      throw CoincidentPointsError("leja_sup_norm_log: z coincides with a point");
    }
    return std::log(d);
  });
}

}  // namespace greedy
