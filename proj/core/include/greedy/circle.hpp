#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace greedy {

/// numerator / 2^level turns, kept in lowest terms.
struct DyadicAngle {
  std::uint64_t numerator = 0;
  unsigned level = 0;

  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;
};

/// A point of the unit circle, stored as an angle in turns in [0, 1).
///
/// Dyadic points (every structural point of a Leja sequence is a 2^k-th root
/// of unity) are stored exactly as integers, so differences between them are
/// computed without rounding. Anything else is a plain double in [0, 1).
class CirclePoint {
 public:
  // Keeps every dyadic angle exactly representable as a double.
  static constexpr unsigned kMaxLevel = 52;

  /// The point 1.
  CirclePoint() = default;

  /// numerator / 2^level turns. Requires numerator < 2^level (level 0 is the
  /// point 1) and level <= kMaxLevel; throws DomainError otherwise.
  static CirclePoint dyadic(std::uint64_t numerator, unsigned level);

  /// Any finite turn value; reduced modulo 1 into [0, 1).
  static CirclePoint from_turns(double turns);

  [[nodiscard]] bool is_dyadic() const noexcept {
    return std::holds_alternative<DyadicAngle>(angle_);
  }
  [[nodiscard]] std::optional<DyadicAngle> dyadic_angle() const noexcept;
  [[nodiscard]] double turns() const noexcept;
  [[nodiscard]] std::complex<double> to_complex() const;

  /// Same point of S^1. Dyadic/dyadic comparison is exact.
  friend bool operator==(const CirclePoint& a, const CirclePoint& b) noexcept;

 private:
  explicit CirclePoint(DyadicAngle a) : angle_(a) {}
  explicit CirclePoint(double t) : angle_(t) {}

  std::variant<DyadicAngle, double> angle_{DyadicAngle{}};
};

/// Signed turn difference x - y reduced to [-1/2, 1/2]; exact for two
/// dyadic points.
double turn_difference(const CirclePoint& x, const CirclePoint& y) noexcept;

/// |z - w| = 2 |sin(pi (x - y))|. Returns exactly 0.0 iff the points coincide,
/// which callers use as the "zero distance" signal.
double chord_distance(const CirclePoint& z, const CirclePoint& w) noexcept;

enum class Regime { log, subcritical, critical, supercritical };

std::string_view to_string(Regime r) noexcept;

/// The Riesz exponent s >= 0; s = 0 selects the logarithmic kernel.
class RieszParameter {
 public:
  /// Throws DomainError unless s is finite and s >= 0.
  explicit RieszParameter(double s);

  [[nodiscard]] double value() const noexcept { return s_; }
  [[nodiscard]] bool is_log() const noexcept { return s_ == 0.0; }
  [[nodiscard]] Regime regime() const noexcept;

 private:
  double s_;
};

/// -log d for s = 0, d^-s otherwise. d must be positive.
double kernel_from_distance(RieszParameter s, double d) noexcept;

/// k_s(z, w). Throws CoincidentPointsError when z == w.
double kernel(RieszParameter s, const CirclePoint& z, const CirclePoint& w);

/// Ordered tuple of pairwise distinct points (ordering is selection order,
/// not angle order).
class Configuration {
 public:
  Configuration() = default;

  /// Throws CoincidentPointsError if two points coincide.
  explicit Configuration(std::vector<CirclePoint> points);
  Configuration(std::initializer_list<CirclePoint> points);

  static Configuration from_turns(std::span<const double> turns);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] const CirclePoint& operator[](std::size_t i) const {
    return points_[i];
  }
  [[nodiscard]] std::span<const CirclePoint> points() const noexcept {
    return points_;
  }
  [[nodiscard]] auto begin() const noexcept { return points_.begin(); }
  [[nodiscard]] auto end() const noexcept { return points_.end(); }

  [[nodiscard]] bool contains(const CirclePoint& p) const noexcept;

  /// Throws CoincidentPointsError if p is already present.
  void append(const CirclePoint& p);

  /// First n points (all of them if n >= size()).
  [[nodiscard]] Configuration prefix(std::size_t n) const;

  [[nodiscard]] std::vector<double> turns() const;

 private:
  std::vector<CirclePoint> points_;
};

/// The n-th roots of unity k/n, k = 0..n-1; dyadic-exact when n is a power
/// of two.
Configuration roots_of_unity(std::size_t n);

/// U(z) = sum_k k_s(a_k, z). Throws CoincidentPointsError if z is in config.
double potential(const Configuration& config, const CirclePoint& z,
                 RieszParameter s);

/// E_s = sum over ordered pairs i != j. Fewer than two points gives 0.
double energy(const Configuration& config, RieszParameter s);

/// L_s(N), the s-energy of the N-th roots of unity; L_s(1) = 0.
/// Requires N >= 1 and s > 0.
double roots_energy(std::uint64_t n, RieszParameter s);

/// U_s(N): potential of the N-th roots of unity at the midpoint of the arc
/// between two neighbours. Requires N >= 1 and s > 0.
double midpoint_potential(std::uint64_t n, RieszParameter s);

/// log prod_k |z - a_k|, summed in log space. Throws CoincidentPointsError
/// if z is in config.
double leja_sup_norm_log(const Configuration& config, const CirclePoint& z);

}  // namespace greedy
