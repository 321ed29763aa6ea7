#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace greedy {

/// Number of ones in the binary representation of n. Requires n >= 1.
unsigned tau_b(std::uint64_t n);

/// N = sum_k 2^{n_k} with n_1 > n_2 > ... > n_p >= 0.
struct BinaryExpansion {
  std::vector<unsigned> exponents;

  [[nodiscard]] std::uint64_t value() const noexcept;
  [[nodiscard]] std::size_t length() const noexcept { return exponents.size(); }
};

/// Set-bit exponents of n, strictly decreasing. Requires n >= 1.
BinaryExpansion decompose(std::uint64_t n);

struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (2^{n_1}/M, ..., 2^{n_t}/M, 0, ..., 0) with M = sum_k 2^{n_k} odd.
///
/// Components stay exact rationals; floating point only appears in the
/// G and Lambda evaluations.
class ThetaVector {
 public:
  /// Throws DomainError if M is even or p < tau_b(M).
  ThetaVector(std::uint64_t odd_denominator, unsigned p);

  [[nodiscard]] std::uint64_t odd_denominator() const noexcept { return m_; }
  [[nodiscard]] const std::vector<unsigned>& exponents() const noexcept {
    return exponents_;
  }
  [[nodiscard]] unsigned nonzero_count() const noexcept {
    return static_cast<unsigned>(exponents_.size());
  }
  [[nodiscard]] unsigned trailing_zeros() const noexcept { return zeros_; }
  [[nodiscard]] unsigned size() const noexcept { return nonzero_count() + zeros_; }

  /// k-th component (0-based).
  [[nodiscard]] Rational component(unsigned k) const;
  [[nodiscard]] std::vector<Rational> components() const;

  /// "8/13,4/13,1/13,0"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;

 private:
  std::uint64_t m_;
  std::vector<unsigned> exponents_;
  unsigned zeros_;
};

ThetaVector theta_from_odd(std::uint64_t odd_denominator, unsigned p);

/// Every ThetaVector of length p with odd M < 2^max_bits, ordered by M.
/// max_bits is capped at 32.
std::vector<ThetaVector> enumerate_theta(unsigned p, unsigned max_bits);

/// The all-ones family M = 2^t - 1, i.e. (2^{t-1}, ..., 2, 1)/(2^t - 1) for
/// t = 1..max_t (capped at 63). It approaches the known landmarks fastest.
std::vector<ThetaVector> all_ones_family(unsigned max_t);

/// G(theta; s) = sum_k theta_k^s. Requires s > 0.
double g_value(const ThetaVector& theta, double s);

/// Lambda(theta) = sum_k theta_k log theta_k, with 0 log 0 = 0.
double lambda_value(const ThetaVector& theta);

struct GSearchResult {
  double s = 0.0;
  unsigned max_bits = 0;
  bool degenerate = false;  // s == 1, where G is identically 1
  double sup_found = 0.0;
  double inf_found = 0.0;
  std::optional<ThetaVector> sup_witness;
  std::optional<ThetaVector> inf_witness;
  // Same extremes over the all-ones family M = 2^t - 1, t <= 60.
  double family_sup = 0.0;
  double family_inf = 0.0;

  [[nodiscard]] double best_sup() const noexcept;
  [[nodiscard]] double best_inf() const noexcept;
};

/// Max and min of G(.; s) over enumerate_theta(max_bits, max_bits), plus the
/// all-ones family reported separately. Every candidate lies in Theta, so a
/// sup is a certified lower bound for the supremum over Theta and an inf a
/// certified upper bound for the infimum.
GSearchResult search_g_extremes(double s, unsigned max_bits);

struct LambdaSearchResult {
  unsigned max_bits = 0;
  double inf_found = 0.0;
  ThetaVector witness{1, 1};
  double family_inf = 0.0;
  ThetaVector family_witness{1, 1};

  [[nodiscard]] double best_inf() const noexcept;
};

/// Min of Lambda over enumerate_theta(max_bits, max_bits), family reported
/// separately; a certified upper bound for inf_Theta Lambda.
LambdaSearchResult search_lambda(unsigned max_bits);

/// Lower bound for Lambda over all of Theta: -m/e - 2 log 2 with the
/// smallest m such that 2^-m < 1/e (m = 2).
double lambda_lower_bound() noexcept;

}  // namespace greedy
