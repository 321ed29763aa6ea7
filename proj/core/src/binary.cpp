#include "greedy/binary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "greedy/errors.hpp"
#include "greedy/summation.hpp"

namespace greedy {

unsigned tau_b(std::uint64_t n) {
  if (n == 0) throw DomainError("tau_b: N must be >= 1");
  return static_cast<unsigned>(std::popcount(n));
}

std::uint64_t BinaryExpansion::value() const noexcept {
  std::uint64_t n = 0;
  for (unsigned e : exponents) n += std::uint64_t{1} << e;
  return n;
}

BinaryExpansion decompose(std::uint64_t n) {
  if (n == 0) throw DomainError("decompose: N must be >= 1");
  BinaryExpansion out;
  out.exponents.reserve(static_cast<std::size_t>(std::popcount(n)));
  for (int bit = 63; bit >= 0; --bit) {
    if ((n >> bit) & 1U) out.exponents.push_back(static_cast<unsigned>(bit));
  }
  return out;
}

ThetaVector::ThetaVector(std::uint64_t odd_denominator, unsigned p)
    : m_(odd_denominator) {
  if (odd_denominator % 2 == 0) {
    throw DomainError("ThetaVector: denominator must be odd");
  }
  exponents_ = decompose(odd_denominator).exponents;
  if (p < exponents_.size()) {
    throw DomainError("ThetaVector: p must be >= tau_b(M)");
  }
  zeros_ = p - static_cast<unsigned>(exponents_.size());
}

Rational ThetaVector::component(unsigned k) const {
  if (k >= size()) throw DomainError("ThetaVector::component: index out of range");
  if (k >= exponents_.size()) return {0, 1};
  return {std::uint64_t{1} << exponents_[k], m_};
}

std::vector<Rational> ThetaVector::components() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (unsigned k = 0; k < size(); ++k) out.push_back(component(k));
  return out;
}

std::string ThetaVector::to_string() const {
  std::string out;
  for (unsigned k = 0; k < size(); ++k) {
    if (k) out += ',';
    const Rational r = component(k);
    if (r.numerator == 0) {
      out += '0';
    } else if (r.denominator == 1) {
      out += std::to_string(r.numerator);
    } else {
      out += std::to_string(r.numerator) + '/' + std::to_string(r.denominator);
    }
  }
  return out;
}

ThetaVector theta_from_odd(std::uint64_t odd_denominator, unsigned p) {
  return ThetaVector(odd_denominator, p);
}

std::vector<ThetaVector> enumerate_theta(unsigned p, unsigned max_bits) {
  if (p == 0 || max_bits == 0) {
    throw DomainError("enumerate_theta: p and max_bits must be >= 1");
  }
  max_bits = std::min(max_bits, 32U);
  const std::uint64_t limit = std::uint64_t{1} << max_bits;
  std::vector<ThetaVector> out;
  for (std::uint64_t m = 1; m < limit; m += 2) {
    if (static_cast<unsigned>(std::popcount(m)) <= p) out.emplace_back(m, p);
  }
  return out;
}

std::vector<ThetaVector> all_ones_family(unsigned max_t) {
  max_t = std::min(max_t, 63U);
  std::vector<ThetaVector> out;
  out.reserve(max_t);
  for (unsigned t = 1; t <= max_t; ++t) {
    out.emplace_back((std::uint64_t{1} << t) - 1, t);
  }
  return out;
}

double g_value(const ThetaVector& theta, double s) {
  if (!(s > 0.0)) throw DomainError("g_value: s must be > 0");
  const auto& e = theta.exponents();
  const double log2_m = std::log2(static_cast<double>(theta.odd_denominator()));
  return pairwise_sum(e.size(), [&](std::size_t k) {
    return std::exp2(s * (static_cast<double>(e[k]) - log2_m));
  });
}

double lambda_value(const ThetaVector& theta) {
  const auto& e = theta.exponents();
  const double log_m = std::log(static_cast<double>(theta.odd_denominator()));
  const double m = static_cast<double>(theta.odd_denominator());
  // theta_k log theta_k with log theta_k = n_k log 2 - log M
  return pairwise_sum(e.size(), [&](std::size_t k) {
    const double th = std::ldexp(1.0, static_cast<int>(e[k])) / m;
    return th * (static_cast<double>(e[k]) * std::numbers::ln2 - log_m);
  });
}

namespace {

constexpr unsigned kFamilyMaxT = 60;

}  // namespace

double GSearchResult::best_sup() const noexcept {
  return std::max(sup_found, family_sup);
}

double GSearchResult::best_inf() const noexcept {
  return std::min(inf_found, family_inf);
}

double LambdaSearchResult::best_inf() const noexcept {
  return std::min(inf_found, family_inf);
}

GSearchResult search_g_extremes(double s, unsigned max_bits) {
  if (!(s > 0.0)) throw DomainError("search_g_extremes: s must be > 0");
  GSearchResult r;
  r.s = s;
  r.max_bits = max_bits;
  if (s == 1.0) {
    r.degenerate = true;
    r.sup_found = r.inf_found = r.family_sup = r.family_inf = 1.0;
    return r;
  }
  r.sup_found = -INFINITY;
  r.inf_found = INFINITY;
  for (const auto& th : enumerate_theta(max_bits, max_bits)) {
    const double g = g_value(th, s);
    if (g > r.sup_found) {
      r.sup_found = g;
      r.sup_witness = th;
    }
    if (g < r.inf_found) {
      r.inf_found = g;
      r.inf_witness = th;
    }
  }
  r.family_sup = -INFINITY;
  r.family_inf = INFINITY;
  for (const auto& th : all_ones_family(kFamilyMaxT)) {
    const double g = g_value(th, s);
    r.family_sup = std::max(r.family_sup, g);
    r.family_inf = std::min(r.family_inf, g);
  }
  return r;
}

LambdaSearchResult search_lambda(unsigned max_bits) {
  LambdaSearchResult r;
  r.max_bits = max_bits;
  for (const auto& th : enumerate_theta(max_bits, max_bits)) {
    const double v = lambda_value(th);
    if (v < r.inf_found) {
      r.inf_found = v;
      r.witness = th;
    }
  }
  for (const auto& th : all_ones_family(kFamilyMaxT)) {
    const double v = lambda_value(th);
    if (v < r.family_inf) {
      r.family_inf = v;
      r.family_witness = th;
    }
  }
  return r;
}

double lambda_lower_bound() noexcept {
  return -2.0 / std::numbers::e - 2.0 * std::numbers::ln2;
}

}  // namespace greedy
