#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "greedy/analysis.hpp"
#include "greedy/binary.hpp"
#include "greedy/circle.hpp"
#include "greedy/special.hpp"
#include "greedy/verify.hpp"

namespace greedy {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double x);

/// n,angle_turns,extremal_value. extremal[n-1] belongs to point n; the
/// first row leaves the column empty.
void write_sequence_csv(std::ostream& out, const Configuration& points,
                        std::span<const double> extremal);

/// N,value
void write_series_csv(std::ostream& out, const NormalizedSeries& series);

/// odd_denominator,theta,g,lambda. The theta cell is quoted since it holds
/// commas; g is left empty when s <= 0.
void write_theta_csv(std::ostream& out, std::span<const ThetaVector> thetas, double s);

/// Keys s, regime, i_sigma, zeta, first_order, limsup, liminf_lower,
/// liminf_upper; absent values are null.
std::string catalog_json(const ConstantsCatalog& catalog);

/// Summary of the G and Lambda searches at one s (G entries are null for s <= 0).
std::string theta_search_json(double s, unsigned max_bits);

/// {"n_max", "s_grid", "passed", "checks": [{name, status, residual, budget}]}
std::string report_json(const VerificationReport& report);

}  // namespace greedy
