#include "greedy/io.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "json.hpp"

namespace greedy {
namespace {

using Json = nlohmann::ordered_json;

Json nullable(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// JSON cannot hold inf/nan; they would only show up from a failed check.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sequence_csv(std::ostream& out, const Configuration& points,
                        std::span<const double> extremal) {
  out << "n,angle_turns,extremal_value\n";
  for (std::size_t n = 0; n < points.size(); ++n) {
    out << n << ',' << format_real(points[n].turns()) << ',';
    if (n >= 1 && n - 1 < extremal.size()) out << format_real(extremal[n - 1]);
    out << '\n';
  }
}

void write_series_csv(std::ostream& out, const NormalizedSeries& series) {
  out << "N,value\n";
  for (const auto& e : series.entries) out << e.n << ',' << format_real(e.value) << '\n';
}

void write_theta_csv(std::ostream& out, std::span<const ThetaVector> thetas, double s) {
  out << "odd_denominator,theta,g,lambda\n";
  for (const auto& th : thetas) {
    out << th.odd_denominator() << ",\"" << th.to_string() << "\",";
    if (s > 0.0) out << format_real(g_value(th, s));
    out << ',' << format_real(lambda_value(th)) << '\n';
  }
}

std::string catalog_json(const ConstantsCatalog& catalog) {
  Json j;
  j["s"] = catalog.s;
  j["regime"] = std::string(to_string(catalog.regime));
  j["i_sigma"] = nullable(catalog.i_sigma);
  j["zeta"] = nullable(catalog.zeta_s);
  j["first_order"] = catalog.first_order_limit;
  j["limsup"] = nullable(catalog.limsup_second_order);
  if (catalog.liminf_bracket) {
    j["liminf_lower"] = catalog.liminf_bracket->first;
    j["liminf_upper"] = catalog.liminf_bracket->second;
  } else {
    j["liminf_lower"] = nullptr;
    j["liminf_upper"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string theta_search_json(double s, unsigned max_bits) {
  Json j;
  j["s"] = s;
  j["max_bits"] = max_bits;
  if (s > 0.0) {
    const auto g = search_g_extremes(s, max_bits);
    j["g_degenerate"] = g.degenerate;
    j["g_sup_found"] = g.sup_found;
    j["g_sup_witness"] = g.sup_witness ? Json(g.sup_witness->to_string()) : Json(nullptr);
    j["g_inf_found"] = g.inf_found;
    j["g_inf_witness"] = g.inf_witness ? Json(g.inf_witness->to_string()) : Json(nullptr);
    j["g_family_sup"] = g.family_sup;
    j["g_family_inf"] = g.family_inf;
    j["g_landmark"] = s == 1.0 ? Json(1.0) : Json(1.0 / std::expm1(s * std::log(2.0)));
  } else {
    for (const char* key : {"g_degenerate", "g_sup_found", "g_sup_witness", "g_inf_found",
                            "g_inf_witness", "g_family_sup", "g_family_inf", "g_landmark"}) {
      j[key] = nullptr;
    }
  }
  const auto lam = search_lambda(max_bits);
  j["lambda_inf_found"] = lam.inf_found;
  j["lambda_witness"] = lam.witness.to_string();
  j["lambda_family_inf"] = lam.family_inf;
  j["lambda_landmark"] = -2.0 * std::log(2.0);
  j["lambda_lower_bound"] = lambda_lower_bound();
  return j.dump(2) + "\n";
}

std::string report_json(const VerificationReport& report) {
  Json j;
  j["n_max"] = report.n_max;
  j["s_grid"] = report.s_grid;
  j["passed"] = report.all_passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["status"] = c.passed ? "pass" : "fail";
    entry["residual"] = finite_or_null(c.residual);
    entry["budget"] = c.budget;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace greedy
