#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greedy/analysis.hpp"
#include "greedy/binary.hpp"
#include "greedy/errors.hpp"
#include "greedy/io.hpp"
#include "greedy/sequences.hpp"
#include "greedy/special.hpp"
#include "greedy/verify.hpp"
#include "json.hpp"

namespace greedy::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  double s = 0.5;
  std::uint64_t n_max = 2048;
  std::vector<double> initial{0.0};
  std::size_t grid = 4096;
  unsigned refine_iters = 40;
  unsigned max_bits = 16;
  std::string output_path;
  std::string format = "csv";

  bool structural = false;
  bool numerical = false;
  unsigned p = 0;
  bool search = false;
  int figure_id = 0;
  std::string output_dir = ".";
  std::vector<double> s_grid{0.5, 1.0, 1.5, 2.0};
  bool include_subcritical = false;
  std::string kind;
};

// Runs write against the output file, or against out when no path is given.
void emit(const Config& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (cfg.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output_path);
  write(file);
}

Json sequence_json(double s, const Configuration& points, std::span<const double> extremal) {
  Json j;
  j["s"] = s;
  Json rows = Json::array();
  for (std::size_t n = 0; n < points.size(); ++n) {
    Json row;
    row["n"] = n;
    row["angle_turns"] = points[n].turns();
    row["extremal_value"] = n >= 1 && n - 1 < extremal.size() ? Json(extremal[n - 1]) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["points"] = std::move(rows);
  return j;
}

int cmd_sequence(const Config& cfg, std::ostream& out) {
  if (cfg.n_max < 1) throw UsageError("--n must be >= 1");
  if (cfg.structural && cfg.numerical) {
    throw UsageError("--structural and --numerical are mutually exclusive");
  }
  const RieszParameter s(cfg.s);
  Configuration points;
  std::vector<double> extremal;
  if (cfg.numerical) {
    for (double t : cfg.initial) {
      if (!std::isfinite(t) || t < 0.0 || t >= 1.0) {
        throw UsageError("initial angles must be turns in [0, 1)");
      }
    }
    const auto initial = Configuration::from_turns(cfg.initial);
    auto run = greedy_numerical(initial, s, cfg.n_max, cfg.grid, cfg.refine_iters);
    points = std::move(run.points);
    extremal = std::move(run.extremal_values);
  } else {
    points = canonical_structural(cfg.n_max);
    if (cfg.n_max >= 2) extremal = extremal_values_structural(cfg.n_max - 1, s);
  }
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "json") {
      o << sequence_json(cfg.s, points, extremal).dump(2) << '\n';
    } else {
      write_sequence_csv(o, points, extremal);
    }
  });
  return kOk;
}

int cmd_constants(const Config& cfg, std::ostream& out) {
  const auto catalog = limit_catalog(cfg.s, cfg.max_bits);
  emit(cfg, out, [&](std::ostream& o) { o << catalog_json(catalog); });
  return kOk;
}

int cmd_theta(const Config& cfg, std::ostream& out) {
  if (cfg.s < 0.0) throw UsageError("--s must be >= 0");
  if (cfg.search) {
    emit(cfg, out, [&](std::ostream& o) { o << theta_search_json(cfg.s, cfg.max_bits); });
    return kOk;
  }
  const unsigned p = cfg.p == 0 ? cfg.max_bits : cfg.p;
  const auto thetas = enumerate_theta(p, cfg.max_bits);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "json") {
      Json rows = Json::array();
      for (const auto& th : thetas) {
        Json row;
        row["odd_denominator"] = th.odd_denominator();
        row["theta"] = th.to_string();
        row["g"] = cfg.s > 0.0 ? Json(g_value(th, cfg.s)) : Json(nullptr);
        row["lambda"] = lambda_value(th);
        rows.push_back(std::move(row));
      }
      o << rows.dump(2) << '\n';
    } else {
      write_theta_csv(o, thetas, cfg.s);
    }
  });
  return kOk;
}

struct FigureSpec {
  SeriesKind kind;
  std::vector<double> s_values;
  std::uint64_t n_max;
};

FigureSpec figure_spec(int id) {
  switch (id) {
    case 1: return {SeriesKind::log_ratio, {0.0}, 5000};
    case 2:
      return {SeriesKind::second_order_subcritical, {0.001, 0.1, 0.3, 0.5, 0.7, 0.99}, 2048};
    case 3: return {SeriesKind::second_order_1, {1.0}, 2048};
    case 4: return {SeriesKind::first_order_supercritical, {1.005, 1.5, 3.5, 5.0}, 2048};
    default: throw UsageError("figure id must be 1, 2, 3 or 4");
  }
}

int cmd_figure(const Config& cfg, std::ostream& out) {
  const FigureSpec spec = figure_spec(cfg.figure_id);
  std::filesystem::create_directories(cfg.output_dir);
  for (double s : spec.s_values) {
    std::string name = "fig" + std::to_string(cfg.figure_id);
    if (spec.s_values.size() > 1) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "_s%g", s);
      name += buf;
    }
    const auto path = std::filesystem::path(cfg.output_dir) / (name + ".csv");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path.string());
    write_series_csv(file, normalized_series(spec.kind, s, spec.n_max));
    out << path.string() << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.s_grid.empty()) throw UsageError("--s needs at least one value");
  bool any_subcritical = false;
  for (double s : cfg.s_grid) {
    if (!std::isfinite(s) || s < 0.0) throw UsageError("--s values must be >= 0");
    any_subcritical = any_subcritical || (s > 0.0 && s < 1.0);
  }
  if (cfg.include_subcritical && !any_subcritical) {
    throw UsageError("--include-subcritical needs an s in (0, 1)");
  }
  VerifyOptions opts;
  opts.n_max = cfg.n_max;
  opts.s_grid = cfg.s_grid;
  const auto report = verify_all(opts);
  const std::string text = report_json(report);
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    emit(cfg, out, [&](std::ostream& o) { o << text; });
    out << (report.all_passed() ? "pass" : "fail") << '\n';
  }
  return report.all_passed() ? kOk : kChecksFailed;
}

int cmd_series(const Config& cfg, std::ostream& out) {
  const auto kind = series_kind_from_string(cfg.kind);
  if (!kind) throw UsageError("unknown series kind " + cfg.kind);
  const auto series = normalized_series(*kind, cfg.s, cfg.n_max);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "json") {
      Json j;
      j["kind"] = cfg.kind;
      j["s"] = cfg.s;
      Json rows = Json::array();
      for (const auto& e : series.entries) rows.push_back(Json{{"N", e.n}, {"value", e.value}});
      j["entries"] = std::move(rows);
      o << j.dump(2) << '\n';
    } else {
      write_series_csv(o, series);
    }
  });
  return kOk;
}

void add_output(CLI::App* sub, Config& cfg, bool with_format) {
  sub->add_option("-o,--output", cfg.output_path, "Output file (default: stdout)");
  if (with_format) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Greedy energy and Leja sequences on the unit circle", "greedy_circle"};
  app.require_subcommand(1);

  auto* sequence = app.add_subcommand("sequence", "Structural or numerical greedy sequence as CSV");
  sequence->add_flag("--structural", cfg.structural, "Bit-reversal construction (default)");
  sequence->add_flag("--numerical", cfg.numerical, "Numerical greedy minimizer");
  sequence->add_option("--s", cfg.s, "Riesz exponent, 0 for log")->capture_default_str();
  sequence->add_option("--n,--n-max", cfg.n_max, "Number of points")->capture_default_str();
  sequence->add_option("--initial", cfg.initial, "Initial angles in turns")
      ->delimiter(',')
      ->capture_default_str();
  sequence->add_option("--grid", cfg.grid, "Samples per unit of arc length")
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24))
      ->capture_default_str();
  sequence->add_option("--refine-iters", cfg.refine_iters, "Golden-section iterations")
      ->check(CLI::Range(1U, 200U))
      ->capture_default_str();
  add_output(sequence, cfg, true);

  auto* constants = app.add_subcommand("constants", "Limit constants as JSON");
  constants->add_option("--s", cfg.s, "Riesz exponent")->capture_default_str();
  constants->add_option("--max-bits", cfg.max_bits, "Theta search frontier")
      ->check(CLI::Range(1U, 24U))
      ->capture_default_str();
  add_output(constants, cfg, false);

  auto* theta = app.add_subcommand("theta", "Enumerate Theta vectors or search G and Lambda");
  theta->add_option("--s", cfg.s, "Exponent for G")->capture_default_str();
  theta->add_option("--p", cfg.p, "Vector length (default: max-bits)");
  theta->add_option("--max-bits", cfg.max_bits, "Odd denominators below 2^max-bits")
      ->check(CLI::Range(1U, 24U))
      ->capture_default_str();
  theta->add_flag("--search", cfg.search, "Print search extremes as JSON");
  add_output(theta, cfg, true);

  auto* figure = app.add_subcommand("figure", "Write the series behind figures 1-4");
  figure->add_option("--id", cfg.figure_id, "Figure number")->required();
  figure->add_option("--output-dir", cfg.output_dir, "Directory for the CSV files")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--n-max", cfg.n_max, "Largest N checked")->capture_default_str();
  verify->add_option("--s", cfg.s_grid, "Exponents to check")->delimiter(',')->capture_default_str();
  verify->add_flag("--include-subcritical", cfg.include_subcritical,
                   "Require at least one subcritical exponent");
  add_output(verify, cfg, false);

  auto* series = app.add_subcommand("series", "One normalized series as CSV");
  series->add_option("--kind", cfg.kind, "Series kind")->required();
  series->add_option("--s", cfg.s, "Riesz exponent")->capture_default_str();
  series->add_option("--n-max", cfg.n_max, "Largest N")->capture_default_str();
  add_output(series, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sequence->parsed()) return cmd_sequence(cfg, out);
    if (constants->parsed()) return cmd_constants(cfg, out);
    if (theta->parsed()) return cmd_theta(cfg, out);
    if (figure->parsed()) return cmd_figure(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (series->parsed()) return cmd_series(cfg, out);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace greedy::cli
