#include "su2holevo/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace su2holevo::cli {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

double rounded(double x) { return std::stod(format_number(x)); }

std::string spin_text(SpinLabel j) {
  return j.is_integer() ? std::to_string(j.two_j() / 2) : std::to_string(j.two_j()) + "/2";
}

}  // namespace

nlohmann::json value_report(SpinLabel j, double f, LogBase base) {
  const Su2InvariantState s(j, f);
  const HolevoResult r = holevo_closed(s, base);
  return {{"two_j", j.two_j()},
          {"j", spin_text(j)},
          {"F", f},
          {"log_base", std::string(to_string(base))},
          {"chi", r.chi},
          {"marginal_entropy", r.marginal_entropy},
          {"mean_conditional_entropy", r.mean_conditional_entropy},
          {"F_d", Su2InvariantState::f_zero(j)},
          {"F_s", Su2InvariantState::f_separable(j)}};
}

void SweepSpec::validate() const {
  if (two_j_list.empty()) throw std::invalid_argument("sweep needs at least one spin");
  for (int two_j : two_j_list) SpinLabel{two_j};
  if (!(f_min >= 0.0 && f_max <= 1.0))
    throw std::invalid_argument("sweep F range must lie within [0, 1]");
  if (!(f_min < f_max)) throw std::invalid_argument("sweep needs f_min < f_max");
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
}

std::vector<double> f_grid(double f_min, double f_max, int steps) {
  std::vector<double> grid(steps);
  for (int k = 0; k < steps; ++k) grid[k] = f_min + (f_max - f_min) * k / (steps - 1);
  grid.back() = f_max;
  return grid;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<int> spins = spec.two_j_list;
  std::sort(spins.begin(), spins.end());
  spins.erase(std::unique(spins.begin(), spins.end()), spins.end());

  const auto grid = f_grid(spec.f_min, spec.f_max, spec.steps);
  std::vector<SweepRow> rows;
  rows.reserve(spins.size() * grid.size());
  for (int two_j : spins) {
    const SpinLabel j(two_j);
    for (double f : grid) {
      const Su2InvariantState s(j, f);
      const double chi = holevo_closed(s, spec.log_base).chi;
      if (spec.cross_check && two_j <= kMaxOracleTwoJ) {
        const double oracle =
            holevo_numeric(density_matrix(s), MeasurementFrame::identity(), j, spec.log_base).chi;
        if (std::abs(oracle - chi) > kSweepCrossCheckTol) {
          std::ostringstream msg;
          msg << "closed form and oracle disagree at 2j=" << two_j << ", F=" << f << ": " << chi
              << " vs " << oracle;
          throw VerificationError(msg.str());
        }
      }
      rows.push_back({two_j, f, chi});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "two_j,F,chi\n";
  for (const auto& r : rows)
    os << r.two_j << ',' << format_number(r.f) << ',' << format_number(r.chi) << '\n';
}

nlohmann::json sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  nlohmann::json out;
  out["spec"] = {{"two_j", spec.two_j_list},
                 {"f_min", spec.f_min},
                 {"f_max", spec.f_max},
                 {"steps", spec.steps},
                 {"log_base", std::string(to_string(spec.log_base))}};
  auto& arr = out["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"two_j", r.two_j}, {"F", rounded(r.f)}, {"chi", rounded(r.chi)}});
  return out;
}

void VerifyConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("verify needs trials >= 1");
  if (two_j_list.empty()) throw std::invalid_argument("verify needs at least one spin");
  for (int two_j : two_j_list) SpinLabel{two_j};
  if (f_values.empty()) throw std::invalid_argument("verify needs at least one F value");
  for (double f : f_values)
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("verify F values must lie in [0, 1]");
  if (!(tol > 0.0)) throw std::invalid_argument("verify tolerance must be positive");
}

VerifyReport run_verify(const VerifyConfig& config) {
  config.validate();
  const auto frames = random_frames(static_cast<std::size_t>(config.trials), config.seed);

  VerifyReport report;
  report.trials = config.trials;
  for (int two_j : config.two_j_list) {
    const SpinLabel j(two_j);
    for (double f : config.f_values) {
      const Su2InvariantState s(j, f);
      const ComplexMatrix rho = density_matrix(s);
      report.max_invariance_residual =
          std::max(report.max_invariance_residual, check_su2_invariance(rho, j));

      const double closed = holevo_closed(s).chi;
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (const auto& frame : frames) {
        const auto numeric_ensemble = conditional_ensemble_numeric(rho, frame, j);
        const double chi = holevo_of_ensemble(numeric_ensemble).chi;
        const double gap = std::max(
            std::abs(chi - closed),
            ensemble_gap(numeric_ensemble, conditional_ensemble_closed(s, frame)));
        report.max_closed_vs_numeric_gap = std::max(report.max_closed_vs_numeric_gap, gap);
        lo = std::min(lo, chi);
        hi = std::max(hi, chi);
      }
      report.max_frame_spread = std::max(report.max_frame_spread, hi - lo);
    }
  }
  report.pass = report.max_closed_vs_numeric_gap <= config.tol &&
                report.max_frame_spread <= config.tol &&
                report.max_invariance_residual <= config.tol;
  return report;
}

nlohmann::json verify_json(const VerifyConfig& config, const VerifyReport& report) {
  return {{"two_j", config.two_j_list},
          {"F", config.f_values},
          {"trials", report.trials},
          {"seed", config.seed},
          {"tol", config.tol},
          {"max_closed_vs_numeric_gap", report.max_closed_vs_numeric_gap},
          {"max_frame_spread", report.max_frame_spread},
          {"max_invariance_residual", report.max_invariance_residual},
          {"pass", report.pass}};
}

namespace {

struct SpinOptions {
  std::vector<int> two_j;
  std::vector<std::string> j;

  void attach(CLI::App* cmd, bool multiple) {
    if (multiple) {
      cmd->add_option("--two-j", two_j, "Twice the spin, e.g. 3 for j = 3/2 (comma list allowed)")
          ->delimiter(',');
      cmd->add_option("--j", j, "Spin as p/q, e.g. 3/2 (comma list allowed)")->delimiter(',');
    } else {
      cmd->add_option("--two-j", two_j, "Twice the spin, e.g. 3 for j = 3/2")->expected(1);
      cmd->add_option("--j", j, "Spin as p/q, e.g. 3/2")->expected(1);
    }
  }

  std::vector<int> resolve() const {
    std::vector<int> out = two_j;
    for (const auto& text : j) out.push_back(SpinLabel::parse(text).two_j());
    for (int v : out) SpinLabel{v};
    return out;
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw std::invalid_argument("failed writing output file '" + path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holevo quantity of rotation-invariant spin-j x spin-1/2 states"};
  app.require_subcommand(1);

  std::string base_text = "2";

  // value
  auto* value_cmd = app.add_subcommand("value", "Evaluate one (j, F) point as JSON");
  SpinOptions value_spin;
  value_spin.attach(value_cmd, false);
  double value_f = 0.0;
  value_cmd->add_option("--f", value_f, "State parameter F in [0, 1]")->required();
  value_cmd->add_option("--log-base", base_text, "Entropy base: 2 or e")
      ->check(CLI::IsMember({"2", "e"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate chi over an F grid");
  SpinOptions sweep_spin;
  sweep_spin.attach(sweep_cmd, true);
  SweepSpec spec;
  std::string format = "csv";
  std::string sweep_output;
  sweep_cmd->add_option("--f-min", spec.f_min, "Lower end of the F grid")
      ->capture_default_str();
  sweep_cmd->add_option("--f-max", spec.f_max, "Upper end of the F grid")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", spec.steps, "Grid points, endpoints included")
      ->capture_default_str();
  sweep_cmd->add_option("--log-base", base_text, "Entropy base: 2 or e")
      ->check(CLI::IsMember({"2", "e"}));
  sweep_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_option("--output", sweep_output, "Write to this file instead of stdout");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Check closed form against the matrix oracle");
  SpinOptions verify_spin;
  verify_spin.attach(verify_cmd, true);
  VerifyConfig config;
  double verify_f_min = 0.0, verify_f_max = 1.0;
  int verify_steps = 11;
  std::string verify_output;
  verify_cmd->add_option("--f-min", verify_f_min, "Lower end of the F grid")
      ->capture_default_str();
  verify_cmd->add_option("--f-max", verify_f_max, "Upper end of the F grid")
      ->capture_default_str();
  verify_cmd->add_option("--steps", verify_steps, "Grid points, endpoints included")
      ->capture_default_str();
  verify_cmd->add_option("--trials", config.trials, "Random measurement frames per point")
      ->capture_default_str();
  verify_cmd->add_option("--seed", config.seed, "Seed for the frame sampler")
      ->capture_default_str();
  verify_cmd->add_option("--tol", config.tol, "Pass threshold for every check")
      ->capture_default_str();
  verify_cmd->add_option("--output", verify_output, "Write the report to this file");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgumentError;
  }

  const LogBase base = parse_log_base(base_text);
  try {
    if (value_cmd->parsed()) {
      const auto spins = value_spin.resolve();
      if (spins.size() != 1) throw std::invalid_argument("value needs exactly one of --two-j, --j");
      out << value_report(SpinLabel(spins.front()), value_f, base).dump(2) << '\n';
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      spec.two_j_list = sweep_spin.resolve();
      if (spec.two_j_list.empty()) spec.two_j_list = {1};
      spec.log_base = base;
      spec.output_format = format == "json" ? OutputFormat::json : OutputFormat::csv;
      spec.validate();
      std::vector<SweepRow> rows;
      try {
        rows = run_sweep(spec);
      } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
      }
      std::ostringstream text;
      if (spec.output_format == OutputFormat::csv)
        write_sweep_csv(text, rows);
      else
        text << sweep_json(spec, rows).dump(2) << '\n';
      emit(sweep_output, text.str(), out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto spins = verify_spin.resolve();
      if (!spins.empty()) config.two_j_list = spins;
      if (!(verify_f_min < verify_f_max) || verify_steps < 2)
        throw std::invalid_argument("verify needs f_min < f_max and steps >= 2");
      config.f_values = f_grid(verify_f_min, verify_f_max, verify_steps);
      const VerifyReport report = run_verify(config);
      emit(verify_output, verify_json(config, report).dump(2) + "\n", out);
      if (!verify_output.empty()) out << (report.pass ? "pass\n" : "FAIL\n");
      return report.pass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgumentError;
  }
  return kExitArgumentError;
}

}  // namespace su2holevo::cli
