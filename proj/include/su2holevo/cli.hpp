#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "su2holevo/holevo.hpp"

namespace su2holevo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitArgumentError = 1;
inline constexpr int kExitVerificationFailure = 2;

/// Above this 2j, sweeps skip matrix construction and use the closed form only.
inline constexpr int kMaxOracleTwoJ = 64;

/// Closed form and oracle must agree this well for a sweep row to be emitted.
inline constexpr double kSweepCrossCheckTol = 1e-9;

/// Raised when a numerical cross-check inside a command fails.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

/// Twelve significant digits, C locale, e.g. "0.0817041659455".
std::string format_number(double x);

/// Single-point evaluation as one JSON object.
nlohmann::json value_report(SpinLabel j, double f, LogBase base = LogBase::two);

struct SweepSpec {
  std::vector<int> two_j_list{1};
  double f_min = 0.0;
  double f_max = 1.0;
  int steps = 101;
  LogBase log_base = LogBase::two;
  OutputFormat output_format = OutputFormat::csv;
  /// Recompute small-j points through the density matrix.
  bool cross_check = true;

  /// Throws std::invalid_argument on an empty j list, 2j < 1, F outside
  /// [0, 1], f_min >= f_max or steps < 2.
  void validate() const;
};

struct SweepRow {
  int two_j;
  double f;
  double chi;
};

/// Uniform grid inclusive of both endpoints.
std::vector<double> f_grid(double f_min, double f_max, int steps);

/// Rows sorted by (two_j, F). Throws VerificationError if a cross-check fails.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header `two_j,F,chi`, LF line endings.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// {"spec": {...}, "rows": [{"two_j", "F", "chi"}, ...]}.
nlohmann::json sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

struct VerifyConfig {
  std::vector<int> two_j_list{1, 2, 3, 4, 5, 7};
  std::vector<double> f_values = f_grid(0.0, 1.0, 11);
  int trials = 100;
  std::uint64_t seed = 20211014;
  double tol = 1e-10;

  void validate() const;
};

struct VerifyReport {
  int trials = 0;
  /// Holevo quantity and entrywise ensemble gaps, closed form vs oracle.
  double max_closed_vs_numeric_gap = 0.0;
  /// max - min of the oracle's chi across frames at fixed (j, F).
  double max_frame_spread = 0.0;
  /// Largest commutator norm of a state with a total-spin component.
  double max_invariance_residual = 0.0;
  bool pass = false;
};

/// Deterministic given config.seed.
VerifyReport run_verify(const VerifyConfig& config);

nlohmann::json verify_json(const VerifyConfig& config, const VerifyReport& report);

/// Full command-line entry point: `value`, `sweep` and `verify`.
/// args[0] is the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su2holevo::cli
