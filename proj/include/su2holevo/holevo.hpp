#pragma once

#include <string_view>
#include <vector>

#include "su2holevo/measurement.hpp"
#include "su2holevo/states.hpp"

namespace su2holevo {

enum class LogBase { two, e };

/// "2" or "e". Throws std::invalid_argument otherwise.
LogBase parse_log_base(std::string_view text);
std::string_view to_string(LogBase base);

/// Eigenvalues treated as a probability distribution.
///
/// Values in [-1e-10, 0) are clamped to zero on construction; anything more
/// negative, or above 1 + 1e-10, is rejected with std::domain_error.
class Spectrum {
 public:
  static constexpr double kClampTol = 1e-10;

  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  double sum() const;

 private:
  std::vector<double> values_;
};

/// -sum p log p with 0 log 0 = 0.
double entropy(const Spectrum& sp, LogBase base = LogBase::two);

/// Entropy of a density operator from its eigenvalues.
double von_neumann_entropy(const ComplexMatrix& rho, LogBase base = LogBase::two);

/// The 2j+1 eigenvalues of either post-measurement state of the spin-j factor,
///   1/(2j+1) +- (j - n) |F(2j+1) - j| / (j (j+1) (2j+1)),  n = 0 .. floor(j),
/// with the unpaired n = j value (integer j only) listed once. Ordered by
/// decreasing value, i.e. by m = j, j-1, ..., -j.
Spectrum conditional_spectrum(const Su2InvariantState& s);

struct HolevoResult {
  double chi;
  double marginal_entropy;          // S(sum_k p_k rho_k)
  double mean_conditional_entropy;  // sum_k p_k S(rho_k)
};

/// Closed form: log(2j+1) - S(conditional_spectrum(s)). Frame-independent.
HolevoResult holevo_closed(const Su2InvariantState& s, LogBase base = LogBase::two);

/// Holevo quantity of an arbitrary ensemble, by eigendecomposition.
HolevoResult holevo_of_ensemble(const ConditionalEnsemble& ensemble,
                                LogBase base = LogBase::two);

/// Measures the qubit of rho_ab in `frame` and evaluates the ensemble.
HolevoResult holevo_numeric(const ComplexMatrix& rho_ab, const MeasurementFrame& frame,
                            SpinLabel j, LogBase base = LogBase::two);

}  // namespace su2holevo
