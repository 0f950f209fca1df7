#include "su2holevo/holevo.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace su2holevo {

namespace {

// Cancellation around F = j/(2j+1) can leave chi a hair below zero.
constexpr double kChiClampTol = 1e-12;

double log_in(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

HolevoResult make_result(double marginal, double conditional) {
  double chi = marginal - conditional;
  if (chi < 0.0 && chi >= -kChiClampTol) chi = 0.0;
  return {chi, marginal, conditional};
}

}  // namespace

LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  throw std::invalid_argument("log base must be '2' or 'e', got '" + std::string(text) + "'");
}

std::string_view to_string(LogBase base) { return base == LogBase::two ? "2" : "e"; }

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) {
    if (!(v >= -kClampTol && v <= 1.0 + kClampTol)) {
      std::ostringstream msg;
      msg << "spectrum value " << v << " is not a probability";
      throw std::domain_error(msg.str());
    }
    if (v < 0.0) v = 0.0;
  }
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double entropy(const Spectrum& sp, LogBase base) {
  double h = 0.0;
  for (double p : sp.values())
    if (p > 0.0) h -= p * log_in(p, base);
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho, LogBase base) {
  return entropy(Spectrum(eigvals_hermitian(rho)), base);
}

Spectrum conditional_spectrum(const Su2InvariantState& s) {
  const SpinLabel spin = s.j();
  const double j = spin.value();
  const double d = spin.dim();
  const double offset = std::abs(s.f() * d - j) / (j * (j + 1.0) * d);
  std::vector<double> values;
  values.reserve(spin.dim());
  // m = j - n and m = -(j - n) give the + and - branches; m = 0 appears once.
  for (int two_m = spin.two_j(); two_m >= -spin.two_j(); two_m -= 2)
    values.push_back(1.0 / d + 0.5 * two_m * offset);
  return Spectrum(std::move(values));
}

HolevoResult holevo_closed(const Su2InvariantState& s, LogBase base) {
  const double marginal = log_in(s.j().dim(), base);
  return make_result(marginal, entropy(conditional_spectrum(s), base));
}

HolevoResult holevo_of_ensemble(const ConditionalEnsemble& ensemble, LogBase base) {
  const double marginal = von_neumann_entropy(ensemble.average(), base);
  double conditional = 0.0;
  for (const auto& e : ensemble.entries) conditional += e.p * von_neumann_entropy(e.rho, base);
  return make_result(marginal, conditional);
}

HolevoResult holevo_numeric(const ComplexMatrix& rho_ab, const MeasurementFrame& frame,
                            SpinLabel j, LogBase base) {
  return holevo_of_ensemble(conditional_ensemble_numeric(rho_ab, frame, j), base);
}

}  // namespace su2holevo
