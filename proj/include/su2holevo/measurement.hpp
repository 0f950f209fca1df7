#pragma once

#include <cstdint>
#include <vector>

#include "su2holevo/angular.hpp"
#include "su2holevo/matrix.hpp"
#include "su2holevo/states.hpp"

namespace su2holevo {

/// A von Neumann measurement on the qubit, {V |k><k| V^dagger}, with
/// V = t I + i (y1 sigma_x + y2 sigma_y + y3 sigma_z).
class MeasurementFrame {
 public:
  /// Throws std::invalid_argument unless t^2 + |y|^2 = 1 within 1e-12.
  MeasurementFrame(double t, double y1, double y2, double y3);

  static MeasurementFrame identity() { return {1.0, 0.0, 0.0, 0.0}; }

  double t() const { return t_; }
  double y1() const { return y1_; }
  double y2() const { return y2_; }
  double y3() const { return y3_; }

  /// The SU(2) element V.
  ComplexMatrix rotation() const;

 private:
  double t_, y1_, y2_, y3_;
};

/// Unit Bloch vector of the outcome-0 projector: V|0><0|V^dagger = (I + z.sigma)/2.
struct BlochVector {
  double z1, z2, z3;
};

BlochVector bloch_of(const MeasurementFrame& frame);

struct ProjectorPair {
  ComplexMatrix b0, b1;
};

ProjectorPair projectors(const MeasurementFrame& frame);

/// c (z1 Sx + z2 Sy + z3 Sz) on the spin-j factor, with
/// c = (2Fj + F - j) / (j (j+1) (2j+1)). Built entrywise from the
/// tridiagonal-in-m form.
ComplexMatrix n_matrix(const Su2InvariantState& s, const BlochVector& z);

struct ConditionalOutcome {
  double p;
  ComplexMatrix rho;  // state of the spin-j factor given the outcome
};

struct ConditionalEnsemble {
  std::vector<ConditionalOutcome> entries;

  /// Sum of p_k rho_k.
  ComplexMatrix average() const;
};

/// {(1/2, I/(2j+1) - N), (1/2, I/(2j+1) + N)}.
ConditionalEnsemble conditional_ensemble_closed(const Su2InvariantState& s,
                                                const MeasurementFrame& frame);

/// Outcomes below this probability are dropped.
inline constexpr double kMinOutcomeProbability = 1e-14;

/// Measures the qubit of a generic 2(2j+1)-dimensional density operator.
/// Throws std::invalid_argument if rho_ab is not a density operator of that size.
ConditionalEnsemble conditional_ensemble_numeric(const ComplexMatrix& rho_ab,
                                                 const MeasurementFrame& frame, SpinLabel j);

/// Largest entrywise gap between two ensembles, comparing p and rho per outcome.
/// Infinite if the outcome counts differ.
double ensemble_gap(const ConditionalEnsemble& a, const ConditionalEnsemble& b);

/// Frames uniform on the unit 3-sphere from normalized 4D Gaussian draws.
std::vector<MeasurementFrame> random_frames(std::size_t count, std::uint64_t seed);

}  // namespace su2holevo
