#pragma once

#include <vector>

#include "su2holevo/angular.hpp"
#include "su2holevo/matrix.hpp"

namespace su2holevo {

/// Rotation-invariant state of a spin-j and a qubit, mixing the two total-spin
/// multiplets with weights F (total j - 1/2) and 1 - F (total j + 1/2).
class Su2InvariantState {
 public:
  /// Throws std::invalid_argument unless 0 <= f <= 1.
  Su2InvariantState(SpinLabel j, double f);

  SpinLabel j() const { return j_; }
  double f() const { return f_; }

  double weight_lower() const { return f_; }
  double weight_upper() const { return 1.0 - f_; }

  /// Total dimension 2(2j+1).
  int dim() const { return 2 * j_.dim(); }

  /// F = j/(2j+1): the measured ensemble carries no information.
  static double f_zero(SpinLabel j) { return j.two_j() / (2.0 * (j.two_j() + 1)); }
  /// F = 2j/(2j+1): separable at or below this value.
  static double f_separable(SpinLabel j) { return j.two_j() / (j.two_j() + 1.0); }

 private:
  SpinLabel j_;
  double f_;
};

/// F/(2j) P_{j-1/2} + (1-F)/(2j+2) P_{j+1/2} in the product basis.
ComplexMatrix density_matrix(const Su2InvariantState& s);

struct SpectrumLevel {
  double value;
  int multiplicity;
};

/// {(F/(2j), 2j), ((1-F)/(2j+2), 2j+2)}.
std::vector<SpectrumLevel> analytic_spectrum(const Su2InvariantState& s);

/// max over a in {x, y, z} of the Frobenius norm of [J_a, m].
/// Throws std::invalid_argument if m is not 2(2j+1)-square.
double check_su2_invariance(const ComplexMatrix& m, SpinLabel j);

/// Eigenvalues of the partial transpose at or above -tol count as zero.
inline constexpr double kNegativityTol = 1e-10;

/// Sum of |negative eigenvalues| of the partial transpose on the second factor.
double negativity(const ComplexMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b,
                  double tol = kNegativityTol);

double negativity(const Su2InvariantState& s, double tol = kNegativityTol);

}  // namespace su2holevo
