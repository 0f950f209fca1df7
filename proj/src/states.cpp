#include "su2holevo/states.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

namespace su2holevo {

Su2InvariantState::Su2InvariantState(SpinLabel j, double f) : j_(j), f_(f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    std::ostringstream msg;
    msg << "state parameter F must lie in [0, 1], got " << f;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix density_matrix(const Su2InvariantState& s) {
  const int two_j = s.j().two_j();
  // Multiplet sizes: 2j for total j - 1/2, 2j + 2 for total j + 1/2.
  const double lower = s.weight_lower() / two_j;
  const double upper = s.weight_upper() / (two_j + 2);
  ComplexMatrix rho = lower * multiplet_projector(s.j(), Multiplet::minus) +
                      upper * multiplet_projector(s.j(), Multiplet::plus);
  return rho;
}

std::vector<SpectrumLevel> analytic_spectrum(const Su2InvariantState& s) {
  const int two_j = s.j().two_j();
  return {{s.weight_lower() / two_j, two_j}, {s.weight_upper() / (two_j + 2), two_j + 2}};
}

double check_su2_invariance(const ComplexMatrix& m, SpinLabel j) {
  const Eigen::Index n = 2 * j.dim();
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << "check_su2_invariance: expected " << n << "x" << n << ", got " << m.rows() << "x"
        << m.cols();
    throw std::invalid_argument(msg.str());
  }
  const SpinOperators total = total_spin_operators(j);
  double worst = 0.0;
  for (const ComplexMatrix* op : {&total.x, &total.y, &total.z}) {
    const ComplexMatrix comm = (*op) * m - m * (*op);
    worst = std::max(worst, comm.norm());
  }
  return worst;
}

double negativity(const ComplexMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b, double tol) {
  const auto values = eigvals_hermitian(partial_transpose_b(m, dim_a, dim_b));
  double sum = 0.0;
  for (double v : values)
    if (v < -tol) sum -= v;
  return sum;
}

double negativity(const Su2InvariantState& s, double tol) {
  return negativity(density_matrix(s), s.j().dim(), 2, tol);
}

}  // namespace su2holevo
