#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace su2holevo {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Column vectors are n x 1 matrices.
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Default tolerance for Hermiticity, trace and positivity checks.
inline constexpr double kDensityTol = 1e-10;

ComplexMatrix identity(Eigen::Index n);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the second factor of a (dim_a * dim_b)-square operator.
/// Throws std::invalid_argument on a dimension mismatch.
ComplexMatrix partial_trace_b(const ComplexMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b);

/// Transposes each dim_b x dim_b block in place of the block.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// Real eigenvalues of a Hermitian matrix in ascending order.
/// Throws std::invalid_argument if m is not square or is non-Hermitian beyond tol.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double tol = kDensityTol);

/// Throws std::invalid_argument unless m is Hermitian, unit-trace and
/// positive semidefinite, each within tol.
void validate_density(const ComplexMatrix& m, double tol = kDensityTol);

bool is_density(const ComplexMatrix& m, double tol = kDensityTol);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

namespace detail {

struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;  // columns, matching `values`
};

/// Full decomposition, exposed for residual tests only.
HermitianEigen eigh(const ComplexMatrix& m, double tol = kDensityTol);

}  // namespace detail

}  // namespace su2holevo
