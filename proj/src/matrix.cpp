#include "su2holevo/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace su2holevo {

namespace {

void require_square(const ComplexMatrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << what << ": expected a " << n << "x" << n << " matrix, got " << m.rows() << "x"
        << m.cols();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b) {
  require_square(m, dim_a * dim_b, "partial_trace_b");
  ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j)
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m, Eigen::Index dim_a,
                                  Eigen::Index dim_b) {
  require_square(m, dim_a * dim_b, "partial_transpose_b");
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j)
      out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
          m.block(i * dim_b, j * dim_b, dim_b, dim_b).transpose();
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

namespace detail {

HermitianEigen eigh(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigh: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "eigh: matrix is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver did not converge");

  HermitianEigen out;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = solver.eigenvectors();
  return out;
}

}  // namespace detail

std::vector<double> eigvals_hermitian(const ComplexMatrix& m, double tol) {
  return detail::eigh(m, tol).values;
}

void validate_density(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("density operator must be a non-empty square matrix");
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "density operator is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    std::ostringstream msg;
    msg << "density operator trace is " << tr << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  const auto values = eigvals_hermitian(m, tol);
  if (values.front() < -tol) {
    std::ostringstream msg;
    msg << "density operator has negative eigenvalue " << values.front();
    throw std::invalid_argument(msg.str());
  }
}

bool is_density(const ComplexMatrix& m, double tol) {
  try {
    validate_density(m, tol);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace su2holevo
