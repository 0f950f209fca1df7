#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "su2holevo/matrix.hpp"
#include "su2holevo/states.hpp"
#include "test_support.hpp"

using namespace su2holevo;
using su2holevo::testing::random_density;
using su2holevo::testing::random_hermitian;
using su2holevo::testing::random_matrix;

namespace {

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  Eigen::Index k = 0;
  for (double v : values) {
    m(k, k) = v;
    ++k;
  }
  return m;
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) { EXPECT_EQ(max_abs_diff(kron(identity(2), identity(2)), identity(4)), 0.0); }

TEST(Kron, ProjectorProduct) {
  EXPECT_EQ(max_abs_diff(kron(diag({1, 0}), diag({1, 0})), diag({1, 0, 0, 0})), 0.0);
}

TEST(Kron, DoubleBitFlip) {
  ComplexMatrix ket00 = ComplexMatrix::Zero(4, 1);
  ket00(0, 0) = 1.0;
  ComplexMatrix ket11 = ComplexMatrix::Zero(4, 1);
  ket11(3, 0) = 1.0;
  EXPECT_EQ(max_abs_diff(kron(sigma_x(), sigma_x()) * ket00, ket11), 0.0);
}

TEST(Kron, BlockStructureAndShape) {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_matrix(2, 3, rng);
  const ComplexMatrix b = random_matrix(3, 2, rng);
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_LT(max_abs_diff(k.block(3 * i, 2 * j, 3, 2), a(i, j) * b), 1e-15);
}

TEST(Kron, AssociativeAndBilinear) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix a2 = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(3, 2, rng);
    const ComplexMatrix c = random_matrix(2, 3, rng);
    const Complex alpha(0.3, -1.2);
    EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    EXPECT_LT(max_abs_diff(kron(alpha * a + a2, b), alpha * kron(a, b) + kron(a2, b)), 1e-12);
    EXPECT_LT(max_abs_diff(kron(b, alpha * a + a2), alpha * kron(b, a) + kron(b, a2)), 1e-12);
  }
}

TEST(PartialTrace, FactorizedInput) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const ComplexMatrix b = random_matrix(2, 2, rng);
  EXPECT_LT(max_abs_diff(partial_trace_b(kron(a, b), 3, 2), a * b.trace()), 1e-12);
}

TEST(PartialTrace, IdentityFour) {
  EXPECT_EQ(max_abs_diff(partial_trace_b(identity(4), 2, 2), 2.0 * identity(2)), 0.0);
}

TEST(PartialTrace, SingletReducesToMaximallyMixed) {
  // Oracle: the singlet written out by hand, not the state constructor.
  const ComplexMatrix reduced = partial_trace_b(su2holevo::testing::singlet_by_hand(), 2, 2);
  EXPECT_LT(max_abs_diff(reduced, 0.5 * identity(2)), 1e-15);
  // And the library's own state at j = 1/2, F = 1 agrees.
  const ComplexMatrix lib = partial_trace_b(density_matrix({SpinLabel(1), 1.0}), 2, 2);
  EXPECT_LT(max_abs_diff(lib, 0.5 * identity(2)), 1e-15);
}

TEST(PartialTrace, PreservesTraceOnRandomInput) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(12, 12, rng);
    EXPECT_LT(std::abs(partial_trace_b(m, 6, 2).trace() - m.trace()), 1e-12);
    EXPECT_LT(std::abs(partial_trace_b(m, 3, 4).trace() - m.trace()), 1e-12);
  }
}

TEST(PartialTrace, RejectsDimensionMismatch) {
  EXPECT_THROW(partial_trace_b(identity(5), 2, 2), std::invalid_argument);
  EXPECT_THROW(partial_trace_b(ComplexMatrix::Zero(4, 2), 2, 2), std::invalid_argument);
}

TEST(PartialTranspose, Involution) {
  std::mt19937_64 rng(5);
  const ComplexMatrix m = random_matrix(8, 8, rng);
  EXPECT_EQ(max_abs_diff(partial_transpose_b(partial_transpose_b(m, 4, 2), 4, 2), m), 0.0);
}

TEST(PartialTranspose, ActsOnSecondFactor) {
  std::mt19937_64 rng(6);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const ComplexMatrix b = random_matrix(2, 2, rng);
  EXPECT_LT(max_abs_diff(partial_transpose_b(kron(a, b), 3, 2), kron(a, b.transpose())), 1e-15);
}

TEST(PartialTranspose, MatchesIndexSwapAndPreservesTraceAndHermiticity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = random_hermitian(10, rng);
    const ComplexMatrix pt = partial_transpose_b(h, 5, 2);
    EXPECT_EQ(max_abs_diff(pt, su2holevo::testing::partial_transpose_by_index(h, 5)), 0.0);
    EXPECT_LT(std::abs(pt.trace() - h.trace()), 1e-12);
    EXPECT_LT(hermiticity_defect(pt), 1e-15);
  }
}

TEST(PartialTranspose, SingletIsNotPpt) {
  const auto values = eigvals_hermitian(partial_transpose_b(density_matrix({SpinLabel(1), 1.0}), 2, 2));
  // Singlet: partial transpose has spectrum {-1/2, 1/2, 1/2, 1/2}.
  EXPECT_NEAR(values.front(), -0.5, 1e-12);
  const auto oracle = eigvals_hermitian(
      su2holevo::testing::partial_transpose_by_index(su2holevo::testing::singlet_by_hand(), 2));
  EXPECT_NEAR(oracle.front(), -0.5, 1e-12);
}

TEST(PartialTranspose, RejectsDimensionMismatch) {
  EXPECT_THROW(partial_transpose_b(identity(6), 2, 2), std::invalid_argument);
}

TEST(Eigvals, Diagonal) {
  const auto v = eigvals_hermitian(diag({3, 1, 2}));
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NEAR(v[0], 1.0, 1e-14);
  EXPECT_NEAR(v[1], 2.0, 1e-14);
  EXPECT_NEAR(v[2], 3.0, 1e-14);
}

TEST(Eigvals, PauliX) {
  const auto v = eigvals_hermitian(sigma_x());
  EXPECT_NEAR(v[0], -1.0, 1e-14);
  EXPECT_NEAR(v[1], 1.0, 1e-14);
}

TEST(Eigvals, StateSpectrumHalfAtHalf) {
  // F/(2j) = 1/2 once, (1 - F)/(2j + 2) = 1/6 three times.
  const auto v = eigvals_hermitian(density_matrix({SpinLabel(1), 0.5}));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v[0], 1.0 / 6, 1e-12);
  EXPECT_NEAR(v[1], 1.0 / 6, 1e-12);
  EXPECT_NEAR(v[2], 1.0 / 6, 1e-12);
  EXPECT_NEAR(v[3], 0.5, 1e-12);
}

TEST(Eigvals, RejectsNonHermitian) {
  ComplexMatrix m = identity(2);
  m(0, 1) = 1e-3;
  EXPECT_THROW(eigvals_hermitian(m), std::invalid_argument);
  EXPECT_THROW(eigvals_hermitian(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST(Eigvals, ResidualAscendingAndTraceOnRandomInput) {
  std::mt19937_64 rng(8);
  for (int n : {1, 2, 5, 16, 32}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto eig = detail::eigh(h);
    ASSERT_EQ(eig.values.size(), static_cast<std::size_t>(n));
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k > 0) EXPECT_LE(eig.values[k - 1], eig.values[k]);
      sum += eig.values[k];
      const ComplexMatrix v = eig.vectors.col(k);
      const double residual = (h * v - eig.values[k] * v).norm();
      EXPECT_LE(residual, 1e-10 * h.norm());
    }
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
  }
}

TEST(Density, RandomDensitySpectrumIsAProbabilityVector) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix rho = random_density(8, rng);
    const auto v = eigvals_hermitian(rho);
    double sum = 0.0;
    for (double x : v) sum += x;
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_GE(v.front(), -1e-10);
    EXPECT_TRUE(is_density(rho));
  }
}

TEST(Density, ValidationFailures) {
  EXPECT_FALSE(is_density(identity(2)));  // trace 2
  EXPECT_FALSE(is_density(diag({1.5, -0.5})));
  ComplexMatrix m = 0.5 * identity(2);
  m(0, 1) = 0.1;
  EXPECT_FALSE(is_density(m));
  EXPECT_TRUE(is_density(0.5 * identity(2)));
  EXPECT_THROW(validate_density(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}
