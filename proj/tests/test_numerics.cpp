#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qsc/numerics.hpp"
#include "qsc/random.hpp"

using namespace qsc;

namespace {

Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

TEST(HermitianEig, DiagonalIsSortedWithPermutedIdentityVectors) {
  const auto eig = hermitian_eig(DenseMatrix::diagonal({3.0, 1.0, 2.0}));
  EXPECT_NEAR(eig.values[0], 1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 2.0, 1e-14);
  EXPECT_NEAR(eig.values[2], 3.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.vectors(0, 2)), 1.0, 1e-14);
}

TEST(HermitianEig, PathLaplacian) {
  const auto eig = hermitian_eig(DenseMatrix{{1.0, -1.0}, {-1.0, 1.0}});
  EXPECT_NEAR(eig.values[0], 0.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 2.0, 1e-14);
}

TEST(HermitianEig, ReconstructsRandomMatricesUpTo64) {
  Rng rng(11);
  for (std::size_t dim : {1u, 2u, 3u, 8u, 17u, 32u, 64u}) {
    const auto a = random_hermitian(rng, dim);
    const auto eig = hermitian_eig(a);
    EXPECT_LE(max_abs_diff(eig.reconstruct(), a), 1e-10) << "dim " << dim;
    EXPECT_LE(DenseMatrix::max_abs_diff_to_identity(eig.vectors.adjoint() * eig.vectors), 1e-10) << "dim " << dim;
    EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
    EXPECT_LE(eigen_residual(a, eig), 1e-10 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST(HermitianEig, AgreesWithEigenSelfAdjointSolver) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial);
    const auto a = random_hermitian(rng, dim, trial % 2 == 0);
    const auto ours = hermitian_eig(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(to_eigen(a));
    ASSERT_EQ(ref.info(), Eigen::Success);
    for (std::size_t i = 0; i < dim; ++i) EXPECT_NEAR(ours.values[i], ref.eigenvalues()(i), 1e-10);
  }
}

TEST(HermitianEig, RejectsNonHermitianInput) {
  EXPECT_THROW(hermitian_eig(DenseMatrix{{1.0, 2.0}, {0.0, 1.0}}), InvalidArgument);
  EXPECT_THROW(hermitian_eig(DenseMatrix(2, 3)), InvalidArgument);
}

TEST(HermitianEig, SweepCapRaisesConvergenceError) {
  Rng rng(13);
  EigOptions opt;
  opt.max_sweeps = 1;
  EXPECT_THROW(hermitian_eig(random_hermitian(rng, 12), opt), ConvergenceError);
}

TEST(HermitianEig, DegenerateSpectrum) {
  Rng rng(14);
  const auto q = random_orthonormal(rng, 6, 6, true);
  const auto a = q * DenseMatrix::diagonal({1.0, 1.0, 1.0, 4.0, 4.0, 0.0}) * q.adjoint();
  const auto eig = hermitian_eig(a);
  EXPECT_NEAR(eig.values[0], 0.0, 1e-12);
  EXPECT_NEAR(eig.values[3], 1.0, 1e-12);
  EXPECT_NEAR(eig.values[5], 4.0, 1e-12);
  EXPECT_LE(max_abs_diff(eig.reconstruct(), a), 1e-10);
}

TEST(Matrix1Norm, Examples) {
  EXPECT_DOUBLE_EQ(matrix_1norm(DenseMatrix::identity(4)), 1.0);
  EXPECT_DOUBLE_EQ(matrix_1norm(DenseMatrix{{1.0, -2.0}, {3.0, 4.0}}), 6.0);
  EXPECT_DOUBLE_EQ(matrix_1norm(DenseMatrix::diagonal({2.0, 0.0})), 2.0);
}

TEST(Matrix1Norm, HomogeneousAndSubmultiplicative) {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_hermitian(rng, 7);
    const auto b = random_hermitian(rng, 7);
    const cplx c{-2.5, 1.5};
    EXPECT_NEAR(matrix_1norm(c * a), std::abs(c) * matrix_1norm(a), 1e-12 * matrix_1norm(a) * std::abs(c));
    EXPECT_LE(matrix_1norm(a * b), matrix_1norm(a) * matrix_1norm(b) * (1 + 1e-14));
  }
}

TEST(Reflection, Examples) {
  EXPECT_LE(max_abs_diff(proj_reflection(ComplexVector::basis(2, 0)), DenseMatrix::diagonal({-1.0, 1.0})), 1e-15);
  const double s = 1.0 / std::numbers::sqrt2;
  EXPECT_LE(max_abs_diff(proj_reflection(ComplexVector{s, s}), DenseMatrix{{0.0, -1.0}, {-1.0, 0.0}}), 1e-15);
  EXPECT_THROW(proj_reflection(ComplexVector{1.0, 1.0}), InvalidArgument);
}

TEST(Reflection, UnitaryHermitianInvolutoryAcrossDims) {
  Rng rng(16);
  for (std::size_t dim = 2; dim <= 64; dim += 7) {
    const auto u = random_unit_vector(rng, dim);
    const auto r = proj_reflection(u);
    EXPECT_TRUE(r.is_unitary(1e-10));
    EXPECT_TRUE(r.is_hermitian(1e-10));
    EXPECT_LE(DenseMatrix::max_abs_diff_to_identity(r * r), 1e-10);
    EXPECT_LE(max_abs_diff(r * u, -1.0 * u), 1e-12);
    ComplexVector w = random_complex_vector(rng, dim);
    w -= u.dot(w) * u;
    EXPECT_LE(max_abs_diff(r * w, w), 1e-12);
  }
}

TEST(Reflection, BasisReflectionMapsYToZero) {
  Rng rng(17);
  for (std::size_t dim : {2u, 4u, 16u}) {
    const auto y = random_unit_vector(rng, dim);
    const auto br = householder_to_basis(y);
    EXPECT_TRUE(br.reflection.is_hermitian(1e-12));
    EXPECT_LE(DenseMatrix::max_abs_diff_to_identity(br.reflection * br.reflection), 1e-10);
    const ComplexVector img = br.reflection * y;
    EXPECT_LE(max_abs_diff(img, br.phase * ComplexVector::basis(dim, 0)), 1e-12);
    const ComplexVector prep = (br.phase * br.reflection) * ComplexVector::basis(dim, 0);
    EXPECT_LE(max_abs_diff(prep, y), 1e-12);
  }
  const auto same = householder_to_basis(ComplexVector::basis(4, 0));
  EXPECT_LE(DenseMatrix::max_abs_diff_to_identity(same.reflection), 0.0);
}

TEST(Fidelity, Examples) {
  const double s = 1.0 / std::numbers::sqrt2;
  EXPECT_DOUBLE_EQ(fidelity(ComplexVector{1.0, 0.0}, ComplexVector{1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0}), 0.0);
  EXPECT_NEAR(fidelity(ComplexVector{1.0, 0.0}, ComplexVector{s, s}), 0.5, 1e-15);
  EXPECT_THROW(fidelity(ComplexVector{1.0, 0.0}, ComplexVector{1.0, 0.0, 0.0}), InvalidArgument);
}

TEST(Kron, MixedProductAndShape) {
  Rng rng(18);
  const auto a = random_hermitian(rng, 2), b = random_hermitian(rng, 3);
  const auto c = random_hermitian(rng, 2), d = random_hermitian(rng, 3);
  const auto k = kron(a, b);
  EXPECT_EQ(k.rows(), 6u);
  EXPECT_LE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
  const auto u = random_unit_vector(rng, 2), v = random_unit_vector(rng, 3);
  EXPECT_LE(max_abs_diff(kron(a, b) * kron(u, v), kron(a * u, b * v)), 1e-12);
}

TEST(Outer, MatchesDefinition) {
  const ComplexVector u{cplx{1, 1}, 2.0};
  const ComplexVector v{cplx{0, 1}, 3.0};
  const auto o = outer(u, v);
  EXPECT_EQ(o(0, 0), cplx(1, 1) * std::conj(cplx(0, 1)));
  EXPECT_EQ(o(1, 1), cplx(6, 0));
}

TEST(Vector, NormalizeAndDot) {
  ComplexVector v{3.0, cplx{0, 4}};
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_TRUE(v.normalized().is_normalized());
  EXPECT_THROW(ComplexVector(3).normalized(), DegenerateError);
  EXPECT_EQ(ComplexVector({cplx{0, 1}}).dot(ComplexVector({1.0})), cplx(0, -1));
}

TEST(Helpers, PowerOfTwo) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(12));
  EXPECT_EQ(log2_exact(16), 4u);
}
