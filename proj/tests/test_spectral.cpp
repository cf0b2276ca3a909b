#include <gtest/gtest.h>

#include <cmath>

#include "opmeans/error.hpp"
#include "opmeans/polar.hpp"
#include "opmeans/random.hpp"
#include "opmeans/spectral.hpp"
#include "test_support.hpp"

using namespace opmeans;
using namespace std::complex_literals;
using opmeans::testutil::eig2x2_oracle;
using opmeans::testutil::random_hermitian;
using opmeans::testutil::rel_diff;

namespace {

const ToleranceConfig kCfg{};

const ComplexMatrix kTwoOne = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::Precondition;
}

}  // namespace

TEST(Tolerance, DefaultsValidate) {
  EXPECT_NO_THROW(kCfg.validate());
  ToleranceConfig bad;
  bad.identity_tol = 1e-13;
  EXPECT_THROW(bad.validate(), Error);
  bad = ToleranceConfig{};
  bad.max_jacobi_sweeps = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = ToleranceConfig{};
  bad.positivity_floor = -1.0;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(HermitianEigen, IdentityHasUnitSpectrum) {
  const auto eig = hermitian_eigen(ComplexMatrix::identity(3), kCfg);
  for (double v : eig.eigenvalues) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(HermitianEigen, DiagonalInputKeepsFrame) {
  const double d[] = {4.0, 1.0};
  const auto eig = hermitian_eigen(ComplexMatrix::diagonal(d), kCfg);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[1], 4.0);
  // Sorted ascending, so columns swap; each is a unit vector up to phase.
  EXPECT_DOUBLE_EQ(std::abs(eig.frame(1, 0)), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(eig.frame(0, 1)), 1.0);
}

TEST(HermitianEigen, TwoByTwoMatchesCharacteristicPolynomial) {
  const auto [lo, hi] = eig2x2_oracle(2.0, 1.0, 2.0);
  const auto eig = hermitian_eigen(kTwoOne, kCfg);
  EXPECT_NEAR(eig.eigenvalues[0], lo, 1e-15);
  EXPECT_NEAR(eig.eigenvalues[1], hi, 1e-15);
}

TEST(HermitianEigen, ComplexOffDiagonal) {
  // [[1, i], [-i, 1]] has spectrum {0, 2}.
  const auto h = ComplexMatrix::from_rows({{1.0, 1i}, {-1i, 1.0}});
  const auto eig = hermitian_eigen(h, kCfg);
  EXPECT_NEAR(eig.eigenvalues[0], 0.0, 1e-15);
  EXPECT_NEAR(eig.eigenvalues[1], 2.0, 1e-15);
  EXPECT_LT(rel_diff(reconstruct(eig.frame, eig.eigenvalues), h), 1e-15);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  const auto t = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_EQ(code_of([&] { hermitian_eigen(t, kCfg); }), ErrorCode::NotHermitian);
}

TEST(HermitianEigen, AbsorbsRoundoffAsymmetry) {
  auto h = kTwoOne;
  h(0, 1) += 1e-14;
  EXPECT_NO_THROW(hermitian_eigen(h, kCfg));
}

TEST(HermitianEigen, SweepLimitReportsNoConvergence) {
  ToleranceConfig cfg;
  cfg.max_jacobi_sweeps = 1;
  SplitMix64 rng(3);
  const ComplexMatrix h = random_hermitian(12, rng);
  EXPECT_EQ(code_of([&] { hermitian_eigen(h, cfg); }), ErrorCode::NoConvergence);
}

TEST(HermitianEigen, ZeroMatrix) {
  const auto eig = hermitian_eigen(ComplexMatrix(3), kCfg);
  for (double v : eig.eigenvalues) EXPECT_EQ(v, 0.0);
}

// Property: reconstruction and unitarity for random Hermitian inputs.
TEST(HermitianEigen, RandomReconstructionAndUnitarity) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 16;
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto eig = hermitian_eigen(h, kCfg);
    EXPECT_TRUE(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    EXPECT_LE(frobenius_norm(reconstruct(eig.frame, eig.eigenvalues) - h),
              kCfg.identity_tol * frobenius_norm(h));
    EXPECT_LE(frobenius_norm(adjoint(eig.frame) * eig.frame - ComplexMatrix::identity(n)),
              kCfg.identity_tol);
  }
}

TEST(MatrixFunction, SqrtOfDiagonal) {
  const double d[] = {4.0, 9.0};
  const double r[] = {2.0, 3.0};
  EXPECT_LT(rel_diff(sqrt_psd(ComplexMatrix::diagonal(d), kCfg), ComplexMatrix::diagonal(r)),
            1e-15);
}

TEST(MatrixFunction, SqrtOfTwoOneMatchesHandOracle) {
  // Eigenpairs (1, (1,-1)/sqrt2), (3, (1,1)/sqrt2).
  const double s3 = std::sqrt(3.0);
  const auto expected = ComplexMatrix::from_rows({{(s3 + 1) / 2, (s3 - 1) / 2},
                                                  {(s3 - 1) / 2, (s3 + 1) / 2}});
  const auto got = matrix_function(kTwoOne, [](double v) { return std::sqrt(v); }, kCfg);
  EXPECT_LT(rel_diff(got, expected), 1e-15);
}

TEST(MatrixFunction, IdentityMapReproducesInput) {
  SplitMix64 rng(8);
  const ComplexMatrix h = random_hermitian(6, rng);
  EXPECT_LT(rel_diff(matrix_function(h, [](double v) { return v; }, kCfg), h), kCfg.identity_tol);
}

TEST(MatrixFunction, DomainErrors) {
  const double d[] = {1.0, 0.0};
  const auto singular = ComplexMatrix::diagonal(d);
  EXPECT_EQ(code_of([&] { inv_sqrt_pd(singular, kCfg); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { log_pd(singular, kCfg); }), ErrorCode::DomainError);
  const double neg[] = {1.0, -1.0};
  EXPECT_EQ(code_of([&] { sqrt_psd(ComplexMatrix::diagonal(neg), kCfg); }),
            ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] {
              matrix_function(ComplexMatrix::diagonal(neg), [](double v) { return std::log(v); },
                              kCfg);
            }),
            ErrorCode::DomainError);
  // sqrt of a PSD matrix with a zero eigenvalue is fine.
  EXPECT_NO_THROW(sqrt_psd(singular, kCfg));
}

// Property: f(g(H)) = (f o g)(H) and sqrt(H)^2 = H on HPD inputs.
TEST(MatrixFunction, CompositionAndSquareRootIdempotence) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const ComplexMatrix h = random_hpd(n, 100.0, rng);
    const ComplexMatrix root = sqrt_psd(h, kCfg);
    EXPECT_LT(rel_diff(root * root, h), kCfg.identity_tol);
    const auto square = [](double v) { return v * v; };
    const auto sqrt_fn = [](double v) { return std::sqrt(v); };
    const ComplexMatrix composed = matrix_function(
        matrix_function(h, sqrt_fn, kCfg), square, kCfg);
    EXPECT_LT(rel_diff(composed, matrix_function(h, [](double v) { return v; }, kCfg)),
              kCfg.identity_tol);
    const ComplexMatrix other_way = matrix_function(matrix_function(h, square, kCfg), sqrt_fn, kCfg);
    EXPECT_LT(rel_diff(other_way, h), kCfg.identity_tol);
    EXPECT_LT(rel_diff(exp_hermitian(log_pd(h, kCfg), kCfg), h), kCfg.identity_tol);
  }
}

TEST(Norms, OperatorNormOfTwoOne) {
  const auto [lo, hi] = eig2x2_oracle(2.0, 1.0, 2.0);
  (void)lo;
  EXPECT_NEAR(op_norm(kTwoOne, kCfg), hi, 1e-14);
  EXPECT_NEAR(op_norm(kTwoOne, kCfg), 3.0, 1e-14);
}

TEST(PositiveDefinite, BasicCases) {
  EXPECT_TRUE(is_positive_definite(ComplexMatrix::identity(3), kCfg));
  const double d[] = {1.0, 0.0};
  EXPECT_FALSE(is_positive_definite(ComplexMatrix::diagonal(d), kCfg));
  EXPECT_TRUE(is_positive_definite(kTwoOne, kCfg));
  const double tiny[] = {1.0, 1e-13};
  EXPECT_FALSE(is_positive_definite(ComplexMatrix::diagonal(tiny), kCfg));
  const auto t = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_EQ(code_of([&] { is_positive_definite(t, kCfg); }), ErrorCode::NotHermitian);
}

TEST(AbsOp, PositiveIsFixed) {
  EXPECT_LT(rel_diff(abs_op(kTwoOne, kCfg), kTwoOne), 1e-15);
}

TEST(AbsOp, UnitaryGivesIdentity) {
  const auto rot = ComplexMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
  EXPECT_LT(rel_diff(abs_op(rot, kCfg), ComplexMatrix::identity(2)), 1e-15);
}

TEST(AbsOp, SingularInputClampsToPsd) {
  const auto nil = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const double d[] = {0.0, 1.0};
  EXPECT_LT(rel_diff(abs_op(nil, kCfg), ComplexMatrix::diagonal(d)), 1e-15);
}

// |B^{1/2} A^{1/2}| against (A^{1/2} B A^{1/2})^{1/2}, two independent routes.
TEST(AbsOp, ProductOfRootsMatchesCongruenceRoot) {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix a = random_hpd(n, 100.0, rng);
    const ComplexMatrix b = random_hpd(n, 100.0, rng);
    const ComplexMatrix sa = sqrt_psd(a, kCfg);
    const ComplexMatrix y = sqrt_psd(b, kCfg) * sa;
    const ComplexMatrix x = sqrt_psd(hermitian_part(sa * b * sa), kCfg);
    EXPECT_LE(frobenius_norm(abs_op(y, kCfg) - x), kCfg.identity_tol * frobenius_norm(x));
  }
}

TEST(Polar, PositiveDefiniteInput) {
  const auto parts = polar(kTwoOne, kCfg);
  EXPECT_LT(rel_diff(parts.isometry, ComplexMatrix::identity(2)), 1e-14);
  EXPECT_LT(rel_diff(parts.positive, kTwoOne), 1e-14);
}

TEST(Polar, UnitaryInput) {
  SplitMix64 rng(4);
  const ComplexMatrix w = random_unitary(5, rng);
  const auto parts = polar(w, kCfg);
  EXPECT_LT(rel_diff(parts.isometry, w), 1e-13);
  EXPECT_LT(rel_diff(parts.positive, ComplexMatrix::identity(5)), 1e-13);
}

TEST(Polar, SingularInputThrows) {
  const double d[] = {1.0, 0.0};
  EXPECT_EQ(code_of([&] { polar(ComplexMatrix::diagonal(d), kCfg); }), ErrorCode::Singular);
}

// Property: reconstruction, unitarity, and positive factor equal to |T|.
TEST(Polar, RandomInvertible) {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const ComplexMatrix t = random_unitary(n, rng) * random_hpd(n, 50.0, rng);
    const auto parts = polar(t, kCfg);
    EXPECT_LT(rel_diff(parts.isometry * parts.positive, t), kCfg.identity_tol);
    EXPECT_LT(frobenius_norm(adjoint(parts.isometry) * parts.isometry -
                             ComplexMatrix::identity(n)),
              kCfg.identity_tol);
    EXPECT_LT(rel_diff(parts.positive, abs_op(t, kCfg)), kCfg.identity_tol);
  }
}
