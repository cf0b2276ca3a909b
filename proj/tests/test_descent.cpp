#include <gtest/gtest.h>

#include <cmath>

#include "opmeans/descent.hpp"
#include "opmeans/error.hpp"
#include "opmeans/random.hpp"
#include "opmeans/spectral.hpp"
#include "test_support.hpp"

using namespace opmeans;

namespace {

const ToleranceConfig kCfg{};

ComplexMatrix diag(std::initializer_list<double> v) {
  return ComplexMatrix::diagonal(std::span<const double>(v.begin(), v.size()));
}

double l2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST(HermitianCoords, RoundTrip) {
  SplitMix64 rng(1);
  const ComplexMatrix s = testutil::random_hermitian(5, rng);
  const auto c = hermitian_to_coords(s);
  ASSERT_EQ(c.size(), 25u);
  EXPECT_EQ(coords_to_hermitian(c, 5), s);
  EXPECT_THROW(coords_to_hermitian(std::vector<double>(24), 5), Error);
}

TEST(MinimizeGap, ZeroBudgetRejected) {
  try {
    minimize_gap(ComplexMatrix::identity(2), ComplexMatrix::identity(2), kCfg, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(MinimizeGap, RejectsNonPositiveStart) {
  EXPECT_THROW(minimize_gap(ComplexMatrix::identity(2), diag({1.0, -1.0}), kCfg, 10), Error);
  EXPECT_THROW(minimize_gap(diag({1.0, 0.0}), ComplexMatrix::identity(2), kCfg, 10), Error);
}

TEST(MinimizeGap, IdentityCommutesWithEverything) {
  SplitMix64 rng(2);
  const ComplexMatrix b0 = random_hpd(3, 50.0, rng);
  const DescentTrace t = minimize_gap(ComplexMatrix::identity(3), b0, kCfg, 10);
  EXPECT_TRUE(t.converged);
  EXPECT_EQ(t.iterates.size(), 1u);
  EXPECT_LE(t.iterates.front().mean_gap, 1e-8);
}

TEST(MinimizeGap, DiagonalTargetDrivesStartToDiagonal) {
  SplitMix64 rng(3);
  const ComplexMatrix a = diag({1.0, 2.0});
  const ComplexMatrix b0 = random_hpd(2, 20.0, rng);
  ASSERT_GT(std::abs(b0(0, 1)), 1e-2);
  const DescentTrace t = minimize_gap(a, b0, kCfg, 2000);
  EXPECT_TRUE(t.converged);
  EXPECT_FALSE(t.no_descent);
  EXPECT_LE(t.iterates.back().mean_gap, 1e-8);
  EXPECT_LE(t.iterates.back().commutator_gap, 1e-4);
  EXPECT_TRUE(is_positive_definite(t.final_b, kCfg));
}

TEST(MinimizeGap, ObjectiveNeverIncreases) {
  SplitMix64 rng(4);
  const ComplexMatrix a = diag({1.0, 2.0, 4.0});
  for (int run = 0; run < 3; ++run) {
    const DescentTrace t = minimize_gap(a, random_hpd(3, 30.0, rng), kCfg, 300);
    for (std::size_t i = 1; i < t.iterates.size(); ++i) {
      EXPECT_LE(t.iterates[i].objective, t.iterates[i - 1].objective);
      EXPECT_EQ(t.iterates[i].step, static_cast<int>(i));
    }
  }
}

TEST(GapObjective, ForwardGradientMatchesCentralDifferences) {
  SplitMix64 rng(5);
  const GapObjective f(diag({1.0, 2.0, 3.0}), kCfg);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix s = testutil::random_hermitian(3, rng);
    const auto x = hermitian_to_coords(s);
    const double h = 1e-6 * (1.0 + frobenius_norm(s));
    const auto fwd = f.gradient(x, h);
    const auto ctr = f.central_gradient(x, h);
    std::vector<double> diff(fwd.size());
    for (std::size_t k = 0; k < fwd.size(); ++k) diff[k] = fwd[k] - ctr[k];
    EXPECT_LE(l2(diff), 1e-4 * l2(ctr));
  }
}

TEST(GapObjective, VanishesOnCommutingStart) {
  const GapObjective f(diag({1.0, 2.0, 3.0}), kCfg);
  const auto x = hermitian_to_coords(diag({0.3, -0.1, 0.7}));
  EXPECT_LT(f.value(x), 1e-28);
}
