#pragma once

#include <string_view>
#include <utility>

#include "opmeans/matrix.hpp"
#include "opmeans/means.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

/// Commutator gaps above this with a vanishing mean gap count as a
/// counterexample. Between identity_tol and this band a pair is Indeterminate.
inline constexpr double kCommutatorViolationBand = 1e-6;

/// Residuals of each step of the commutativity argument. Every entry is a
/// Frobenius norm divided by the combined size of the terms it compares, so it
/// stays meaningful when both sides vanish.
///
/// With S = A^{1/2}, T = B^{1/2}, H = heron mean, W = Wasserstein mean:
///   r1: 4(H - W)  vs  ST + TS - S X S^{-1} - S^{-1} X S           (always)
///   r2: AY + Y*A - AX - XA  vs  4 S (H - W) S                     (always)
///   r3: (A+Y)*(A+Y) - (A+X)^2  vs  AY + Y*A - AX - XA             (always)
///   r4: |A + Y|  vs  A + X                       (only when H = W)
///   r5: polar factor of Y  vs  I                 (only when H = W)
///   r6: Y  vs  Y*                                (tracks the commutator)
/// abs_y checks |Y| = X, which holds for every pair.
struct ProofResiduals {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
  double r5 = 0.0;
  double r6 = 0.0;
  double abs_y = 0.0;
};

struct GapReport {
  double mean_gap = 0.0;        // ||H - W||_F / (||A||_F + ||B||_F)
  double commutator_gap = 0.0;  // ||AB - BA||_F / (||A||_F ||B||_F)
  double trace_gap = 0.0;       // tr X - tr(A^{1/2} B^{1/2})
  double trace_x = 0.0;
  ProofResiduals residuals;
  bool polar_singular = false;  // r5 is NaN when set
};

GapReport proof_chain_report(const HpdPair& p, const ToleranceConfig& cfg);

enum class Verdict {
  MeansEqualAndCommute,
  BothGapsPositive,
  Indeterminate,
  CounterexampleToTheorem,
};

std::string_view to_string(Verdict v) noexcept;

/// Classifies a report:
///   MeansEqualAndCommute     mean_gap <= tol and commutator_gap <= tol
///   CounterexampleToTheorem  mean_gap <= tol and commutator_gap > 1e-6
///   BothGapsPositive         both gaps > 10 * tol
///   Indeterminate            otherwise
Verdict classify(const GapReport& r, const ToleranceConfig& cfg) noexcept;

Verdict theorem_check(const HpdPair& p, const ToleranceConfig& cfg);

/// Matrix-trace instance of the tracial criterion. trace_gap equals
/// 2 (tr W - tr H) and is nonnegative; it vanishes exactly for commuting pairs.
struct TraceCriterion {
  double trace_gap = 0.0;
  double trace_x = 0.0;
  bool commute_flag = false;  // trace_gap <= identity_tol * trace_x
};

TraceCriterion trace_criterion(const HpdPair& p, const ToleranceConfig& cfg);
TraceCriterion trace_criterion(const GapReport& r, const ToleranceConfig& cfg) noexcept;

struct WitnessReport {
  double triangle_residual = 0.0;  // || |X+Y| - |X| - |Y| ||_F / || |X+Y| ||_F
  ComplexMatrix witness;           // common polar factor U
  std::pair<double, double> factor_residuals;  // ||X - U|X|||/||X||, ||Y - U|Y|||/||Y||
};

/// Recovers the common polar factor of X and Y when |X + Y| = |X| + |Y|.
///
/// Throws TriangleEqualityFails when the triangle residual exceeds
/// identity_tol, and Singular when X + Y is not invertible.
WitnessReport ando_hayashi_witness(const ComplexMatrix& x, const ComplexMatrix& y,
                                   const ToleranceConfig& cfg);

}  // namespace opmeans
