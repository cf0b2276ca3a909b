#pragma once

#include <vector>

#include "opmeans/matrix.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

struct DescentOptions {
  int budget = 1000;                // gradient steps
  double fd_step = 1e-6;            // times (1 + ||S||_F)
  int max_backtracks = 40;
  double objective_target = 1e-16;  // stop once mean_gap^2 is this small
  double armijo = 1e-4;
};

struct DescentStep {
  int step = 0;
  double mean_gap = 0.0;
  double commutator_gap = 0.0;
  double objective = 0.0;
};

struct DescentTrace {
  std::vector<DescentStep> iterates;  // step 0 is the starting point
  ComplexMatrix final_b;
  bool converged = false;   // objective_target reached
  bool no_descent = false;  // line search exhausted its backtracks
};

/// Hermitian matrices as n^2 real coordinates: the diagonal, then
/// (Re, Im) of each strictly upper entry in row-major order.
std::vector<double> hermitian_to_coords(const ComplexMatrix& s);
ComplexMatrix coords_to_hermitian(std::span<const double> coords, std::size_t n);

/// f(S) = mean_gap(A, exp(S))^2 for a fixed A.
class GapObjective {
 public:
  GapObjective(const ComplexMatrix& a, const ToleranceConfig& cfg);

  std::size_t dim() const noexcept { return n_; }

  /// The normalized difference (heron - wasserstein)/(||A|| + ||B||) as
  /// 2 n^2 reals; f is its squared Euclidean norm.
  std::vector<double> residual(std::span<const double> coords) const;
  double value(std::span<const double> coords) const;

  /// Gradient used by the optimizer: forward differences of the residual
  /// with step h, contracted against the residual, 2 J^T r.
  std::vector<double> gradient(std::span<const double> coords, double h) const;

  /// Central differences of f itself, for spot checks.
  std::vector<double> central_gradient(std::span<const double> coords, double h) const;

  const ComplexMatrix& a() const noexcept { return a_; }

 private:
  ComplexMatrix a_;
  ComplexMatrix sqrt_a_;
  ComplexMatrix inv_sqrt_a_;
  double norm_a_;
  std::size_t n_;
  ToleranceConfig cfg_;
};

/// Drives mean_gap(A, B) to zero over B = exp(S), S Hermitian, by gradient
/// descent with halving backtracking. Objective values of accepted steps are
/// non-increasing. Throws Precondition for budget < 1 and
/// NotPositiveDefinite for invalid inputs; a failed line search is reported
/// through DescentTrace::no_descent.
DescentTrace minimize_gap(const ComplexMatrix& a, const ComplexMatrix& b0,
                          const ToleranceConfig& cfg, const DescentOptions& opts);

DescentTrace minimize_gap(const ComplexMatrix& a, const ComplexMatrix& b0,
                          const ToleranceConfig& cfg, int budget);

}  // namespace opmeans
