#pragma once

#include <utility>

#include "opmeans/matrix.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

/// A pair of positive definite matrices of equal dimension. Only obtainable
/// through make(), which checks both invariants.
class HpdPair {
 public:
  /// Throws DimensionMismatch, NotHermitian or NotPositiveDefinite. Stores the
  /// Hermitian parts of the inputs.
  static HpdPair make(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg);

  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& b() const noexcept { return b_; }
  std::size_t dim() const noexcept { return a_.dim(); }

 private:
  HpdPair(ComplexMatrix a, ComplexMatrix b) : a_(std::move(a)), b_(std::move(b)) {}
  ComplexMatrix a_;
  ComplexMatrix b_;
};

/// The objects the commutativity argument is phrased in:
///   x = (A^{1/2} B A^{1/2})^{1/2},  y = B^{1/2} A^{1/2}.
struct ProofIntermediates {
  ComplexMatrix sqrt_a;
  ComplexMatrix sqrt_b;
  ComplexMatrix inv_sqrt_a;
  ComplexMatrix x;
  ComplexMatrix y;
};

ProofIntermediates proof_intermediates(const HpdPair& p, const ToleranceConfig& cfg);

/// Kubo-Ando geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}.
ComplexMatrix geometric_mean(const HpdPair& p, const ToleranceConfig& cfg);

/// ((A^{1/2} + B^{1/2}) / 2)^2.
ComplexMatrix heron_mean(const HpdPair& p, const ToleranceConfig& cfg);
ComplexMatrix heron_mean(const ProofIntermediates& q, const HpdPair& p, const ToleranceConfig& cfg);

/// Wasserstein mean, evaluated as
///   (A + B + A^{1/2} X A^{-1/2} + A^{-1/2} X A^{1/2}) / 4
/// using A^{-1} # B = A^{-1/2} X A^{-1/2}.
ComplexMatrix wasserstein_mean(const HpdPair& p, const ToleranceConfig& cfg);
ComplexMatrix wasserstein_mean(const ProofIntermediates& q, const HpdPair& p,
                               const ToleranceConfig& cfg);

/// Wasserstein mean from its defining formula
///   (A + B + A G + G A) / 4,  G = geometric_mean(A^{-1}, B).
/// Shares no intermediate with wasserstein_mean; used as its cross-check.
ComplexMatrix wasserstein_mean_direct(const HpdPair& p, const ToleranceConfig& cfg);

/// trace(A) + trace(B) - 2 trace(X), the squared Bures-Wasserstein distance.
double bw_distance_sq(const HpdPair& p, const ToleranceConfig& cfg);

enum class MeanKind { Heron, Wasserstein, Geometric };

ComplexMatrix compute_mean(MeanKind kind, const HpdPair& p, const ToleranceConfig& cfg);

}  // namespace opmeans
