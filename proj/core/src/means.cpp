#include "opmeans/means.hpp"

#include <cmath>

#include "opmeans/error.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

HpdPair HpdPair::make(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg) {
  require_same_dim(a, b);
  ComplexMatrix ha = checked_hermitian(a, cfg);
  ComplexMatrix hb = checked_hermitian(b, cfg);
  if (!is_positive_definite(ha, cfg))
    throw Error(ErrorCode::NotPositiveDefinite, "first matrix of pair");
  if (!is_positive_definite(hb, cfg))
    throw Error(ErrorCode::NotPositiveDefinite, "second matrix of pair");
  return HpdPair(std::move(ha), std::move(hb));
}

ProofIntermediates proof_intermediates(const HpdPair& p, const ToleranceConfig& cfg) {
  const HermitianEigen eig_a = hermitian_eigen(p.a(), cfg);
  ComplexMatrix sqrt_a = apply_function(eig_a, [](double v) { return std::sqrt(v); });
  ComplexMatrix inv_sqrt_a = apply_function(eig_a, [](double v) { return 1.0 / std::sqrt(v); });
  ComplexMatrix sqrt_b = sqrt_psd(p.b(), cfg);
  ComplexMatrix x = sqrt_psd(checked_hermitian(sqrt_a * p.b() * sqrt_a, cfg), cfg);
  ComplexMatrix y = sqrt_b * sqrt_a;
  return ProofIntermediates{std::move(sqrt_a), std::move(sqrt_b), std::move(inv_sqrt_a),
                            std::move(x), std::move(y)};
}

ComplexMatrix geometric_mean(const HpdPair& p, const ToleranceConfig& cfg) {
  const HermitianEigen eig_a = hermitian_eigen(p.a(), cfg);
  const ComplexMatrix sqrt_a = apply_function(eig_a, [](double v) { return std::sqrt(v); });
  const ComplexMatrix inv_sqrt_a =
      apply_function(eig_a, [](double v) { return 1.0 / std::sqrt(v); });
  const ComplexMatrix inner = checked_hermitian(inv_sqrt_a * p.b() * inv_sqrt_a, cfg);
  return checked_hermitian(sqrt_a * sqrt_psd(inner, cfg) * sqrt_a, cfg);
}

ComplexMatrix heron_mean(const ProofIntermediates& q, const HpdPair&, const ToleranceConfig& cfg) {
  const ComplexMatrix half_sum = (q.sqrt_a + q.sqrt_b) * Complex(0.5);
  return checked_hermitian(half_sum * half_sum, cfg);
}

ComplexMatrix heron_mean(const HpdPair& p, const ToleranceConfig& cfg) {
  const ComplexMatrix half_sum = (sqrt_psd(p.a(), cfg) + sqrt_psd(p.b(), cfg)) * Complex(0.5);
  return checked_hermitian(half_sum * half_sum, cfg);
}

ComplexMatrix wasserstein_mean(const ProofIntermediates& q, const HpdPair& p,
                               const ToleranceConfig& cfg) {
  ComplexMatrix sum = p.a() + p.b();
  sum += q.sqrt_a * q.x * q.inv_sqrt_a;
  sum += q.inv_sqrt_a * q.x * q.sqrt_a;
  return checked_hermitian(sum * Complex(0.25), cfg);
}

ComplexMatrix wasserstein_mean(const HpdPair& p, const ToleranceConfig& cfg) {
  return wasserstein_mean(proof_intermediates(p, cfg), p, cfg);
}

ComplexMatrix wasserstein_mean_direct(const HpdPair& p, const ToleranceConfig& cfg) {
  const HpdPair inv_a_b = HpdPair::make(inverse_pd(p.a(), cfg), p.b(), cfg);
  const ComplexMatrix g = geometric_mean(inv_a_b, cfg);
  ComplexMatrix sum = p.a() + p.b();
  sum += p.a() * g;
  sum += g * p.a();
  return checked_hermitian(sum * Complex(0.25), cfg);
}

double bw_distance_sq(const HpdPair& p, const ToleranceConfig& cfg) {
  const ProofIntermediates q = proof_intermediates(p, cfg);
  return trace(p.a()).real() + trace(p.b()).real() - 2.0 * trace(q.x).real();
}

ComplexMatrix compute_mean(MeanKind kind, const HpdPair& p, const ToleranceConfig& cfg) {
  switch (kind) {
    case MeanKind::Heron: return heron_mean(p, cfg);
    case MeanKind::Wasserstein: return wasserstein_mean(p, cfg);
    case MeanKind::Geometric: return geometric_mean(p, cfg);
  }
  throw Error(ErrorCode::Precondition, "unknown mean kind");
}

}  // namespace opmeans
