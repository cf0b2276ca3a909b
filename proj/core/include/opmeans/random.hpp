#pragma once

#include <cstdint>
#include <vector>

#include "opmeans/matrix.hpp"
#include "opmeans/means.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

/// SplitMix64. The whole generation pipeline is pinned so other
/// implementations can reproduce matrices bit for bit:
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   out = z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// ((next() >> 11) + 1) * 2^-53, in (0, 1].
  double uniform() noexcept;

  /// One complex Gaussian with E|z|^2 = 1 via Box-Muller:
  ///   r = sqrt(-2 ln u1), phi = 2 pi u2, z = r (cos phi + i sin phi) / sqrt 2.
  Complex complex_normal() noexcept;

 private:
  std::uint64_t state_;
};

/// Per-trial seed: first SplitMix64 output from state master ^ index.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

enum class Family { Generic, CommutingPair, NearCommuting };

struct GenSpec {
  std::size_t dim = 3;
  std::uint64_t seed = 0;
  double cond_target = 10.0;  // ratio of largest to smallest eigenvalue
  Family family = Family::Generic;
  double epsilon = 0.0;  // NearCommuting only

  /// Throws Error(InvalidSpec).
  void validate() const;
};

/// n x n complex Gaussian matrix, row-major draws.
ComplexMatrix gaussian_matrix(std::size_t n, SplitMix64& rng);

/// Unitary from Gram-Schmidt (two passes) on the columns of a Gaussian
/// matrix. The triangular factor has positive real diagonal, which fixes the
/// column phases.
ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng);

/// Eigenvalues log-uniform on [c^{-1/2}, c^{1/2}]. For n >= 2 the first two
/// draws are pinned to the endpoints so the condition number is exactly c.
std::vector<double> random_spectrum(std::size_t n, double cond, SplitMix64& rng);

/// Hermitian (G + G*)/2 scaled to unit Frobenius norm.
ComplexMatrix random_unit_hermitian(std::size_t n, SplitMix64& rng);

/// U diag(spectrum) U*, frame drawn before the spectrum.
ComplexMatrix random_hpd(std::size_t n, double cond, SplitMix64& rng);
ComplexMatrix random_hpd(const GenSpec& spec);

/// Two matrices sharing one random frame, independent spectra.
HpdPair random_commuting_pair(const GenSpec& spec, const ToleranceConfig& cfg);

/// (A, exp(log B0 + eps K)) with (A, B0) = random_commuting_pair(spec) and K
/// from random_unit_hermitian on the same stream. eps == 0 returns B0 itself.
HpdPair near_commuting_pair(const GenSpec& spec, const ToleranceConfig& cfg);

/// Pair for any family; Generic draws A then B from one stream.
HpdPair random_pair(const GenSpec& spec, const ToleranceConfig& cfg);

}  // namespace opmeans
