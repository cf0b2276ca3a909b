#include "opmeans/random.hpp"

#include <cmath>
#include <numbers>

#include "opmeans/error.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept {
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

Complex SplitMix64::complex_normal() noexcept {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(phi), r * std::sin(phi)) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return SplitMix64(master ^ index).next();
}

void GenSpec::validate() const {
  if (dim < 1) throw Error(ErrorCode::InvalidSpec, "dim must be >= 1");
  if (!(cond_target >= 1.0) || !std::isfinite(cond_target))
    throw Error(ErrorCode::InvalidSpec, "cond_target must be a finite value >= 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw Error(ErrorCode::InvalidSpec, "epsilon must be a finite value >= 0");
}

ComplexMatrix gaussian_matrix(std::size_t n, SplitMix64& rng) {
  ComplexMatrix g(n);
  for (Complex& z : g.entries()) z = rng.complex_normal();
  return g;
}

ComplexMatrix random_unitary(std::size_t n, SplitMix64& rng) {
  ComplexMatrix q = gaussian_matrix(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

std::vector<double> random_spectrum(std::size_t n, double cond, SplitMix64& rng) {
  const double log_c = std::log(cond);
  std::vector<double> values(n);
  std::size_t k = 0;
  if (n >= 2) {
    values[0] = std::exp(-0.5 * log_c);
    values[1] = std::exp(0.5 * log_c);
    k = 2;
  }
  for (; k < n; ++k) values[k] = std::exp((rng.uniform() - 0.5) * log_c);
  return values;
}

ComplexMatrix random_unit_hermitian(std::size_t n, SplitMix64& rng) {
  ComplexMatrix k = hermitian_part(gaussian_matrix(n, rng));
  const double norm = frobenius_norm(k);
  k *= Complex(1.0 / norm);
  return k;
}

ComplexMatrix random_hpd(std::size_t n, double cond, SplitMix64& rng) {
  const ComplexMatrix frame = random_unitary(n, rng);
  const std::vector<double> spectrum = random_spectrum(n, cond, rng);
  return reconstruct(frame, spectrum);
}

ComplexMatrix random_hpd(const GenSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  return random_hpd(spec.dim, spec.cond_target, rng);
}

namespace {

struct CommutingDraw {
  ComplexMatrix frame;
  std::vector<double> spectrum_a;
  std::vector<double> spectrum_b;
};

CommutingDraw draw_commuting(const GenSpec& spec, SplitMix64& rng) {
  ComplexMatrix frame = random_unitary(spec.dim, rng);
  std::vector<double> sa = random_spectrum(spec.dim, spec.cond_target, rng);
  std::vector<double> sb = random_spectrum(spec.dim, spec.cond_target, rng);
  return CommutingDraw{std::move(frame), std::move(sa), std::move(sb)};
}

}  // namespace

HpdPair random_commuting_pair(const GenSpec& spec, const ToleranceConfig& cfg) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  const CommutingDraw d = draw_commuting(spec, rng);
  return HpdPair::make(reconstruct(d.frame, d.spectrum_a), reconstruct(d.frame, d.spectrum_b),
                       cfg);
}

HpdPair near_commuting_pair(const GenSpec& spec, const ToleranceConfig& cfg) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  const CommutingDraw d = draw_commuting(spec, rng);
  const ComplexMatrix k = random_unit_hermitian(spec.dim, rng);
  const ComplexMatrix a = reconstruct(d.frame, d.spectrum_a);
  if (spec.epsilon == 0.0) return HpdPair::make(a, reconstruct(d.frame, d.spectrum_b), cfg);

  std::vector<double> log_b(d.spectrum_b.size());
  for (std::size_t i = 0; i < log_b.size(); ++i) log_b[i] = std::log(d.spectrum_b[i]);
  const ComplexMatrix s = reconstruct(d.frame, log_b) + k * Complex(spec.epsilon);
  return HpdPair::make(a, exp_hermitian(s, cfg), cfg);
}

HpdPair random_pair(const GenSpec& spec, const ToleranceConfig& cfg) {
  switch (spec.family) {
    case Family::CommutingPair: return random_commuting_pair(spec, cfg);
    case Family::NearCommuting: return near_commuting_pair(spec, cfg);
    case Family::Generic: break;
  }
  spec.validate();
  SplitMix64 rng(spec.seed);
  ComplexMatrix a = random_hpd(spec.dim, spec.cond_target, rng);
  ComplexMatrix b = random_hpd(spec.dim, spec.cond_target, rng);
  return HpdPair::make(a, b, cfg);
}

}  // namespace opmeans
