#include "opmeans/descent.hpp"

#include <cmath>
#include <limits>

#include "opmeans/error.hpp"
#include "opmeans/means.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

std::vector<double> hermitian_to_coords(const ComplexMatrix& s) {
  const std::size_t n = s.dim();
  std::vector<double> c;
  c.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(s(i, i).real());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c.push_back(s(i, j).real());
      c.push_back(s(i, j).imag());
    }
  }
  return c;
}

ComplexMatrix coords_to_hermitian(std::span<const double> coords, std::size_t n) {
  if (coords.size() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "expected n^2 Hermitian coordinates");
  ComplexMatrix s(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) s(i, i) = coords[k++];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = Complex(coords[k], coords[k + 1]);
      s(j, i) = std::conj(s(i, j));
      k += 2;
    }
  }
  return s;
}

GapObjective::GapObjective(const ComplexMatrix& a, const ToleranceConfig& cfg)
    : a_(checked_hermitian(a, cfg)),
      sqrt_a_(1),
      inv_sqrt_a_(1),
      norm_a_(frobenius_norm(a_)),
      n_(a.dim()),
      cfg_(cfg) {
  if (!is_positive_definite(a_, cfg_)) throw Error(ErrorCode::NotPositiveDefinite, "A");
  const HermitianEigen eig = hermitian_eigen(a_, cfg_);
  sqrt_a_ = apply_function(eig, [](double v) { return std::sqrt(v); });
  inv_sqrt_a_ = apply_function(eig, [](double v) { return 1.0 / std::sqrt(v); });
}

std::vector<double> GapObjective::residual(std::span<const double> coords) const {
  const HermitianEigen eig_s = hermitian_eigen(coords_to_hermitian(coords, n_), cfg_);
  const ComplexMatrix b = apply_function(eig_s, [](double v) { return std::exp(v); });
  const ComplexMatrix sqrt_b = apply_function(eig_s, [](double v) { return std::exp(0.5 * v); });
  const ComplexMatrix x = sqrt_psd(hermitian_part(sqrt_a_ * b * sqrt_a_), cfg_);

  const ComplexMatrix half_sum = (sqrt_a_ + sqrt_b) * Complex(0.5);
  ComplexMatrix diff = hermitian_part(half_sum * half_sum);
  ComplexMatrix wass = a_ + b;
  wass += sqrt_a_ * x * inv_sqrt_a_;
  wass += inv_sqrt_a_ * x * sqrt_a_;
  diff -= hermitian_part(wass * Complex(0.25));

  const double scale = 1.0 / (norm_a_ + frobenius_norm(b));
  std::vector<double> r;
  r.reserve(2 * diff.size());
  for (const Complex& z : diff.entries()) {
    r.push_back(z.real() * scale);
    r.push_back(z.imag() * scale);
  }
  return r;
}

double GapObjective::value(std::span<const double> coords) const {
  double s = 0.0;
  for (double v : residual(coords)) s += v * v;
  return s;
}

std::vector<double> GapObjective::gradient(std::span<const double> coords, double h) const {
  const std::vector<double> r0 = residual(coords);
  std::vector<double> probe(coords.begin(), coords.end());
  std::vector<double> g(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    probe[k] = coords[k] + h;
    const std::vector<double> r1 = residual(probe);
    probe[k] = coords[k];
    double dot = 0.0;
    for (std::size_t m = 0; m < r0.size(); ++m) dot += (r1[m] - r0[m]) / h * r0[m];
    g[k] = 2.0 * dot;
  }
  return g;
}

std::vector<double> GapObjective::central_gradient(std::span<const double> coords,
                                                   double h) const {
  std::vector<double> probe(coords.begin(), coords.end());
  std::vector<double> g(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    probe[k] = coords[k] + h;
    const double up = value(probe);
    probe[k] = coords[k] - h;
    const double down = value(probe);
    probe[k] = coords[k];
    g[k] = (up - down) / (2.0 * h);
  }
  return g;
}

namespace {

DescentStep measure(int step, const ComplexMatrix& a, const ComplexMatrix& b, double objective) {
  const double na = frobenius_norm(a);
  const double nb = frobenius_norm(b);
  return DescentStep{step, std::sqrt(objective), frobenius_norm(commutator(a, b)) / (na * nb),
                     objective};
}

}  // namespace

DescentTrace minimize_gap(const ComplexMatrix& a, const ComplexMatrix& b0,
                          const ToleranceConfig& cfg, const DescentOptions& opts) {
  if (opts.budget < 1) throw Error(ErrorCode::Precondition, "budget must be >= 1");
  require_same_dim(a, b0);
  const ComplexMatrix hb0 = checked_hermitian(b0, cfg);
  if (!is_positive_definite(hb0, cfg)) throw Error(ErrorCode::NotPositiveDefinite, "B0");

  const GapObjective objective(a, cfg);
  const std::size_t n = a.dim();
  std::vector<double> coords = hermitian_to_coords(log_pd(hb0, cfg));
  double f = objective.value(coords);

  DescentTrace trace{{}, exp_hermitian(coords_to_hermitian(coords, n), cfg), false, false};
  trace.iterates.push_back(measure(0, objective.a(), trace.final_b, f));

  // Each iteration tries twice the last accepted step first, then halves.
  double step_size = 1.0;
  std::vector<double> trial(coords.size());
  for (int it = 1; it <= opts.budget; ++it) {
    if (f <= opts.objective_target) {
      trace.converged = true;
      break;
    }
    const double h = opts.fd_step * (1.0 + frobenius_norm(coords_to_hermitian(coords, n)));
    const std::vector<double> g = objective.gradient(coords, h);
    double gg = 0.0;
    for (double v : g) gg += v * v;

    step_size *= 2.0;
    bool accepted = false;
    double f_trial = std::numeric_limits<double>::infinity();
    for (int bt = 0; bt <= opts.max_backtracks && gg > 0.0; ++bt) {
      for (std::size_t k = 0; k < coords.size(); ++k) trial[k] = coords[k] - step_size * g[k];
      try {
        f_trial = objective.value(trial);
      } catch (const Error&) {
        f_trial = std::numeric_limits<double>::infinity();
      }
      if (std::isfinite(f_trial) && f_trial <= f - opts.armijo * step_size * gg) {
        accepted = true;
        break;
      }
      step_size *= 0.5;
    }
    if (!accepted) {
      trace.no_descent = true;
      break;
    }
    coords = trial;
    f = f_trial;
    trace.final_b = exp_hermitian(coords_to_hermitian(coords, n), cfg);
    trace.iterates.push_back(measure(it, objective.a(), trace.final_b, f));
  }
  if (f <= opts.objective_target) trace.converged = true;
  return trace;
}

DescentTrace minimize_gap(const ComplexMatrix& a, const ComplexMatrix& b0,
                          const ToleranceConfig& cfg, int budget) {
  DescentOptions opts;
  opts.budget = budget;
  return minimize_gap(a, b0, cfg, opts);
}

}  // namespace opmeans
