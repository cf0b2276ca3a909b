#include "opmeans/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "opmeans/error.hpp"

namespace opmeans {

void ToleranceConfig::validate() const {
  if (!(identity_tol > 0.0) || !(positivity_floor > 0.0) || !(eig_off_diag_tol > 0.0) ||
      max_jacobi_sweeps <= 0) {
    throw Error(ErrorCode::InvalidTolerance, "all tolerances must be strictly positive");
  }
  if (!(identity_tol > positivity_floor)) {
    throw Error(ErrorCode::InvalidTolerance, "identity_tol must exceed positivity_floor");
  }
}

ComplexMatrix checked_hermitian(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const double defect = hermitian_defect(h);
  const double norm = frobenius_norm(h);
  if (defect > cfg.identity_tol * norm) {
    throw Error(ErrorCode::NotHermitian, "||H - H*||_F = " + std::to_string(defect) +
                                             " exceeds tolerance at ||H||_F = " +
                                             std::to_string(norm));
  }
  return hermitian_part(h);
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double ssq = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) ssq += std::norm(a(i, j));
  return std::sqrt(ssq);
}

// Zeroes a(p,q) with J = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on
// rows/columns p and q: a <- J^* a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const Complex phase_c = std::conj(phase);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();
  const Complex jqp = -s * phase_c;
  const Complex jqq = c * phase_c;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * s + akq * jqq;
  }
  const Complex hpq = -s * phase;
  const Complex hqq = c * phase;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + hpq * aqk;
    a(q, k) = s * apk + hqq * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * s + vkq * jqq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  ComplexMatrix a = checked_hermitian(h, cfg);
  const std::size_t n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = cfg.eig_off_diag_tol * frobenius_norm(a);

  bool converged = off_diagonal_mass(a) <= target;
  for (int sweep = 0; sweep < cfg.max_jacobi_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_mass(a) <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi did not converge in " + std::to_string(cfg.max_jacobi_sweeps) +
                    " sweeps");
  }
  // One polishing sweep: convergence is quadratic here, so the remaining
  // off-diagonal mass drops to roundoff.
  if (off_diagonal_mass(a) > 0.0) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out{ComplexMatrix(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.frame(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix reconstruct(const ComplexMatrix& frame, std::span<const double> values) {
  const std::size_t n = frame.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += frame(i, k) * values[k] * std::conj(frame(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

ComplexMatrix apply_function(const HermitianEigen& eig, const ScalarFunction& f) {
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = f(eig.eigenvalues[k]);
    if (!std::isfinite(mapped[k])) {
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(eig.eigenvalues[k]));
    }
  }
  return reconstruct(eig.frame, mapped);
}

ComplexMatrix matrix_function(const ComplexMatrix& h, const ScalarFunction& f,
                              const ToleranceConfig& cfg) {
  return apply_function(hermitian_eigen(h, cfg), f);
}

namespace {

double spectral_radius(const HermitianEigen& eig) {
  return std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
}

void require_above_floor(const HermitianEigen& eig, const ToleranceConfig& cfg,
                         const char* what) {
  const double floor = cfg.positivity_floor * spectral_radius(eig);
  if (!(eig.eigenvalues.front() > floor)) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + ": eigenvalue " + std::to_string(eig.eigenvalues.front()) +
                    " not above positivity floor");
  }
}

}  // namespace

ComplexMatrix sqrt_psd(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(h, cfg);
  const double floor = cfg.positivity_floor * spectral_radius(eig);
  if (eig.eigenvalues.front() < -floor) {
    throw Error(ErrorCode::DomainError,
                "sqrt: negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  return apply_function(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

ComplexMatrix inv_sqrt_pd(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(h, cfg);
  require_above_floor(eig, cfg, "inverse square root");
  return apply_function(eig, [](double x) { return 1.0 / std::sqrt(x); });
}

ComplexMatrix inverse_pd(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(h, cfg);
  require_above_floor(eig, cfg, "inverse");
  return apply_function(eig, [](double x) { return 1.0 / x; });
}

ComplexMatrix exp_hermitian(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  return matrix_function(h, [](double x) { return std::exp(x); }, cfg);
}

ComplexMatrix log_pd(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(h, cfg);
  require_above_floor(eig, cfg, "log");
  return apply_function(eig, [](double x) { return std::log(x); });
}

double op_norm(const ComplexMatrix& t, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(adjoint(t) * t, cfg);
  return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
}

bool is_positive_definite(const ComplexMatrix& h, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(h, cfg);
  return eig.eigenvalues.front() > cfg.positivity_floor * spectral_radius(eig);
}

}  // namespace opmeans
