#include "opmeans/polar.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "opmeans/error.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

ComplexMatrix abs_op(const ComplexMatrix& t, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(hermitian_part(adjoint(t) * t), cfg);
  return apply_function(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

PolarParts polar(const ComplexMatrix& t, const ToleranceConfig& cfg) {
  const HermitianEigen eig = hermitian_eigen(hermitian_part(adjoint(t) * t), cfg);
  const std::size_t n = t.dim();

  std::vector<double> sigma(n);
  for (std::size_t k = 0; k < n; ++k) sigma[k] = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
  const double sigma_max = sigma.back();
  if (!(sigma.front() > cfg.positivity_floor * sigma_max)) {
    throw Error(ErrorCode::Singular, "smallest singular value " + std::to_string(sigma.front()) +
                                         " at operator norm " + std::to_string(sigma_max));
  }

  // Scaled Newton iteration U <- (g U + U^{-*} / g) / 2 on T itself, which
  // avoids squaring the condition number through T*T. Once the update is
  // below 1e-8 one unscaled step reaches roundoff.
  ComplexMatrix u = t;
  for (int it = 0; it < 100; ++it) {
    const ComplexMatrix u_inv = inverse(u);
    const double gamma = std::sqrt(frobenius_norm(u_inv) / frobenius_norm(u));
    ComplexMatrix next = (gamma * u + adjoint(u_inv) * Complex(1.0 / gamma)) * Complex(0.5);
    const double step = frobenius_norm(next - u) / frobenius_norm(next);
    u = std::move(next);
    if (step < 1e-8) {
      u = (u + adjoint(inverse(u))) * Complex(0.5);
      return PolarParts{u, hermitian_part(adjoint(u) * t)};
    }
  }
  throw Error(ErrorCode::NoConvergence, "polar iteration did not converge");
}

}  // namespace opmeans
