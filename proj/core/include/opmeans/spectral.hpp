#pragma once

#include <functional>
#include <vector>

#include "opmeans/matrix.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

/// Spectral decomposition H = frame * diag(eigenvalues) * frame^*.
struct HermitianEigen {
  ComplexMatrix frame;              // unitary, columns are eigenvectors
  std::vector<double> eigenvalues;  // ascending
};

/// Returns (H + H^*)/2 if ||H - H^*||_F <= identity_tol * ||H||_F, otherwise
/// throws Error(NotHermitian).
ComplexMatrix checked_hermitian(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// Cyclic complex Jacobi. Converged when the off-diagonal Frobenius mass is at
/// most eig_off_diag_tol * ||H||_F.
///
/// Throws NotHermitian if H fails the Hermitian check and NoConvergence after
/// max_jacobi_sweeps sweeps.
HermitianEigen hermitian_eigen(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// frame * diag(values) * frame^*, made exactly Hermitian.
ComplexMatrix reconstruct(const ComplexMatrix& frame, std::span<const double> values);

using ScalarFunction = std::function<double(double)>;

/// f(H) through the spectral decomposition. Throws DomainError if f returns a
/// non-finite value at any eigenvalue.
ComplexMatrix matrix_function(const ComplexMatrix& h, const ScalarFunction& f,
                              const ToleranceConfig& cfg);

/// Same as matrix_function but reusing an existing decomposition.
ComplexMatrix apply_function(const HermitianEigen& eig, const ScalarFunction& f);

/// Positive square root. Eigenvalues in [-floor*||H||_op, 0) are clamped to
/// zero; anything more negative is a DomainError.
ComplexMatrix sqrt_psd(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// H^{-1/2}; DomainError unless every eigenvalue exceeds floor*||H||_op.
ComplexMatrix inv_sqrt_pd(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// H^{-1} for positive definite H; same domain rule as inv_sqrt_pd.
ComplexMatrix inverse_pd(const ComplexMatrix& h, const ToleranceConfig& cfg);

ComplexMatrix exp_hermitian(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// Principal logarithm of a positive definite matrix.
ComplexMatrix log_pd(const ComplexMatrix& h, const ToleranceConfig& cfg);

/// Largest singular value, from the spectrum of T^*T.
double op_norm(const ComplexMatrix& t, const ToleranceConfig& cfg);

/// True iff min eigenvalue > positivity_floor * ||H||_op. Throws NotHermitian.
bool is_positive_definite(const ComplexMatrix& h, const ToleranceConfig& cfg);

}  // namespace opmeans
