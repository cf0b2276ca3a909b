#pragma once

namespace opmeans {

/// Numerical thresholds shared by every operation.
///
/// identity_tol is relative: an identity L = R is accepted when
/// ||L - R||_F <= identity_tol * (natural scale of the terms). The positivity
/// floor is relative to the operator norm of the matrix being tested.
struct ToleranceConfig {
  double identity_tol = 1e-10;
  double positivity_floor = 1e-12;
  double eig_off_diag_tol = 1e-13;
  int max_jacobi_sweeps = 100;

  /// Throws Error(InvalidTolerance) unless all fields are strictly positive
  /// and identity_tol > positivity_floor.
  void validate() const;
};

}  // namespace opmeans
