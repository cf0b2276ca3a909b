#pragma once

#include "opmeans/matrix.hpp"
#include "opmeans/tolerance.hpp"

namespace opmeans {

/// T = isometry * positive.
struct PolarParts {
  ComplexMatrix isometry;
  ComplexMatrix positive;
};

/// |T| = (T^*T)^{1/2}. Negative roundoff in the spectrum of T^*T is clamped
/// to zero, so singular T is fine here.
ComplexMatrix abs_op(const ComplexMatrix& t, const ToleranceConfig& cfg);

/// Polar factorization of an invertible matrix by scaled Newton iteration on
/// T; the isometry is unitary and positive = Herm(U^* T).
///
/// Throws Error(Singular) when the smallest singular value is at most
/// positivity_floor * ||T||_op. Partial-isometry completion for singular T is
/// not provided.
PolarParts polar(const ComplexMatrix& t, const ToleranceConfig& cfg);

}  // namespace opmeans
