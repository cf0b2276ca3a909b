#include "opmeans/verify.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "opmeans/error.hpp"
#include "opmeans/polar.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

namespace {

double norm_sum(std::initializer_list<const ComplexMatrix*> terms) {
  double s = 0.0;
  for (const ComplexMatrix* t : terms) s += frobenius_norm(*t);
  return s;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : num; }

}  // namespace

GapReport proof_chain_report(const HpdPair& p, const ToleranceConfig& cfg) {
  const ProofIntermediates q = proof_intermediates(p, cfg);
  const ComplexMatrix& a = p.a();
  const ComplexMatrix& b = p.b();
  const ComplexMatrix& x = q.x;
  const ComplexMatrix& y = q.y;
  const std::size_t n = p.dim();

  const ComplexMatrix heron = heron_mean(q, p, cfg);
  const ComplexMatrix wass = wasserstein_mean(q, p, cfg);
  const ComplexMatrix diff = heron - wass;

  GapReport r;
  r.mean_gap = frobenius_norm(diff) / (frobenius_norm(a) + frobenius_norm(b));
  r.commutator_gap = frobenius_norm(commutator(a, b)) / (frobenius_norm(a) * frobenius_norm(b));

  const ComplexMatrix st = q.sqrt_a * q.sqrt_b;
  const ComplexMatrix ts = y;
  const ComplexMatrix sxs_inv = q.sqrt_a * x * q.inv_sqrt_a;
  const ComplexMatrix s_inv_xs = q.inv_sqrt_a * x * q.sqrt_a;
  {
    const ComplexMatrix lhs = diff * Complex(4.0);
    const ComplexMatrix rhs = st + ts - sxs_inv - s_inv_xs;
    const ComplexMatrix h4 = heron * Complex(4.0);
    const ComplexMatrix w4 = wass * Complex(4.0);
    r.residuals.r1 = ratio(frobenius_norm(lhs - rhs),
                           norm_sum({&h4, &w4, &st, &ts, &sxs_inv, &s_inv_xs}));
  }

  const ComplexMatrix ay = a * y;
  const ComplexMatrix ya = adjoint(y) * a;
  const ComplexMatrix ax = a * x;
  const ComplexMatrix xa = x * a;
  const ComplexMatrix cross = ay + ya - ax - xa;
  {
    const ComplexMatrix sh = q.sqrt_a * heron * q.sqrt_a * Complex(4.0);
    const ComplexMatrix sw = q.sqrt_a * wass * q.sqrt_a * Complex(4.0);
    r.residuals.r2 =
        ratio(frobenius_norm(cross - (sh - sw)), norm_sum({&ay, &ya, &ax, &xa, &sh, &sw}));
  }

  const ComplexMatrix a_plus_y = a + y;
  const ComplexMatrix a_plus_x = a + x;
  {
    const ComplexMatrix gram = adjoint(a_plus_y) * a_plus_y;
    const ComplexMatrix square = a_plus_x * a_plus_x;
    r.residuals.r3 = ratio(frobenius_norm(gram - square - cross),
                           norm_sum({&gram, &square, &ay, &ya, &ax, &xa}));
  }

  r.residuals.r4 = ratio(frobenius_norm(abs_op(a_plus_y, cfg) - a_plus_x), frobenius_norm(a_plus_x));

  try {
    const PolarParts parts = polar(y, cfg);
    r.residuals.r5 = frobenius_norm(parts.isometry - ComplexMatrix::identity(n)) /
                     std::sqrt(static_cast<double>(n));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    r.polar_singular = true;
    r.residuals.r5 = std::numeric_limits<double>::quiet_NaN();
  }

  r.residuals.r6 = ratio(hermitian_defect(y), frobenius_norm(y));
  r.residuals.abs_y = ratio(frobenius_norm(abs_op(y, cfg) - x), frobenius_norm(x));

  r.trace_x = trace(x).real();
  r.trace_gap = r.trace_x - trace(st).real();
  return r;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::MeansEqualAndCommute: return "MeansEqualAndCommute";
    case Verdict::BothGapsPositive: return "BothGapsPositive";
    case Verdict::Indeterminate: return "Indeterminate";
    case Verdict::CounterexampleToTheorem: return "CounterexampleToTheorem";
  }
  return "Indeterminate";
}

Verdict classify(const GapReport& r, const ToleranceConfig& cfg) noexcept {
  const double tol = cfg.identity_tol;
  if (r.mean_gap <= tol) {
    if (r.commutator_gap <= tol) return Verdict::MeansEqualAndCommute;
    if (r.commutator_gap > kCommutatorViolationBand) return Verdict::CounterexampleToTheorem;
    return Verdict::Indeterminate;
  }
  if (r.mean_gap > 10.0 * tol && r.commutator_gap > 10.0 * tol) return Verdict::BothGapsPositive;
  return Verdict::Indeterminate;
}

Verdict theorem_check(const HpdPair& p, const ToleranceConfig& cfg) {
  return classify(proof_chain_report(p, cfg), cfg);
}

TraceCriterion trace_criterion(const GapReport& r, const ToleranceConfig& cfg) noexcept {
  return TraceCriterion{r.trace_gap, r.trace_x, r.trace_gap <= cfg.identity_tol * r.trace_x};
}

TraceCriterion trace_criterion(const HpdPair& p, const ToleranceConfig& cfg) {
  const ProofIntermediates q = proof_intermediates(p, cfg);
  const double tx = trace(q.x).real();
  const double gap = tx - trace(q.sqrt_a * q.sqrt_b).real();
  return TraceCriterion{gap, tx, gap <= cfg.identity_tol * tx};
}

WitnessReport ando_hayashi_witness(const ComplexMatrix& x, const ComplexMatrix& y,
                                   const ToleranceConfig& cfg) {
  require_same_dim(x, y);
  const ComplexMatrix sum = x + y;
  const ComplexMatrix abs_sum = abs_op(sum, cfg);
  const ComplexMatrix abs_x = abs_op(x, cfg);
  const ComplexMatrix abs_y = abs_op(y, cfg);
  const double triangle =
      ratio(frobenius_norm(abs_sum - abs_x - abs_y), frobenius_norm(abs_sum));
  if (!(triangle <= cfg.identity_tol)) {
    throw Error(ErrorCode::TriangleEqualityFails,
                "|X+Y| - |X| - |Y| has relative norm " + std::to_string(triangle));
  }
  ComplexMatrix u = polar(sum, cfg).isometry;
  const double rx = ratio(frobenius_norm(x - u * abs_x), frobenius_norm(x));
  const double ry = ratio(frobenius_norm(y - u * abs_y), frobenius_norm(y));
  return WitnessReport{triangle, std::move(u), {rx, ry}};
}

}  // namespace opmeans
