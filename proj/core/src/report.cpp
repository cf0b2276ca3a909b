#include "opmeans/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace opmeans {

using nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

ordered_json tolerance_json(const ToleranceConfig& cfg) {
  ordered_json t;
  t["identity_tol"] = cfg.identity_tol;
  t["positivity_floor"] = cfg.positivity_floor;
  t["eig_off_diag_tol"] = cfg.eig_off_diag_tol;
  t["max_jacobi_sweeps"] = cfg.max_jacobi_sweeps;
  return t;
}

ordered_json real_or_null(double x) {
  return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

// Quotes fields that would break a CSV cell.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string gap_report_json(const GapReport& r, Verdict v, const ToleranceConfig& cfg,
                            std::optional<std::uint64_t> seed) {
  ordered_json doc;
  doc["verdict"] = std::string(to_string(v));
  doc["mean_gap"] = real_or_null(r.mean_gap);
  doc["commutator_gap"] = real_or_null(r.commutator_gap);
  doc["trace_gap"] = real_or_null(r.trace_gap);
  doc["trace_x"] = real_or_null(r.trace_x);
  ordered_json res;
  res["r1"] = real_or_null(r.residuals.r1);
  res["r2"] = real_or_null(r.residuals.r2);
  res["r3"] = real_or_null(r.residuals.r3);
  res["r4"] = real_or_null(r.residuals.r4);
  res["r5"] = real_or_null(r.residuals.r5);
  res["r6"] = real_or_null(r.residuals.r6);
  res["abs_y"] = real_or_null(r.residuals.abs_y);
  doc["residuals"] = std::move(res);
  doc["polar_singular"] = r.polar_singular;
  doc["tolerance"] = tolerance_json(cfg);
  doc["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

std::string witness_report_json(const WitnessReport& w, const ToleranceConfig& cfg) {
  ordered_json doc;
  doc["triangle_residual"] = real_or_null(w.triangle_residual);
  doc["factor_residuals"] = {real_or_null(w.factor_residuals.first),
                             real_or_null(w.factor_residuals.second)};
  ordered_json m;
  m["n"] = w.witness.dim();
  ordered_json entries = ordered_json::array();
  for (const Complex& z : w.witness.entries()) entries.push_back({z.real(), z.imag()});
  m["entries"] = std::move(entries);
  doc["witness"] = std::move(m);
  doc["tolerance"] = tolerance_json(cfg);
  return doc.dump(2) + "\n";
}

std::string descent_csv(const DescentTrace& trace) {
  std::string out = "step,mean_gap,commutator_gap,objective\n";
  for (const DescentStep& s : trace.iterates) {
    out += std::to_string(s.step) + "," + format_real(s.mean_gap) + "," +
           format_real(s.commutator_gap) + "," + format_real(s.objective) + "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,seed,mean_gap,commutator_gap,trace_gap,verdict,error\n";
  for (const SweepRow& r : rows) {
    out += format_real(r.epsilon) + "," + std::to_string(r.seed) + "," +
           format_real(r.mean_gap) + "," + format_real(r.commutator_gap) + "," +
           format_real(r.trace_gap) + "," +
           (r.verdict ? std::string(to_string(*r.verdict)) : std::string("Error")) + "," +
           csv_cell(r.error) + "\n";
  }
  return out;
}

}  // namespace opmeans
