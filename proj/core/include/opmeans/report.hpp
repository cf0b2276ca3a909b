#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/descent.hpp"
#include "opmeans/sweep.hpp"
#include "opmeans/tolerance.hpp"
#include "opmeans/verify.hpp"

namespace opmeans {

/// %.17g; non-finite values print as nan/inf.
std::string format_real(double x);

/// JSON object with the GapReport fields, the verdict, the tolerances used and
/// the seed (null when the pair did not come from a generator).
std::string gap_report_json(const GapReport& r, Verdict v, const ToleranceConfig& cfg,
                            std::optional<std::uint64_t> seed);

std::string witness_report_json(const WitnessReport& w, const ToleranceConfig& cfg);

/// Columns: step, mean_gap, commutator_gap, objective.
std::string descent_csv(const DescentTrace& trace);

/// Columns: epsilon, seed, mean_gap, commutator_gap, trace_gap, verdict, error.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace opmeans
