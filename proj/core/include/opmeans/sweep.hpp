#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/random.hpp"
#include "opmeans/tolerance.hpp"
#include "opmeans/verify.hpp"

namespace opmeans {

/// Near-commuting sweep. Every epsilon reuses the same per-trial seeds,
/// trial_seed(base.seed, t), so rows for one trial index differ only in eps.
/// base.family and base.epsilon are ignored.
struct SweepSpec {
  GenSpec base;
  std::vector<double> epsilons;  // strictly increasing, >= 0
  int trials_per_epsilon = 1;

  /// Throws Error(InvalidSpec).
  void validate() const;
};

struct SweepRow {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double mean_gap = 0.0;
  double commutator_gap = 0.0;
  double trace_gap = 0.0;
  std::optional<Verdict> verdict;  // empty when the trial failed
  std::string error;
};

/// One row per (epsilon, trial) ordered by epsilon index then trial index,
/// whatever the thread count. Per-trial failures become rows with `error`
/// set.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const ToleranceConfig& cfg,
                                unsigned threads = 1);

}  // namespace opmeans
