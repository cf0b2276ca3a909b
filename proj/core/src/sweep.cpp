#include "opmeans/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "opmeans/error.hpp"

namespace opmeans {

void SweepSpec::validate() const {
  GenSpec probe = base;
  probe.epsilon = 0.0;
  probe.validate();
  if (epsilons.empty()) throw Error(ErrorCode::InvalidSpec, "no epsilons given");
  if (trials_per_epsilon < 1) throw Error(ErrorCode::InvalidSpec, "trials_per_epsilon must be >= 1");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] >= 0.0) || !std::isfinite(epsilons[i]))
      throw Error(ErrorCode::InvalidSpec, "epsilons must be finite and >= 0");
    if (i > 0 && !(epsilons[i] > epsilons[i - 1]))
      throw Error(ErrorCode::InvalidSpec, "epsilons must be strictly increasing");
  }
}

namespace {

SweepRow run_trial(const SweepSpec& spec, const ToleranceConfig& cfg, std::size_t eps_index,
                   int trial) {
  GenSpec g = spec.base;
  g.family = Family::NearCommuting;
  g.epsilon = spec.epsilons[eps_index];
  g.seed = trial_seed(spec.base.seed, static_cast<std::uint64_t>(trial));

  SweepRow row;
  row.epsilon = g.epsilon;
  row.seed = g.seed;
  try {
    const HpdPair pair = near_commuting_pair(g, cfg);
    const GapReport report = proof_chain_report(pair, cfg);
    row.mean_gap = report.mean_gap;
    row.commutator_gap = report.commutator_gap;
    row.trace_gap = report.trace_gap;
    row.verdict = classify(report, cfg);
  } catch (const Error& e) {
    row.mean_gap = row.commutator_gap = row.trace_gap = std::nan("");
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const ToleranceConfig& cfg,
                                unsigned threads) {
  spec.validate();
  cfg.validate();
  const std::size_t trials = static_cast<std::size_t>(spec.trials_per_epsilon);
  const std::size_t total = spec.epsilons.size() * trials;
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++)
      rows[k] = run_trial(spec, cfg, k / trials, static_cast<int>(k % trials));
  };
  const unsigned count = std::clamp<unsigned>(threads, 1, 64);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace opmeans
