#include "cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opmeans/descent.hpp"
#include "opmeans/error.hpp"
#include "opmeans/matrix_io.hpp"
#include "opmeans/means.hpp"
#include "opmeans/random.hpp"
#include "opmeans/report.hpp"
#include "opmeans/sweep.hpp"
#include "opmeans/verify.hpp"

namespace opmeans::cli {

namespace {

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string out;
};

struct Context {
  GlobalFlags flags;
  std::ostream& out;
  std::ostream& err;

  ToleranceConfig tolerance() const {
    ToleranceConfig cfg;
    if (flags.tol) cfg.identity_tol = *flags.tol;
    cfg.validate();
    return cfg;
  }

  void emit(const std::string& text) const {
    if (flags.out.empty()) {
      out << text;
    } else {
      write_text_file(flags.out, text);
    }
  }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Io:
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidTolerance:
    case ErrorCode::Precondition:
      return kUsageError;
    default:
      return kNumericalError;
  }
}

const std::map<std::string, Family> kFamilies{
    {"generic", Family::Generic},
    {"commuting", Family::CommutingPair},
    {"near-commuting", Family::NearCommuting},
};

const std::map<std::string, MeanKind> kMeanKinds{
    {"heron", MeanKind::Heron},
    {"wasserstein", MeanKind::Wasserstein},
    {"geometric", MeanKind::Geometric},
};

struct GenArgs {
  std::size_t dim = 3;
  double cond = 10.0;
  Family family = Family::Generic;
  double epsilon = 0.0;
  std::string out_b;
};

int run_gen(const Context& ctx, const GenArgs& args) {
  GenSpec spec;
  spec.dim = args.dim;
  spec.seed = ctx.flags.seed.value_or(0);
  spec.cond_target = args.cond;
  spec.family = args.family;
  spec.epsilon = args.epsilon;
  const ToleranceConfig cfg = ctx.tolerance();

  if (args.out_b.empty()) {
    if (spec.family != Family::Generic)
      throw Error(ErrorCode::Precondition, "pair families need --out-b for the second matrix");
    ctx.emit(matrix_to_json(random_hpd(spec)));
    return kSuccess;
  }
  if (ctx.flags.out.empty()) throw Error(ErrorCode::Precondition, "--out-b requires --out");
  const HpdPair pair = random_pair(spec, cfg);
  write_matrix_file(ctx.flags.out, pair.a());
  write_matrix_file(args.out_b, pair.b());
  return kSuccess;
}

struct PairFiles {
  std::string a;
  std::string b;
};

HpdPair load_pair(const PairFiles& files, const ToleranceConfig& cfg) {
  return HpdPair::make(read_matrix_file(files.a), read_matrix_file(files.b), cfg);
}

int run_mean(const Context& ctx, const PairFiles& files, MeanKind kind) {
  const ToleranceConfig cfg = ctx.tolerance();
  ctx.emit(matrix_to_json(compute_mean(kind, load_pair(files, cfg), cfg)));
  return kSuccess;
}

int run_verify(const Context& ctx, const PairFiles& files) {
  const ToleranceConfig cfg = ctx.tolerance();
  const GapReport report = proof_chain_report(load_pair(files, cfg), cfg);
  const Verdict verdict = classify(report, cfg);
  ctx.emit(gap_report_json(report, verdict, cfg, ctx.flags.seed));
  if (verdict == Verdict::CounterexampleToTheorem) {
    ctx.err << "theorem violation: means agree but the pair does not commute\n";
    return kTheoremViolation;
  }
  return kSuccess;
}

struct SweepArgs {
  std::size_t dim = 3;
  double cond = 10.0;
  std::vector<double> epsilons;
  int trials = 1;
  unsigned threads = 1;
};

int run_sweep_cmd(const Context& ctx, const SweepArgs& args) {
  SweepSpec spec;
  spec.base.dim = args.dim;
  spec.base.cond_target = args.cond;
  spec.base.seed = ctx.flags.seed.value_or(0);
  spec.epsilons = args.epsilons;
  spec.trials_per_epsilon = args.trials;
  const std::vector<SweepRow> rows = run_sweep(spec, ctx.tolerance(), args.threads);
  ctx.emit(sweep_csv(rows));
  for (const SweepRow& r : rows) {
    if (r.verdict == Verdict::CounterexampleToTheorem) {
      ctx.err << "theorem violation at epsilon " << format_real(r.epsilon) << ", seed " << r.seed
              << "\n";
      return kTheoremViolation;
    }
  }
  return kSuccess;
}

struct MinimizeArgs {
  PairFiles files;
  int budget = 1000;
  std::string final_b;
};

int run_minimize(const Context& ctx, const MinimizeArgs& args) {
  const ToleranceConfig cfg = ctx.tolerance();
  const ComplexMatrix a = read_matrix_file(args.files.a);
  const ComplexMatrix b0 = read_matrix_file(args.files.b);
  const DescentTrace trace = minimize_gap(a, b0, cfg, args.budget);
  ctx.emit(descent_csv(trace));
  if (!args.final_b.empty()) write_matrix_file(args.final_b, trace.final_b);
  if (trace.no_descent) ctx.err << "line search failed before reaching the target\n";
  return kSuccess;
}

int run_lemma(const Context& ctx, const PairFiles& files) {
  const ToleranceConfig cfg = ctx.tolerance();
  const WitnessReport w =
      ando_hayashi_witness(read_matrix_file(files.a), read_matrix_file(files.b), cfg);
  ctx.emit(witness_report_json(w, cfg));
  return kSuccess;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator means on the positive definite cone: Heron, Wasserstein and "
               "geometric means, and a numerical check that equal Heron and Wasserstein "
               "means force commutativity."};
  app.require_subcommand(1);

  Context ctx{{}, out, err};
  std::uint64_t seed = 0;
  double tol = 0.0;
  app.add_option("--seed", seed, "Generator seed (default 0)");
  app.add_option("--tol", tol, "Override identity tolerance (default 1e-10)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", ctx.flags.out, "Output file (default: stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write random positive definite matrices");
  gen_cmd->add_option("--dim", gen.dim, "Matrix dimension")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cond", gen.cond, "Target condition number (>= 1)");
  gen_cmd->add_option("--family", gen.family, "generic | commuting | near-commuting")
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  gen_cmd->add_option("--epsilon", gen.epsilon, "Perturbation size for near-commuting");
  gen_cmd->add_option("--out-b", gen.out_b, "Second matrix of a pair");

  MeanKind kind = MeanKind::Heron;
  PairFiles mean_files;
  auto* mean_cmd = app.add_subcommand("mean", "Evaluate one mean of a pair");
  mean_cmd->add_option("--kind", kind, "heron | wasserstein | geometric")
      ->required()
      ->transform(CLI::CheckedTransformer(kMeanKinds, CLI::ignore_case));
  mean_cmd->add_option("--a", mean_files.a, "First matrix file")->required();
  mean_cmd->add_option("--b", mean_files.b, "Second matrix file")->required();

  PairFiles verify_files;
  auto* verify_cmd = app.add_subcommand("verify", "Full proof-chain report for a pair");
  verify_cmd->add_option("--a", verify_files.a, "First matrix file")->required();
  verify_cmd->add_option("--b", verify_files.b, "Second matrix file")->required();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Near-commuting sweep as CSV");
  sweep_cmd->add_option("--dim", sweep.dim, "Matrix dimension")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--cond", sweep.cond, "Target condition number (>= 1)");
  sweep_cmd->add_option("--epsilons", sweep.epsilons, "Comma separated, increasing")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per epsilon");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");

  MinimizeArgs minimize;
  auto* minimize_cmd = app.add_subcommand("minimize", "Drive the mean gap to zero over B");
  minimize_cmd->add_option("--a", minimize.files.a, "Fixed matrix A")->required();
  minimize_cmd->add_option("--b", minimize.files.b, "Starting matrix B0")->required();
  minimize_cmd->add_option("--budget", minimize.budget, "Maximum gradient steps");
  minimize_cmd->add_option("--final-b", minimize.final_b, "Write the final B here");

  PairFiles lemma_files;
  auto* lemma_cmd = app.add_subcommand("lemma-ah", "Common polar factor witness for X, Y");
  lemma_cmd->add_option("--x", lemma_files.a, "Matrix X")->required();
  lemma_cmd->add_option("--y", lemma_files.b, "Matrix Y")->required();

  for (CLI::App* sub : {gen_cmd, mean_cmd, verify_cmd, sweep_cmd, minimize_cmd, lemma_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  if (app.count("--seed") > 0) ctx.flags.seed = seed;
  if (app.count("--tol") > 0) ctx.flags.tol = tol;

  try {
    if (*gen_cmd) return run_gen(ctx, gen);
    if (*mean_cmd) return run_mean(ctx, mean_files, kind);
    if (*verify_cmd) return run_verify(ctx, verify_files);
    if (*sweep_cmd) return run_sweep_cmd(ctx, sweep);
    if (*minimize_cmd) return run_minimize(ctx, minimize);
    if (*lemma_cmd) return run_lemma(ctx, lemma_files);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace opmeans::cli
