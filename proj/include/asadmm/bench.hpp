#ifndef ASADMM_BENCH_HPP_
#define ASADMM_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asadmm/config.hpp"
#include "asadmm/metrics.hpp"
#include "asadmm/models.hpp"
#include "asadmm/problem.hpp"

namespace asadmm {

/// The reference run stopped before meeting its tolerance.
class ReferenceError : public SolverError {
 public:
  ReferenceError(const std::string& what, SaddleReference best)
      : SolverError(what), best_(std::move(best)) {}
  const SaddleReference& best() const { return best_; }

 private:
  SaddleReference best_;
};

/// High-accuracy deterministic solve of `p`. Uses L-ADMM when B = -I and x
/// is unconstrained, AS-ADMM on the full gradient otherwise. Throws
/// ReferenceError carrying the last iterate when the stopping rule of `rc`
/// is not met within its iteration or time budget.
SaddleReference compute_reference(const ProblemSpec& p,
                                  const ReferenceConfig& rc = {});

struct ProblemInstance {
  std::shared_ptr<const Dataset> dataset;
  /// Planted weights of a synthetic instance.
  std::optional<DenseVec> ground_truth;
  ProblemSpec problem;
  std::size_t relabeled = 0;
};

ProblemInstance build_problem(const ProblemConfig& pc);

struct RunOutcome {
  SolverKind solver = SolverKind::kAsAdmm;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::vector<MetricsRecord> trace;
  std::vector<std::string> warnings;
  std::filesystem::path trace_path;
};

/// One solver on one seed. Never throws for solver failures; they are
/// reported in the outcome.
RunOutcome run_single(const RunConfig& cfg, const ProblemSpec& p,
                      const std::optional<SaddleReference>& ref,
                      SolverKind solver, std::uint64_t seed);

/// Statistics across seeds at one matched trace position.
struct AggregateRow {
  std::size_t k = 0;
  bool ergodic = false;
  std::size_t runs = 0;
  double mean_opt = 0.0;
  double min_opt = 0.0;
  double max_opt = 0.0;
  double mean_wall = 0.0;
  double mean_grads = 0.0;
};

struct SolverAggregate {
  SolverKind solver = SolverKind::kAsAdmm;
  std::vector<AggregateRow> rows;
};

/// Raw and ergodic rows are matched separately by position; each series is
/// cut to the shortest trace.
SolverAggregate aggregate_traces(SolverKind solver,
                                 const std::vector<std::vector<MetricsRecord>>& traces);

void write_aggregate_csv(const std::filesystem::path& path,
                         const std::vector<SolverAggregate>& aggregates);

/// Two columns (abscissa, opt_err) per solver, one gnuplot data block each.
/// With `split`, solvers that report ergodic rows contribute raw rows up to a
/// third of their abscissa range and ergodic rows beyond it. opt_err is
/// floored at 1e-16 and rows without a value are dropped.
void emit_plotdata(const std::vector<SolverAggregate>& aggregates,
                   const std::filesystem::path& path, PlotAxis axis,
                   bool split);

struct BenchmarkReport {
  SaddleReference reference;
  std::vector<RunOutcome> runs;
  std::vector<SolverAggregate> aggregates;
  std::filesystem::path aggregate_path;
  std::filesystem::path plotdata_path;

  bool all_ok() const;
};

/// Runs every (solver, seed) pair, in parallel, against one reference and
/// writes traces, runs.csv, aggregate.csv and plotdata.dat into
/// cfg.output_dir. A failing run is recorded and the others continue.
BenchmarkReport run_benchmark(const RunConfig& cfg);

}  // namespace asadmm

#endif  // ASADMM_BENCH_HPP_
