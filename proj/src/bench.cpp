#include "asadmm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include "asadmm/baselines.hpp"
#include "asadmm/io.hpp"

namespace asadmm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SaddleReference make_reference(const ProblemSpec& p, const IterateState& st) {
  SaddleReference ref;
  ref.x_star = st.x;
  ref.y_star = st.y;
  ref.lambda_star = st.lambda;
  ref.f_star = objective_value(p, st.x, st.y);
  return ref;
}

// Norm of x - P_box(x - (grad f(x) - A^T lambda)); zero at a KKT point.
double stationarity(const ProblemSpec& p, const IterateState& st) {
  DenseVec g = full_gradient(p, st.x);
  axpy(-1.0, spmv(p.A, st.lambda, true), g);
  const double scale = std::max(1.0, norm(g));
  DenseVec z = st.x;
  axpy(-1.0, g, z);
  project_x_inplace(p, z);
  return norm(subtract(st.x, z)) / scale;
}

// Drives `step` until the objective settles, the residual is small and the
// x-block is stationary.
template <class Step>
SaddleReference iterate_to_tolerance(const ProblemSpec& p,
                                     const ReferenceConfig& rc,
                                     IterateState st, Step step,
                                     const char* method) {
  const auto start = Clock::now();
  double f_prev = objective_value(p, st.x, st.y);
  for (std::size_t it = 1; it <= rc.max_iter; ++it) {
    step(st);
    if (!all_finite(st.x) || !all_finite(st.y)) {
      throw SolverError(std::string("reference (") + method +
                        "): non-finite iterate");
    }
    if (it % rc.check_every != 0) continue;
    const double f = objective_value(p, st.x, st.y);
    const double res = norm(constraint_residual(p, st.x, st.y));
    if (std::abs(f - f_prev) <= rc.tol * std::max(1.0, std::abs(f)) &&
        res <= rc.feas_tol && stationarity(p, st) <= std::sqrt(rc.feas_tol)) {
      return make_reference(p, st);
    }
    f_prev = f;
    if (rc.time_budget_seconds > 0.0 &&
        seconds_since(start) > rc.time_budget_seconds) {
      break;
    }
  }
  auto best = make_reference(p, st);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "reference (%s): not converged, best F = %.12g, residual %.3g",
                method, best.f_star,
                norm(constraint_residual(p, st.x, st.y)));
  throw ReferenceError(buf, std::move(best));
}

// Inner steps per outer iteration of the full-gradient fallback; past a few
// dozen, more inner work does not speed up the outer convergence.
constexpr std::size_t kReferenceInnerSteps = 20;

}  // namespace

SaddleReference compute_reference(const ProblemSpec& p,
                                  const ReferenceConfig& rc) {
  p.validate();
  if (rc.max_iter < 1 || rc.check_every < 1 || !(rc.tol > 0.0) ||
      !(rc.feas_tol > 0.0)) {
    throw ConfigError("reference: invalid stopping rule");
  }
  if (p.B.is_scaled_identity(-1.0) && !p.x_box) {
    LAdmmConfig lc;
    lc.validate();
    return iterate_to_tolerance(
        p, rc, IterateState::initial(p),
        [&](IterateState& st) { st = ladmm_step(p, lc, st); }, "ladmm");
  }
  const ProblemSpec q = deterministic_view(p);
  // Metric nu I and a fixed rho above beta ||A^T A|| keep every inner step a
  // contraction; the stochastic defaults can stall at a non-KKT point when
  // the box clips the inner iterates.
  SolverConfig sc;
  sc.schedule.M_floor = kReferenceInnerSteps;
  sc.record_wall_time = false;
  sc.sigma = p.lipschitz_nu;
  sc.adaptive_prox.enabled = false;
  sc.adaptive_prox.rho0 = 1.1 * sc.beta * gram_spectral_estimate(p.A);
  if (!p.B.is_scaled_identity(-1.0)) {
    sc.y_mode = YMode::kLinearized;
    sc.tau = sc.beta * gram_spectral_estimate(p.B) * 1.01;
  }
  SamplerConfig smp;
  smp.mode = SamplerMode::kPlain;
  AsAdmmSolver solver(q, sc, smp);
  return iterate_to_tolerance(
      p, rc, IterateState::initial(q),
      [&](IterateState& st) { solver.outer_iteration(st); }, "det_admm");
}

ProblemInstance build_problem(const ProblemConfig& pc) {
  ProblemInstance inst;
  if (pc.kind == ProblemKind::kSynthetic) {
    auto syn = synthetic_instance(pc.data_seed, pc.num_samples,
                                  pc.num_features, pc.sparsity);
    inst.ground_truth = std::move(syn.ground_truth);
    inst.dataset = std::make_shared<const Dataset>(std::move(syn.dataset));
  } else {
    LibsvmStats stats;
    inst.dataset = std::make_shared<const Dataset>(
        parse_libsvm(pc.data_path, LibsvmOptions{}, &stats));
    inst.relabeled = stats.relabeled;
  }
  GgflModel model;
  model.dataset = inst.dataset;
  model.mu = pc.mu;
  model.a_kind = pc.constraint;
  if (pc.constraint == ConstraintKind::kStackedGraph) {
    model.G = build_graph_G(*inst.dataset, pc.graph_threshold);
  }
  inst.problem = build_ggfl(model);
  return inst;
}

RunOutcome run_single(const RunConfig& cfg, const ProblemSpec& p,
                      const std::optional<SaddleReference>& ref,
                      SolverKind solver, std::uint64_t seed) {
  RunOutcome out;
  out.solver = solver;
  out.seed = seed;
  try {
    SolverConfig sc = cfg.solver;
    sc.time_budget_seconds = cfg.time_budget_seconds;
    switch (solver) {
      case SolverKind::kAsAdmm: {
        SamplerConfig smp = cfg.sampler;
        smp.rng_seed = seed;
        AsAdmmSolver s(p, sc, smp);
        s.set_reference(ref);
        auto res = s.solve();
        out.trace = std::move(res.trace);
        out.warnings = std::move(res.warnings);
        break;
      }
      case SolverKind::kDetAdmm: {
        auto res = det_inexact_admm(p, sc, ref);
        out.trace = std::move(res.trace);
        out.warnings = std::move(res.warnings);
        break;
      }
      case SolverKind::kLAdmm: {
        LAdmmConfig lc = cfg.ladmm;
        lc.time_budget_seconds = cfg.time_budget_seconds;
        lc.record_wall_time = cfg.solver.record_wall_time;
        lc.obj_tol = cfg.solver.obj_tol;
        lc.feas_tol = cfg.solver.feas_tol;
        auto res = ladmm_solve(p, lc, ref, IterateState::initial(p));
        out.trace = std::move(res.trace);
        break;
      }
    }
    out.ok = true;
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

SolverAggregate aggregate_traces(
    SolverKind solver, const std::vector<std::vector<MetricsRecord>>& traces) {
  SolverAggregate agg;
  agg.solver = solver;
  if (traces.empty()) return agg;
  for (bool ergodic : {false, true}) {
    std::vector<std::vector<const MetricsRecord*>> series;
    for (const auto& t : traces) {
      std::vector<const MetricsRecord*> rows;
      for (const auto& r : t) {
        if (r.ergodic == ergodic) rows.push_back(&r);
      }
      series.push_back(std::move(rows));
    }
    std::size_t len = std::numeric_limits<std::size_t>::max();
    for (const auto& s : series) len = std::min(len, s.size());
    const double n = static_cast<double>(series.size());
    for (std::size_t i = 0; i < len; ++i) {
      AggregateRow row;
      row.k = series.front()[i]->k;
      row.ergodic = ergodic;
      row.runs = series.size();
      row.min_opt = std::numeric_limits<double>::infinity();
      row.max_opt = -std::numeric_limits<double>::infinity();
      for (const auto& s : series) {
        const auto& r = *s[i];
        row.mean_opt += r.opt_err / n;
        row.min_opt = std::min(row.min_opt, r.opt_err);
        row.max_opt = std::max(row.max_opt, r.opt_err);
        row.mean_wall += r.wall_seconds / n;
        row.mean_grads += static_cast<double>(r.grad_components) / n;
      }
      agg.rows.push_back(row);
    }
  }
  return agg;
}

void write_aggregate_csv(const std::filesystem::path& path,
                         const std::vector<SolverAggregate>& aggregates) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "'");
  out << "solver,k,ergodic_flag,runs,mean_opt_err,min_opt_err,max_opt_err,"
         "mean_wall_seconds,mean_grad_components\n";
  char buf[256];
  for (const auto& a : aggregates) {
    for (const auto& r : a.rows) {
      std::snprintf(buf, sizeof buf,
                    "%s,%zu,%d,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    std::string(to_string(a.solver)).c_str(), r.k,
                    r.ergodic ? 1 : 0, r.runs, r.mean_opt, r.min_opt,
                    r.max_opt, r.mean_wall, r.mean_grads);
      out << buf;
    }
  }
  if (!out) throw IoError("aggregate write failure");
}

void emit_plotdata(const std::vector<SolverAggregate>& aggregates,
                   const std::filesystem::path& path, PlotAxis axis,
                   bool split) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "'");
  out << "# " << to_string(axis) << " opt_err\n";
  auto abscissa = [axis](const AggregateRow& r) {
    return axis == PlotAxis::kGradComponents ? r.mean_grads : r.mean_wall;
  };
  bool first = true;
  for (const auto& a : aggregates) {
    const bool has_ergodic = std::any_of(
        a.rows.begin(), a.rows.end(), [](const auto& r) { return r.ergodic; });
    double cut = std::numeric_limits<double>::infinity();
    if (split && has_ergodic) {
      double end = 0.0;
      for (const auto& r : a.rows) {
        if (!r.ergodic) end = std::max(end, abscissa(r));
      }
      cut = end / 3.0;
    }
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : a.rows) {
      const double x = abscissa(r);
      const bool take = r.ergodic ? x > cut : x <= cut;
      if (!take || std::isnan(r.mean_opt)) continue;
      pts.emplace_back(x, std::max(r.mean_opt, 1e-16));
    }
    if (pts.empty()) continue;
    std::stable_sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
      return l.first < r.first;
    });
    if (!first) out << "\n\n";
    first = false;
    out << "# solver " << to_string(a.solver) << '\n';
    char buf[64];
    for (const auto& [x, y] : pts) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", x, y);
      out << buf;
    }
  }
  if (!out) throw IoError("plot data write failure");
}

bool BenchmarkReport::all_ok() const {
  return std::all_of(runs.begin(), runs.end(),
                     [](const RunOutcome& r) { return r.ok; });
}

BenchmarkReport run_benchmark(const RunConfig& cfg) {
  cfg.validate();
  const auto inst = build_problem(cfg.problem);
  const ProblemSpec& p = inst.problem;

  BenchmarkReport report;
  if (cfg.reference.f_star) {
    report.reference.f_star = *cfg.reference.f_star;
  } else {
    report.reference = compute_reference(p, cfg.reference);
  }
  const std::filesystem::path dir = cfg.output_dir;
  std::filesystem::create_directories(dir);

  for (auto solver : cfg.solvers) {
    for (auto seed : cfg.seeds) {
      RunOutcome r;
      r.solver = solver;
      r.seed = seed;
      r.trace_path = dir / ("trace_" + std::string(to_string(solver)) +
                            "_seed" + std::to_string(seed) + ".csv");
      report.runs.push_back(std::move(r));
    }
  }

  std::size_t workers = cfg.threads ? cfg.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, report.runs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < report.runs.size(); i = next++) {
      auto& slot = report.runs[i];
      auto path = slot.trace_path;
      slot = run_single(cfg, p, report.reference, slot.solver, slot.seed);
      slot.trace_path = std::move(path);
      if (!slot.ok) continue;
      try {
        write_metrics_csv(slot.trace_path, slot.trace);
      } catch (const std::exception& e) {
        slot.ok = false;
        slot.error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  {
    std::ofstream runs(dir / "runs.csv", std::ios::binary);
    runs << "solver,seed,status,final_opt_err,grad_components,message\n";
    char buf[64];
    for (const auto& r : report.runs) {
      double final_opt = std::numeric_limits<double>::quiet_NaN();
      std::uint64_t grads = 0;
      if (!r.trace.empty()) {
        final_opt = r.trace.back().opt_err;
        grads = r.trace.back().grad_components;
      }
      std::snprintf(buf, sizeof buf, "%.17g", final_opt);
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      runs << to_string(r.solver) << ',' << r.seed << ','
           << (r.ok ? "ok" : "failed") << ',' << buf << ',' << grads << ','
           << msg << '\n';
    }
  }

  for (auto solver : cfg.solvers) {
    std::vector<std::vector<MetricsRecord>> traces;
    for (const auto& r : report.runs) {
      if (r.solver == solver && r.ok) traces.push_back(r.trace);
    }
    if (!traces.empty()) {
      report.aggregates.push_back(aggregate_traces(solver, traces));
    }
  }
  report.aggregate_path = dir / "aggregate.csv";
  report.plotdata_path = dir / "plotdata.dat";
  write_aggregate_csv(report.aggregate_path, report.aggregates);
  emit_plotdata(report.aggregates, report.plotdata_path, cfg.plot_axis,
                cfg.plot_split);
  return report;
}

}  // namespace asadmm
