// Command-line front end: solve, benchmark, reference, gen-data.
//
// Every configuration key is also a flag (--beta 0.04, --seeds 1,2,3);
// flags override values read from --config.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "asadmm/bench.hpp"
#include "asadmm/io.hpp"

namespace {

using namespace asadmm;

struct CommonArgs {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

void add_config_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "YAML run configuration");
  for (const auto& f : config_fields()) {
    cmd->add_option_function<std::string>(
           "--" + f.key,
           [&args, key = f.key](const std::string& v) { args.overrides[key] = v; },
           f.help)
        ->group("Run configuration");
  }
}

RunConfig resolve_config(const CommonArgs& args) {
  RunConfig cfg =
      args.config_path.empty() ? RunConfig{} : load_config(args.config_path);
  for (const auto& [key, value] : args.overrides) {
    set_config_value(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

int cmd_solve(const CommonArgs& args, bool with_reference) {
  const RunConfig cfg = resolve_config(args);
  const auto inst = build_problem(cfg.problem);
  if (inst.relabeled) {
    std::cerr << "note: " << inst.relabeled << " labels mapped from 0 to -1\n";
  }
  std::optional<SaddleReference> ref;
  if (cfg.reference.f_star) {
    ref = SaddleReference{};
    ref->f_star = *cfg.reference.f_star;
  } else if (with_reference) {
    ref = compute_reference(inst.problem, cfg.reference);
    std::cout << "reference F* = " << fmt(ref->f_star) << '\n';
  }
  const SolverKind solver = cfg.solvers.front();
  const auto seed = cfg.seeds.front();
  auto out = run_single(cfg, inst.problem, ref, solver, seed);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
  if (!out.ok) {
    std::cerr << to_string(solver) << " failed: " << out.error << '\n';
    return 1;
  }
  std::filesystem::create_directories(cfg.output_dir);
  const auto path = std::filesystem::path(cfg.output_dir) /
                    ("trace_" + std::string(to_string(solver)) + "_seed" +
                     std::to_string(seed) + ".csv");
  write_metrics_csv(path, out.trace);
  const MetricsRecord* raw = nullptr;
  const MetricsRecord* erg = nullptr;
  for (const auto& r : out.trace) (r.ergodic ? erg : raw) = &r;
  if (raw) {
    std::cout << "last iterate   k=" << raw->k << " obj_err=" << fmt(raw->obj_err)
              << " equ_err=" << fmt(raw->equ_err) << '\n';
  }
  if (erg) {
    std::cout << "ergodic mean   k=" << erg->k << " obj_err=" << fmt(erg->obj_err)
              << " equ_err=" << fmt(erg->equ_err) << '\n';
  }
  if (raw) std::cout << "gradient components: " << raw->grad_components << '\n';
  std::cout << "trace: " << path.string() << '\n';
  return 0;
}

int cmd_benchmark(const CommonArgs& args) {
  const RunConfig cfg = resolve_config(args);
  const auto report = run_benchmark(cfg);
  std::cout << "reference F* = " << fmt(report.reference.f_star) << '\n';
  for (const auto& r : report.runs) {
    std::cout << to_string(r.solver) << " seed " << r.seed << ": ";
    if (r.ok) {
      std::cout << "ok, final opt_err "
                << (r.trace.empty() ? std::string("n/a")
                                    : fmt(r.trace.back().opt_err))
                << '\n';
    } else {
      std::cout << "FAILED: " << r.error << '\n';
    }
  }
  std::cout << "aggregate: " << report.aggregate_path.string() << '\n'
            << "plot data: " << report.plotdata_path.string() << '\n';
  return report.all_ok() ? 0 : 1;
}

int cmd_reference(const CommonArgs& args, const std::string& out_path) {
  const RunConfig cfg = resolve_config(args);
  const auto inst = build_problem(cfg.problem);
  const auto ref = compute_reference(inst.problem, cfg.reference);
  const double res =
      norm(constraint_residual(inst.problem, ref.x_star, ref.y_star));
  std::cout << "F* = " << fmt(ref.f_star) << "  residual = " << fmt(res)
            << '\n';
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot open '" + out_path + "'");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", ref.f_star);
    out << "f_star: " << buf << "\nx_star: [";
    for (std::size_t i = 0; i < ref.x_star.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", ref.x_star[i]);
      out << (i ? ", " : "") << buf;
    }
    out << "]\n";
    std::cout << "written to " << out_path << '\n';
  }
  return 0;
}

int cmd_gen_data(const CommonArgs& args, const std::string& out_path,
                 const std::string& truth_path) {
  const RunConfig cfg = resolve_config(args);
  const auto& pc = cfg.problem;
  const auto inst = synthetic_instance(pc.data_seed, pc.num_samples,
                                       pc.num_features, pc.sparsity);
  write_libsvm(out_path, inst.dataset);
  std::cout << "wrote " << pc.num_samples << " samples x " << pc.num_features
            << " features to " << out_path << '\n';
  if (!truth_path.empty()) {
    std::ofstream out(truth_path);
    if (!out) throw IoError("cannot open '" + truth_path + "'");
    char buf[32];
    for (double w : inst.ground_truth) {
      std::snprintf(buf, sizeof buf, "%.17g\n", w);
      out << buf;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated stochastic ADMM solver and benchmark harness"};
  app.require_subcommand(1);

  CommonArgs solve_args, bench_args, ref_args, gen_args;
  bool no_reference = false;
  std::string ref_out, gen_out, gen_truth;

  auto* solve = app.add_subcommand("solve", "run one solver on one seed");
  add_config_options(solve, solve_args);
  solve->add_flag("--no-reference", no_reference,
                  "skip the reference run (obj_err is then NaN)");

  auto* bench = app.add_subcommand(
      "benchmark", "all solvers x seeds, traces, aggregate and plot data");
  add_config_options(bench, bench_args);

  auto* reference = app.add_subcommand(
      "reference", "high-accuracy deterministic solve for F*");
  add_config_options(reference, ref_args);
  reference->add_option("--out", ref_out, "write f_star and x_star as YAML");

  auto* gen = app.add_subcommand("gen-data",
                                 "write a synthetic dataset in LIBSVM format");
  add_config_options(gen, gen_args);
  gen->add_option("--out", gen_out, "LIBSVM output file")->required();
  gen->add_option("--truth", gen_truth, "planted weights, one per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_args, !no_reference);
    if (*bench) return cmd_benchmark(bench_args);
    if (*reference) return cmd_reference(ref_args, ref_out);
    if (*gen) return cmd_gen_data(gen_args, gen_out, gen_truth);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
