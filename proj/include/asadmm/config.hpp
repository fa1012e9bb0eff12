#ifndef ASADMM_CONFIG_HPP_
#define ASADMM_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asadmm/baselines.hpp"
#include "asadmm/models.hpp"
#include "asadmm/sampler.hpp"
#include "asadmm/solver.hpp"

namespace asadmm {

enum class ProblemKind { kSynthetic, kLibsvm };
std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// Which GGFL instance to build: synthetic data or a LIBSVM file.
struct ProblemConfig {
  ProblemKind kind = ProblemKind::kSynthetic;
  std::string data_path;
  std::size_t num_samples = 500;
  std::size_t num_features = 50;
  double sparsity = 0.2;
  std::uint64_t data_seed = 1;
  double mu = 1e-5;
  ConstraintKind constraint = ConstraintKind::kIdentity;
  /// Feature pairs with |correlation| above this get a G row.
  double graph_threshold = 0.3;
};

enum class SolverKind { kAsAdmm, kLAdmm, kDetAdmm };
std::string_view to_string(SolverKind kind);
SolverKind solver_kind_from_string(std::string_view name);

/// Stopping rule of the high-accuracy reference run: every `check_every`
/// iterations the objective change must be <= tol * max(1, |F|), the
/// constraint residual <= feas_tol and the relative x-block stationarity
/// <= sqrt(feas_tol).
struct ReferenceConfig {
  std::size_t max_iter = 200'000;
  std::size_t check_every = 50;
  double tol = 1e-10;
  double feas_tol = 1e-8;
  double time_budget_seconds = 0.0;
  /// Skip the reference run and use this value of F*.
  std::optional<double> f_star;
};

enum class PlotAxis { kGradComponents, kWallSeconds };
std::string_view to_string(PlotAxis axis);
PlotAxis plot_axis_from_string(std::string_view name);

/// Everything a benchmark or single solve needs. Loaded from YAML; every key
/// can also be overridden on the command line.
struct RunConfig {
  ProblemConfig problem;
  std::vector<SolverKind> solvers{SolverKind::kAsAdmm};
  SolverConfig solver;
  SamplerConfig sampler;
  LAdmmConfig ladmm;
  ReferenceConfig reference;
  std::vector<std::uint64_t> seeds{1};
  std::string output_dir = "results";
  /// Per-run wall-clock limit applied to every solver; <= 0 means none.
  double time_budget_seconds = 0.0;
  /// Worker threads for independent runs; 0 picks the hardware count.
  std::size_t threads = 0;
  PlotAxis plot_axis = PlotAxis::kGradComponents;
  /// Report raw iterates over the first third of the abscissa range and
  /// ergodic ones afterwards.
  bool plot_split = true;

  /// Throws ConfigError whose message starts with the offending key.
  void validate() const;
};

}  // namespace asadmm

#endif  // ASADMM_CONFIG_HPP_
