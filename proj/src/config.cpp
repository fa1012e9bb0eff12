#include "asadmm/config.hpp"

#include <cmath>
#include <string>

namespace asadmm {

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::kSynthetic ? "synthetic" : "libsvm";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  if (name == "synthetic") return ProblemKind::kSynthetic;
  if (name == "libsvm") return ProblemKind::kLibsvm;
  throw ConfigError("unknown problem kind '" + std::string(name) + "'");
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kAsAdmm:
      return "as_admm";
    case SolverKind::kLAdmm:
      return "ladmm";
    case SolverKind::kDetAdmm:
      return "det_admm";
  }
  return "?";
}

SolverKind solver_kind_from_string(std::string_view name) {
  if (name == "as_admm") return SolverKind::kAsAdmm;
  if (name == "ladmm") return SolverKind::kLAdmm;
  if (name == "det_admm") return SolverKind::kDetAdmm;
  throw ConfigError("unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(PlotAxis axis) {
  return axis == PlotAxis::kGradComponents ? "grad_components"
                                           : "wall_seconds";
}

PlotAxis plot_axis_from_string(std::string_view name) {
  if (name == "grad_components") return PlotAxis::kGradComponents;
  if (name == "wall_seconds") return PlotAxis::kWallSeconds;
  throw ConfigError("unknown plot axis '" + std::string(name) + "'");
}

namespace {

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(std::string(key) + ": " + what);
}

}  // namespace

void RunConfig::validate() const {
  const auto& pr = problem;
  if (pr.kind == ProblemKind::kLibsvm) {
    require(!pr.data_path.empty(), "data_path", "required for libsvm problems");
  } else {
    require(pr.num_samples >= 1, "num_samples", "must be >= 1");
    require(pr.num_features >= 1, "num_features", "must be >= 1");
    require(pr.sparsity >= 0.0 && pr.sparsity <= 1.0, "sparsity",
            "must lie in [0, 1]");
  }
  require(pr.mu >= 0.0, "mu", "must be >= 0");
  require(pr.graph_threshold > 0.0 && pr.graph_threshold < 1.0,
          "graph_threshold", "must lie in (0, 1)");
  require(!solvers.empty(), "solvers", "must list at least one solver");
  require(!seeds.empty(), "seeds", "must list at least one seed");

  const auto& sc = solver;
  require(sc.beta > 0.0, "beta", "must be positive");
  require(sc.s > 0.0 && sc.s <= kMaxDualStep, "s",
          "must lie in (0, (1+sqrt(5))/2]");
  require(sc.sigma > 0.0, "sigma", "must be positive");
  const auto& sh = sc.schedule;
  require(!sh.c1 || *sh.c1 > 0.0, "c1", "must be positive");
  require(!sh.c2 || *sh.c2 > 0.0, "c2", "must be positive");
  require(sh.c3 > 0.0, "c3", "must be positive");
  require(sh.rho_exp >= 1.0, "rho_exp", "must be >= 1");
  require(sh.M_floor >= 1, "m_floor", "must be >= 1");
  require(sh.eta_const > 0.0, "eta_const", "must be positive");
  require(sh.theta > 0.0, "theta", "must be positive");
  require(sh.M_cap >= sh.M_floor, "m_cap", "must be >= m_floor");
  const auto& ap = sc.adaptive_prox;
  require(ap.rho0 > 0.0, "rho0", "must be positive");
  require(ap.rho_min > 0.0, "rho_min", "must be positive");
  require(ap.growth > 1.0, "rho_growth", "must exceed 1");
  require(sc.y_mode == YMode::kExactProx || sc.tau > 0.0, "tau",
          "must be positive in linearized y mode");
  require(sc.max_outer >= 1, "max_outer", "must be >= 1");
  require(sc.obj_tol >= 0.0, "obj_tol", "must be >= 0");
  require(sc.feas_tol >= 0.0, "feas_tol", "must be >= 0");
  require(sc.divergence_factor > 1.0, "divergence_factor", "must exceed 1");

  require(sampler.batch_c > 0.0, "batch_c", "must be positive");
  require(sampler.batch_rho >= 1.0, "batch_rho", "must be >= 1");
  require(!sampler.anchor_threshold || *sampler.anchor_threshold >= 1,
          "anchor_threshold", "must be >= 1");

  require(!ladmm.nu || *ladmm.nu > 0.0, "ladmm_nu", "must be positive");
  require(ladmm.s > 0.0 && ladmm.s <= kMaxDualStep, "ladmm_s",
          "must lie in (0, (1+sqrt(5))/2]");
  require(ladmm.max_iter >= 1, "ladmm_max_iter", "must be >= 1");
  require(ladmm.cg_tol > 0.0, "cg_tol", "must be positive");
  require(ladmm.cg_max_iter >= 1, "cg_max_iter", "must be >= 1");

  require(reference.max_iter >= 1, "reference_max_iter", "must be >= 1");
  require(reference.check_every >= 1, "reference_check_every",
          "must be >= 1");
  require(reference.tol > 0.0, "reference_tol", "must be positive");
  require(reference.feas_tol > 0.0, "reference_feas_tol", "must be positive");
  require(!reference.f_star || std::isfinite(*reference.f_star), "f_star",
          "must be finite");
  require(!output_dir.empty(), "output_dir", "must not be empty");
}

}  // namespace asadmm
