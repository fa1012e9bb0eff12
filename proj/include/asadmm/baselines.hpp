#ifndef ASADMM_BASELINES_HPP_
#define ASADMM_BASELINES_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "asadmm/linalg.hpp"
#include "asadmm/metrics.hpp"
#include "asadmm/problem.hpp"
#include "asadmm/solver.hpp"

namespace asadmm {

/// Linearized ADMM: f is replaced by its linearization plus (nu/2)||x - x^k||^2,
/// the augmented term stays exact, dual step s (1 for the classic method).
struct LAdmmConfig {
  double beta = 0.04;
  /// Linearization constant; defaults to the problem's lipschitz_nu.
  std::optional<double> nu;
  double s = 1.0;
  double cg_tol = 1e-12;
  std::size_t cg_max_iter = 1000;
  std::size_t max_iter = 1000;
  double obj_tol = 0.0;
  double feas_tol = 0.0;
  double time_budget_seconds = 0.0;
  bool record_wall_time = true;

  void validate() const;
};

struct CgResult {
  DenseVec x;
  std::size_t iterations = 0;
  double residual_norm = 0.0;
};

/// Conjugate gradients for (nu I + beta A^T A) x = rhs from `x0`. Throws
/// SolverError carrying the residual when cg_max_iter is exhausted.
CgResult solve_shifted_gram(const SparseMat& A, double nu, double beta,
                            std::span<const double> rhs,
                            std::span<const double> x0, double tol,
                            std::size_t max_iter);

/// One L-ADMM iteration. Requires B = -I and no box on x.
IterateState ladmm_step(const ProblemSpec& p, const LAdmmConfig& cfg,
                        const IterateState& st);

struct BaselineResult {
  IterateState last;
  std::vector<MetricsRecord> trace;
  std::uint64_t grad_components = 0;
  bool converged = false;
};

BaselineResult ladmm_solve(const ProblemSpec& p, const LAdmmConfig& cfg,
                           const std::optional<SaddleReference>& ref,
                           IterateState init);

/// The same problem with f exposed as a single component whose gradient is
/// the full gradient. Each oracle call is charged N component evaluations.
ProblemSpec deterministic_view(const ProblemSpec& p);

/// AS-ADMM on deterministic_view(p): no sampling randomness remains.
SolveResult det_inexact_admm(const ProblemSpec& p, const SolverConfig& cfg,
                             const std::optional<SaddleReference>& ref =
                                 std::nullopt,
                             std::optional<IterateState> init = std::nullopt);

}  // namespace asadmm

#endif  // ASADMM_BASELINES_HPP_
