#ifndef ASADMM_SOLVER_HPP_
#define ASADMM_SOLVER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asadmm/linalg.hpp"
#include "asadmm/metrics.hpp"
#include "asadmm/problem.hpp"
#include "asadmm/sampler.hpp"

namespace asadmm {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest admissible dual step, (1 + sqrt 5) / 2.
inline constexpr double kMaxDualStep = 1.6180339887498949;

enum class ScheduleKind { kPower, kConstant, kGeometric };
std::string_view to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(std::string_view name);

/// Inner iteration count M_k and step parameter eta_k per outer iteration.
///
///   power:     eta_k = min(c1 / (M_k (M_k + 1)), c2),  M_k = max(ceil(c3 k^rho), M)
///   constant:  M_k = M, eta_k = eta_const
///   geometric: M_k = ceil((1+theta)^2 M_{k-1} (||x_breve^k||^2 + 1)),
///              eta_k = (1+theta)^{-k} / M_k,  M_0 = M
///
/// c1 and c2 default to 1/nu and 1/(2 nu).
struct ScheduleConfig {
  ScheduleKind kind = ScheduleKind::kPower;
  std::optional<double> c1;
  std::optional<double> c2;
  double c3 = 0.01;
  double rho_exp = 1.1;
  std::size_t M_floor = 200;
  double eta_const = 1e-3;
  double theta = 0.1;
  std::size_t M_cap = 1'000'000;

  void validate() const;
};

struct ScheduleStep {
  std::size_t inner_steps = 1;
  double eta = 1.0;
  bool capped = false;
};

/// `prev_inner_steps` is M_{k-1}; only the geometric kind reads it.
ScheduleStep schedule_step(const ScheduleConfig& sc, std::size_t k, double nu,
                           double x_breve_norm_sq,
                           std::size_t prev_inner_steps = 0);

/// Proximal weight M_k = rho_k I. When enabled, rho_k follows the
/// underestimate beta ||A dx||^2 / ||dx||^2 of beta ||A^T A|| with a floor
/// rho_min that grows by `growth` whenever the previous rho was too small.
struct AdaptiveProxConfig {
  bool enabled = true;
  double rho0 = 1.0;
  double rho_min = 1e-5;
  double growth = 1.1;

  void validate() const;
};

struct AdaptiveProxState {
  double rho_cur = 1.0;
  double rho_min = 1e-5;
  double growth = 1.1;
  std::size_t bump_count = 0;
  std::optional<DenseVec> prev_x;

  static AdaptiveProxState from_config(const AdaptiveProxConfig& cfg);
};

/// Updates `state` with the move x_prev -> x_cur and returns rho_k. Leaves rho
/// unchanged when the move is zero.
double adaptive_rho_update(AdaptiveProxState& state, const SparseMat& A,
                           double beta, std::span<const double> x_cur,
                           std::span<const double> x_prev);

enum class YMode { kExactProx, kLinearized };

struct SolverConfig {
  double beta = 0.04;
  double s = 1.618;
  /// H = sigma I unless an explicit diagonal is given.
  double sigma = 2e-5;
  std::optional<DenseVec> H_diag;
  ScheduleConfig schedule;
  AdaptiveProxConfig adaptive_prox;
  YMode y_mode = YMode::kExactProx;
  double tau = 0.0;
  std::size_t max_outer = 100;
  /// Stop once the ergodic point has obj_err <= obj_tol and
  /// equ_err <= feas_tol. Needs a reference; disabled when obj_tol <= 0.
  double obj_tol = 0.0;
  double feas_tol = 0.0;
  std::size_t ergodic_kappa = 0;
  double divergence_factor = 1e6;
  /// Wall-clock limit for solve(); <= 0 means none.
  double time_budget_seconds = 0.0;
  /// When false, wall_seconds is recorded as 0 so traces are reproducible
  /// byte for byte.
  bool record_wall_time = true;

  DiagMetric metric(std::size_t n1) const;
  void validate() const;
};

struct IterateState {
  DenseVec x;
  DenseVec y;
  DenseVec lambda;
  DenseVec x_breve;
  std::size_t k = 0;
  DenseVec residual;  // A x + B y - b

  /// (x0, y0, lambda0) with x_breve = x0; zeros where not given.
  static IterateState initial(const ProblemSpec& p,
                              std::optional<DenseVec> x0 = std::nullopt,
                              std::optional<DenseVec> y0 = std::nullopt,
                              std::optional<DenseVec> lambda0 = std::nullopt);
};

struct InnerStepParams {
  double beta_t;
  double gamma_t;
  double Gamma_t;
};

/// beta_t = 2/(t+1), gamma_t = 2/(t eta), Gamma_t = 2/(t(t+1)).
InnerStepParams inner_params(std::size_t t, double eta);

/// Running mean of (x^{k+1}, y^{k+1}, lambda_tilde^k) from k = kappa onward.
class ErgodicAccumulator {
 public:
  ErgodicAccumulator() = default;
  ErgodicAccumulator(std::size_t n1, std::size_t n2, std::size_t n);

  void add(std::span<const double> x, std::span<const double> y,
           std::span<const double> lambda_tilde);
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  struct Mean {
    DenseVec x;
    DenseVec y;
    DenseVec lambda;
  };
  /// Throws std::logic_error when empty.
  Mean read() const;
  DenseVec mean_x() const;

 private:
  std::size_t count_ = 0;
  DenseVec sum_x_;
  DenseVec sum_y_;
  DenseVec sum_lambda_;
};

/// h = -A^T (lambda - beta r) with r the cached residual of `st`.
DenseVec compute_h(const ProblemSpec& p, const IterateState& st, double beta);

/// Supplies d_t at x_hat for inner step t.
using DirectionFn = std::function<void(std::span<const double> x_hat,
                                       std::size_t t, GradientDirection& out)>;

struct XsubResult {
  DenseVec x;
  DenseVec x_breve;
  std::uint64_t components_used = 0;
  /// x_breve_{t+1} for t = 1..M when recording was requested.
  std::vector<DenseVec> breve_trace;
};

/// Runs M_k accelerated stochastic steps on the linearized x-subproblem from
/// (x^k, x_breve^k). Each step solves the diagonal quadratic in closed form
/// and clamps to X. Throws SolverError on a non-finite direction.
XsubResult xsub(const ProblemSpec& p, const DiagMetric& H,
                const DirectionFn& direction, std::span<const double> x_k,
                std::span<const double> x_breve_k, std::span<const double> h,
                std::size_t inner_steps, double eta, double rho,
                bool record_trace = false);

/// argmin_y g(y) + (beta/2) ||A x + B y - b - lambda/beta||^2 for B = -I.
DenseVec y_step(const ProblemSpec& p, const SolverConfig& cfg,
                std::span<const double> x_new, const IterateState& st);
/// prox_{g,tau}(y - B^T [beta (A x + B y - b) - lambda] / tau).
DenseVec y_step_linearized(const ProblemSpec& p, const SolverConfig& cfg,
                           std::span<const double> x_new,
                           const IterateState& st, double tau);
/// lambda - s beta (A x + B y - b)
DenseVec lambda_step(const ProblemSpec& p, const IterateState& st,
                     const SolverConfig& cfg, std::span<const double> x_new,
                     std::span<const double> y_new);

/// Details of one outer iteration, for observers.
struct OuterReport {
  std::size_t k = 0;
  std::size_t inner_steps = 0;
  double eta = 0.0;
  double rho = 0.0;
  bool anchor_refreshed = false;
  const DenseVec* x_prev = nullptr;
  const DenseVec* x_new = nullptr;
  const XsubResult* xsub = nullptr;
};

struct SolveHooks {
  /// Replaces the sampler when set (testing and deterministic reductions).
  std::function<void(std::size_t k, std::span<const double> x_hat,
                     std::size_t t, GradientDirection& out)>
      direction_override;
  std::function<void(const OuterReport&)> on_outer;
  /// Keep x_breve traces of every xsub call for on_outer.
  bool record_inner_trace = false;
};

struct SolveResult {
  IterateState last;
  ErgodicAccumulator::Mean ergodic;
  std::vector<MetricsRecord> trace;
  std::vector<std::string> warnings;
  std::uint64_t grad_components = 0;
  std::size_t anchor_refreshes = 0;
  std::size_t bump_count = 0;
  std::vector<double> rho_history;
  std::vector<std::size_t> inner_steps_history;
  bool converged = false;
};

/// The accelerated stochastic ADMM engine. One instance owns one run.
class AsAdmmSolver {
 public:
  AsAdmmSolver(const ProblemSpec& p, SolverConfig cfg, SamplerConfig sampler);

  void set_reference(std::optional<SaddleReference> ref) {
    ref_ = std::move(ref);
  }
  void set_hooks(SolveHooks hooks) { hooks_ = std::move(hooks); }

  const SolverConfig& config() const { return cfg_; }
  const DiagMetric& metric() const { return H_; }
  const AdaptiveProxState& adaptive_state() const { return aps_; }
  const ErgodicAccumulator& accumulator() const { return acc_; }
  std::uint64_t grad_components() const { return cost_.components; }

  /// Advances `st` by one outer iteration. Returns the raw-iterate record
  /// followed by the ergodic record when the accumulator is non-empty.
  std::vector<MetricsRecord> outer_iteration(IterateState& st);

  SolveResult solve(IterateState init);
  SolveResult solve() { return solve(IterateState::initial(p_)); }

 private:
  const ProblemSpec& p_;
  SolverConfig cfg_;
  DiagMetric H_;
  Sampler sampler_;
  SolveHooks hooks_;
  std::optional<SaddleReference> ref_;

  AdaptiveProxState aps_;
  AnchorState anchor_;
  ErgodicAccumulator acc_;
  CostCounter cost_;
  std::size_t prev_inner_steps_ = 0;
  std::size_t anchor_refreshes_ = 0;
  std::vector<double> rho_history_;
  std::vector<std::size_t> inner_steps_history_;
  std::vector<std::string> warnings_;
  std::chrono::steady_clock::time_point start_;
  GradientDirection scratch_;
};

}  // namespace asadmm

#endif  // ASADMM_SOLVER_HPP_
