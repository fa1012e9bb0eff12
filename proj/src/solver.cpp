#include "asadmm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asadmm {

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kPower:
      return "power";
    case ScheduleKind::kConstant:
      return "constant";
    case ScheduleKind::kGeometric:
      return "geometric";
  }
  return "unknown";
}

ScheduleKind schedule_kind_from_string(std::string_view name) {
  if (name == "power") return ScheduleKind::kPower;
  if (name == "constant") return ScheduleKind::kConstant;
  if (name == "geometric") return ScheduleKind::kGeometric;
  throw ConfigError("unknown schedule kind '" + std::string(name) + "'");
}

void ScheduleConfig::validate() const {
  if (c1 && !(*c1 > 0.0)) throw ConfigError("schedule.c1 must be positive");
  if (c2 && !(*c2 > 0.0)) throw ConfigError("schedule.c2 must be positive");
  if (!(c3 > 0.0)) throw ConfigError("schedule.c3 must be positive");
  if (!(rho_exp >= 1.0)) throw ConfigError("schedule.rho_exp must be >= 1");
  if (M_floor < 1) throw ConfigError("schedule.M_floor must be >= 1");
  if (kind == ScheduleKind::kConstant && !(eta_const > 0.0)) {
    throw ConfigError("schedule.eta_const must be positive");
  }
  if (!(theta > 0.0)) throw ConfigError("schedule.theta must be positive");
  if (M_cap < M_floor) throw ConfigError("schedule.M_cap must be >= M_floor");
}

ScheduleStep schedule_step(const ScheduleConfig& sc, std::size_t k, double nu,
                           double x_breve_norm_sq,
                           std::size_t prev_inner_steps) {
  ScheduleStep out;
  const double kd = static_cast<double>(k);
  switch (sc.kind) {
    case ScheduleKind::kPower: {
      const double c1 = sc.c1.value_or(1.0 / nu);
      const double c2 = sc.c2.value_or(1.0 / (2.0 * nu));
      double m = std::max(std::ceil(sc.c3 * std::pow(kd, sc.rho_exp)),
                          static_cast<double>(sc.M_floor));
      if (m > static_cast<double>(sc.M_cap)) {
        m = static_cast<double>(sc.M_cap);
        out.capped = true;
      }
      out.inner_steps = static_cast<std::size_t>(m);
      out.eta = std::min(c1 / (m * (m + 1.0)), c2);
      break;
    }
    case ScheduleKind::kConstant:
      out.inner_steps = sc.M_floor;
      out.eta = sc.eta_const;
      break;
    case ScheduleKind::kGeometric: {
      double m = static_cast<double>(sc.M_floor);
      if (k > 0) {
        const double prev = static_cast<double>(
            std::max<std::size_t>(prev_inner_steps, 1));
        m = std::ceil((1.0 + sc.theta) * (1.0 + sc.theta) * prev *
                      (x_breve_norm_sq + 1.0));
      }
      if (!(m <= static_cast<double>(sc.M_cap))) {
        m = static_cast<double>(sc.M_cap);
        out.capped = true;
      }
      out.inner_steps = static_cast<std::size_t>(m);
      out.eta = std::pow(1.0 + sc.theta, -kd) / m;
      break;
    }
  }
  return out;
}

void AdaptiveProxConfig::validate() const {
  if (!(rho0 > 0.0)) throw ConfigError("adaptive_prox.rho0 must be positive");
  if (!(rho_min > 0.0)) {
    throw ConfigError("adaptive_prox.rho_min must be positive");
  }
  if (!(growth > 1.0)) throw ConfigError("adaptive_prox.growth must be > 1");
}

AdaptiveProxState AdaptiveProxState::from_config(
    const AdaptiveProxConfig& cfg) {
  AdaptiveProxState s;
  s.rho_cur = cfg.rho0;
  s.rho_min = cfg.rho_min;
  s.growth = cfg.growth;
  return s;
}

double adaptive_rho_update(AdaptiveProxState& state, const SparseMat& A,
                           double beta, std::span<const double> x_cur,
                           std::span<const double> x_prev) {
  const DenseVec dx = subtract(x_cur, x_prev);
  const double delta1 = norm_sq(dx);
  if (delta1 == 0.0) return state.rho_cur;
  const double delta2 = norm_sq(spmv(A, dx));
  const double estimate = beta * delta2 / delta1;
  // Relative slack so rounding in the quotient alone never triggers a bump.
  if (state.rho_cur < estimate * (1.0 - 1e-10)) {
    state.rho_min *= state.growth;
    ++state.bump_count;
  }
  state.rho_cur = std::max(state.rho_min, estimate);
  return state.rho_cur;
}

DiagMetric SolverConfig::metric(std::size_t n1) const {
  if (H_diag) {
    require_same_dim(H_diag->size(), n1, "solver H");
    return DiagMetric(*H_diag);
  }
  return DiagMetric::scalar(n1, sigma);
}

void SolverConfig::validate() const {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  if (!(s > 0.0) || s > kMaxDualStep) {
    throw ConfigError("s must lie in (0, (1+sqrt(5))/2]");
  }
  if (!H_diag && !(sigma > 0.0)) throw ConfigError("sigma must be positive");
  schedule.validate();
  adaptive_prox.validate();
  if (y_mode == YMode::kLinearized && !(tau > 0.0)) {
    throw ConfigError("tau must be positive in linearized y mode");
  }
  if (max_outer < 1) throw ConfigError("max_outer must be >= 1");
  if (!(divergence_factor > 1.0)) {
    throw ConfigError("divergence_factor must exceed 1");
  }
}

IterateState IterateState::initial(const ProblemSpec& p,
                                   std::optional<DenseVec> x0,
                                   std::optional<DenseVec> y0,
                                   std::optional<DenseVec> lambda0) {
  IterateState st;
  st.x = x0.value_or(DenseVec(p.n1, 0.0));
  st.y = y0.value_or(DenseVec(p.n2, 0.0));
  st.lambda = lambda0.value_or(DenseVec(p.n(), 0.0));
  require_same_dim(st.x.size(), p.n1, "initial x");
  require_same_dim(st.y.size(), p.n2, "initial y");
  require_same_dim(st.lambda.size(), p.n(), "initial lambda");
  st.x_breve = st.x;
  st.residual = constraint_residual(p, st.x, st.y);
  return st;
}

InnerStepParams inner_params(std::size_t t, double eta) {
  const double td = static_cast<double>(t);
  return {2.0 / (td + 1.0), 2.0 / (td * eta), 2.0 / (td * (td + 1.0))};
}

ErgodicAccumulator::ErgodicAccumulator(std::size_t n1, std::size_t n2,
                                       std::size_t n)
    : sum_x_(n1, 0.0), sum_y_(n2, 0.0), sum_lambda_(n, 0.0) {}

void ErgodicAccumulator::add(std::span<const double> x,
                             std::span<const double> y,
                             std::span<const double> lambda_tilde) {
  axpy(1.0, x, sum_x_);
  axpy(1.0, y, sum_y_);
  axpy(1.0, lambda_tilde, sum_lambda_);
  ++count_;
}

ErgodicAccumulator::Mean ErgodicAccumulator::read() const {
  if (count_ == 0) throw std::logic_error("ergodic_read: empty accumulator");
  const double inv = 1.0 / static_cast<double>(count_);
  Mean m{sum_x_, sum_y_, sum_lambda_};
  for (auto& v : m.x) v *= inv;
  for (auto& v : m.y) v *= inv;
  for (auto& v : m.lambda) v *= inv;
  return m;
}

DenseVec ErgodicAccumulator::mean_x() const {
  if (count_ == 0) throw std::logic_error("ergodic_read: empty accumulator");
  DenseVec x = sum_x_;
  for (auto& v : x) v /= static_cast<double>(count_);
  return x;
}

DenseVec compute_h(const ProblemSpec& p, const IterateState& st, double beta) {
  require_same_dim(st.residual.size(), p.n(), "compute_h residual");
  DenseVec w(p.n());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = st.lambda[i] - beta * st.residual[i];
  }
  DenseVec h = spmv(p.A, w, true);
  for (auto& v : h) v = -v;
  return h;
}

XsubResult xsub(const ProblemSpec& p, const DiagMetric& H,
                const DirectionFn& direction, std::span<const double> x_k,
                std::span<const double> x_breve_k, std::span<const double> h,
                std::size_t inner_steps, double eta, double rho,
                bool record_trace) {
  const std::size_t n1 = p.n1;
  require_same_dim(x_k.size(), n1, "xsub x");
  require_same_dim(x_breve_k.size(), n1, "xsub x_breve");
  require_same_dim(h.size(), n1, "xsub h");
  require_same_dim(H.size(), n1, "xsub H");
  if (inner_steps < 1 || !(eta > 0.0) || !(rho >= 0.0)) {
    throw std::invalid_argument("xsub: need M >= 1, eta > 0, rho >= 0");
  }

  XsubResult res;
  DenseVec x(x_k.begin(), x_k.end());
  DenseVec breve(x_breve_k.begin(), x_breve_k.end());
  DenseVec x_hat(n1);
  GradientDirection dir;
  if (record_trace) res.breve_trace.reserve(inner_steps);

  for (std::size_t t = 1; t <= inner_steps; ++t) {
    const auto prm = inner_params(t, eta);
    for (std::size_t i = 0; i < n1; ++i) {
      x_hat[i] = prm.beta_t * breve[i] + (1.0 - prm.beta_t) * x[i];
    }
    direction(x_hat, t, dir);
    if (dir.d.size() != n1 || !all_finite(dir.d)) {
      throw SolverError("xsub: non-finite stochastic direction at inner step " +
                        std::to_string(t));
    }
    res.components_used += dir.components_used;
    // [gamma H + rho I] breve' = gamma H breve + rho x^k - d - h
    for (std::size_t i = 0; i < n1; ++i) {
      const double gh = prm.gamma_t * H[i];
      breve[i] = (gh * breve[i] + rho * x_k[i] - dir.d[i] - h[i]) / (gh + rho);
    }
    project_x_inplace(p, breve);
    for (std::size_t i = 0; i < n1; ++i) {
      x[i] = prm.beta_t * breve[i] + (1.0 - prm.beta_t) * x[i];
    }
    if (record_trace) res.breve_trace.push_back(breve);
  }
  res.x = std::move(x);
  res.x_breve = std::move(breve);
  return res;
}

DenseVec y_step(const ProblemSpec& p, const SolverConfig& cfg,
                std::span<const double> x_new, const IterateState& st) {
  if (!p.B.is_scaled_identity(-1.0)) {
    throw ConfigError(
        "exact y-step needs B = -I; use the linearized y mode instead");
  }
  DenseVec q = spmv(p.A, x_new);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] -= p.b[i] + st.lambda[i] / cfg.beta;
  }
  return p.g_prox(cfg.beta, q);
}

DenseVec y_step_linearized(const ProblemSpec& p, const SolverConfig& cfg,
                           std::span<const double> x_new,
                           const IterateState& st, double tau) {
  if (!(tau > 0.0)) throw ConfigError("linearized y-step: tau must be positive");
  DenseVec w = spmv(p.A, x_new);
  DenseVec by = spmv(p.B, st.y);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = cfg.beta * (w[i] + by[i] - p.b[i]) - st.lambda[i];
  }
  DenseVec q = spmv(p.B, w, true);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = st.y[i] - q[i] / tau;
  return p.g_prox(tau, q);
}

DenseVec lambda_step(const ProblemSpec& p, const IterateState& st,
                     const SolverConfig& cfg, std::span<const double> x_new,
                     std::span<const double> y_new) {
  const DenseVec r = constraint_residual(p, x_new, y_new);
  DenseVec lam = st.lambda;
  axpy(-cfg.s * cfg.beta, r, lam);
  return lam;
}

// ---------------------------------------------------------------------------

AsAdmmSolver::AsAdmmSolver(const ProblemSpec& p, SolverConfig cfg,
                           SamplerConfig sampler)
    : p_(p),
      cfg_(std::move(cfg)),
      H_(cfg_.metric(p.n1)),
      sampler_(sampler, p.num_components, p.n1),
      aps_(AdaptiveProxState::from_config(cfg_.adaptive_prox)),
      acc_(p.n1, p.n2, p.n()),
      start_(std::chrono::steady_clock::now()) {
  p_.validate();
  cfg_.validate();
  if (cfg_.y_mode == YMode::kExactProx && !p_.B.is_scaled_identity(-1.0)) {
    throw ConfigError(
        "exact y-step needs B = -I; use the linearized y mode instead");
  }
  if (cfg_.y_mode == YMode::kLinearized) {
    const double bound = cfg_.beta * gram_spectral_estimate(p_.B);
    if (cfg_.tau < bound * (1.0 - 1e-9)) {
      throw ConfigError("tau = " + std::to_string(cfg_.tau) +
                        " is below beta ||B^T B|| ~ " + std::to_string(bound));
    }
  }
}

std::vector<MetricsRecord> AsAdmmSolver::outer_iteration(IterateState& st) {
  const std::size_t k = st.k;

  const auto sched = schedule_step(cfg_.schedule, k, p_.lipschitz_nu,
                                   norm_sq(st.x_breve), prev_inner_steps_);
  if (sched.capped) {
    warnings_.push_back("k=" + std::to_string(k) + ": inner steps capped at " +
                        std::to_string(cfg_.schedule.M_cap));
  }
  prev_inner_steps_ = sched.inner_steps;

  double rho = cfg_.adaptive_prox.rho0;
  if (cfg_.adaptive_prox.enabled) {
    if (aps_.prev_x) {
      rho = adaptive_rho_update(aps_, p_.A, cfg_.beta, st.x, *aps_.prev_x);
    } else {
      rho = aps_.rho_cur;
    }
    aps_.prev_x = st.x;
  }

  const DenseVec h = compute_h(p_, st, cfg_.beta);

  bool refreshed = false;
  if (!hooks_.direction_override && sampler_.wants_anchor(sched.inner_steps, k)) {
    const DenseVec point = acc_.empty() ? st.x : acc_.mean_x();
    anchor_ = refresh_anchor(anchor_, p_, point, &cost_);
    ++anchor_refreshes_;
    refreshed = true;
  }

  DirectionFn direction;
  if (hooks_.direction_override) {
    direction = [&](std::span<const double> x_hat, std::size_t t,
                    GradientDirection& out) {
      hooks_.direction_override(k, x_hat, t, out);
    };
  } else {
    direction = [&](std::span<const double> x_hat, std::size_t t,
                    GradientDirection& out) {
      sampler_.draw(anchor_, p_, x_hat, k, t, sched.inner_steps, out);
    };
  }

  XsubResult sub = xsub(p_, H_, direction, st.x, st.x_breve, h,
                        sched.inner_steps, sched.eta, rho,
                        hooks_.record_inner_trace);
  cost_.components += sub.components_used;

  DenseVec y_new = cfg_.y_mode == YMode::kExactProx
                       ? y_step(p_, cfg_, sub.x, st)
                       : y_step_linearized(p_, cfg_, sub.x, st, cfg_.tau);

  // lambda_tilde^k = lambda^k - beta (A x^{k+1} + B y^k - b)
  DenseVec lambda_tilde = st.lambda;
  axpy(-cfg_.beta, constraint_residual(p_, sub.x, st.y), lambda_tilde);

  DenseVec r_new = constraint_residual(p_, sub.x, y_new);
  DenseVec lambda_new = st.lambda;
  axpy(-cfg_.s * cfg_.beta, r_new, lambda_new);

  if (k >= cfg_.ergodic_kappa) acc_.add(sub.x, y_new, lambda_tilde);

  if (hooks_.on_outer) {
    OuterReport rep;
    rep.k = k;
    rep.inner_steps = sched.inner_steps;
    rep.eta = sched.eta;
    rep.rho = rho;
    rep.anchor_refreshed = refreshed;
    rep.x_prev = &st.x;
    rep.x_new = &sub.x;
    rep.xsub = &sub;
    hooks_.on_outer(rep);
  }

  rho_history_.push_back(rho);
  inner_steps_history_.push_back(sched.inner_steps);

  st.x = std::move(sub.x);
  st.x_breve = std::move(sub.x_breve);
  st.y = std::move(y_new);
  st.lambda = std::move(lambda_new);
  st.residual = std::move(r_new);
  st.k = k + 1;

  const double wall =
      cfg_.record_wall_time
          ? std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count()
          : 0.0;

  std::vector<MetricsRecord> recs;
  const auto raw = compute_metrics(p_, ref_, st.x, st.y);
  recs.push_back({k, raw.obj_err, raw.equ_err, raw.opt_err, cost_.components,
                  wall, false});
  if (!acc_.empty()) {
    const auto mean = acc_.read();
    const auto erg = compute_metrics(p_, ref_, mean.x, mean.y);
    recs.push_back({k, erg.obj_err, erg.equ_err, erg.opt_err, cost_.components,
                    wall, true});
  }
  return recs;
}

SolveResult AsAdmmSolver::solve(IterateState init) {
  start_ = std::chrono::steady_clock::now();
  SolveResult res;
  IterateState st = std::move(init);
  const double r0 = std::max(norm(st.residual), 1.0);

  for (std::size_t it = 0; it < cfg_.max_outer; ++it) {
    auto recs = outer_iteration(st);
    const double r = norm(st.residual);
    if (!std::isfinite(r) || r > cfg_.divergence_factor * r0) {
      throw SolverError("solve: diverged at k=" + std::to_string(st.k - 1) +
                        " with residual " + std::to_string(r));
    }
    const bool stop =
        cfg_.obj_tol > 0.0 && ref_ && recs.size() == 2 &&
        recs[1].obj_err <= cfg_.obj_tol && recs[1].equ_err <= cfg_.feas_tol;
    res.trace.insert(res.trace.end(), recs.begin(), recs.end());
    if (stop) {
      res.converged = true;
      break;
    }
    if (cfg_.time_budget_seconds > 0.0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
                .count() > cfg_.time_budget_seconds) {
      break;
    }
  }

  res.last = std::move(st);
  if (!acc_.empty()) res.ergodic = acc_.read();
  res.warnings = warnings_;
  res.grad_components = cost_.components;
  res.anchor_refreshes = anchor_refreshes_;
  res.bump_count = aps_.bump_count;
  res.rho_history = rho_history_;
  res.inner_steps_history = inner_steps_history_;
  return res;
}

}  // namespace asadmm
