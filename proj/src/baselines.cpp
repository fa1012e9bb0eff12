#include "asadmm/baselines.hpp"

#include <chrono>
#include <cmath>

namespace asadmm {

void LAdmmConfig::validate() const {
  if (!(beta > 0.0)) throw ConfigError("ladmm: beta must be positive");
  if (nu && !(*nu > 0.0)) throw ConfigError("ladmm: nu must be positive");
  if (!(s > 0.0) || s > kMaxDualStep) {
    throw ConfigError("ladmm: s must lie in (0, (1+sqrt(5))/2]");
  }
  if (!(cg_tol > 0.0)) throw ConfigError("ladmm: cg_tol must be positive");
  if (cg_max_iter < 1) throw ConfigError("ladmm: cg_max_iter must be >= 1");
}

CgResult solve_shifted_gram(const SparseMat& A, double nu, double beta,
                            std::span<const double> rhs,
                            std::span<const double> x0, double tol,
                            std::size_t max_iter) {
  const std::size_t n = A.cols();
  require_same_dim(rhs.size(), n, "cg rhs");
  require_same_dim(x0.size(), n, "cg x0");
  DenseVec ax(A.rows());
  auto apply = [&](std::span<const double> v, std::span<double> out) {
    A.multiply(v, ax);
    A.multiply(ax, out, true);
    for (std::size_t i = 0; i < n; ++i) out[i] = nu * v[i] + beta * out[i];
  };

  CgResult res;
  res.x.assign(x0.begin(), x0.end());
  DenseVec r(n), q(n);
  apply(res.x, q);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - q[i];
  DenseVec d = r;
  double rr = norm_sq(r);
  const double stop = tol * std::max(norm(rhs), 1.0);
  while (std::sqrt(rr) > stop) {
    if (res.iterations == max_iter) {
      res.residual_norm = std::sqrt(rr);
      throw SolverError("cg: no convergence in " + std::to_string(max_iter) +
                        " iterations, residual " +
                        std::to_string(res.residual_norm));
    }
    apply(d, q);
    const double alpha = rr / dot(d, q);
    axpy(alpha, d, res.x);
    axpy(-alpha, q, r);
    const double rr_next = norm_sq(r);
    const double gamma = rr_next / rr;
    for (std::size_t i = 0; i < n; ++i) d[i] = r[i] + gamma * d[i];
    rr = rr_next;
    ++res.iterations;
  }
  res.residual_norm = std::sqrt(rr);
  return res;
}

IterateState ladmm_step(const ProblemSpec& p, const LAdmmConfig& cfg,
                        const IterateState& st) {
  if (!p.B.is_scaled_identity(-1.0)) {
    throw ConfigError("ladmm: requires B = -I");
  }
  if (p.x_box) throw ConfigError("ladmm: box-constrained x is not supported");
  const double nu = cfg.nu.value_or(p.lipschitz_nu);
  const double beta = cfg.beta;

  // (nu I + beta A^T A) x = nu x^k - grad f(x^k) + beta A^T (y^k + b + lambda^k / beta)
  DenseVec w(p.n());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = st.y[i] + p.b[i] + st.lambda[i] / beta;
  }
  DenseVec rhs = spmv(p.A, w, true);
  const DenseVec grad = full_gradient(p, st.x);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] = nu * st.x[i] - grad[i] + beta * rhs[i];
  }

  IterateState next;
  if (p.A.is_scaled_identity(1.0)) {
    next.x = rhs;
    for (auto& v : next.x) v /= nu + beta;
  } else {
    next.x = solve_shifted_gram(p.A, nu, beta, rhs, st.x, cfg.cg_tol,
                                cfg.cg_max_iter)
                 .x;
  }

  SolverConfig ycfg;
  ycfg.beta = beta;
  next.y = y_step(p, ycfg, next.x, st);
  next.residual = constraint_residual(p, next.x, next.y);
  next.lambda = st.lambda;
  axpy(-cfg.s * beta, next.residual, next.lambda);
  next.x_breve = next.x;
  next.k = st.k + 1;
  return next;
}

BaselineResult ladmm_solve(const ProblemSpec& p, const LAdmmConfig& cfg,
                           const std::optional<SaddleReference>& ref,
                           IterateState init) {
  cfg.validate();
  p.validate();
  const auto start = std::chrono::steady_clock::now();
  BaselineResult res;
  res.last = std::move(init);
  for (std::size_t it = 0; it < cfg.max_iter; ++it) {
    const std::size_t k = res.last.k;
    res.last = ladmm_step(p, cfg, res.last);
    res.grad_components += p.num_components * p.component_cost;
    if (!all_finite(res.last.x) || !all_finite(res.last.lambda)) {
      throw SolverError("ladmm: non-finite iterate at k=" + std::to_string(k));
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const auto e = compute_metrics(p, ref, res.last.x, res.last.y);
    res.trace.push_back({k, e.obj_err, e.equ_err, e.opt_err,
                         res.grad_components,
                         cfg.record_wall_time ? elapsed : 0.0, false});
    if (cfg.obj_tol > 0.0 && ref && e.obj_err <= cfg.obj_tol &&
        e.equ_err <= cfg.feas_tol) {
      res.converged = true;
      break;
    }
    if (cfg.time_budget_seconds > 0.0 && elapsed > cfg.time_budget_seconds) {
      break;
    }
  }
  return res;
}

ProblemSpec deterministic_view(const ProblemSpec& p) {
  ProblemSpec q = p;
  const std::size_t n_comp = p.num_components;
  const auto grad = p.component_grad;
  q.num_components = 1;
  q.component_cost = n_comp * p.component_cost;
  q.component_grad = [grad, n_comp](std::size_t, std::span<const double> x,
                                    double scale, std::span<double> out) {
    const double w = scale / static_cast<double>(n_comp);
    for (std::size_t j = 0; j < n_comp; ++j) grad(j, x, w, out);
  };
  return q;
}

SolveResult det_inexact_admm(const ProblemSpec& p, const SolverConfig& cfg,
                             const std::optional<SaddleReference>& ref,
                             std::optional<IterateState> init) {
  const ProblemSpec q = deterministic_view(p);
  SamplerConfig sc;
  sc.mode = SamplerMode::kPlain;
  AsAdmmSolver solver(q, cfg, sc);
  solver.set_reference(ref);
  return solver.solve(init ? std::move(*init) : IterateState::initial(q));
}

}  // namespace asadmm
