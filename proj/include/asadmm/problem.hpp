#ifndef ASADMM_PROBLEM_HPP_
#define ASADMM_PROBLEM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "asadmm/linalg.hpp"

namespace asadmm {

/// Per-coordinate bounds lo <= x <= hi.
struct Box {
  DenseVec lo;
  DenseVec hi;
};

/// An instance of
///
///   min f(x) + g(y)   s.t.  A x + B y = b,  x in X,
///
/// with f(x) = (1/N) sum_j f_j(x). Components are indexed 0..N-1.
///
/// All oracles must be pure: the solver may evaluate component gradients of
/// one mini-batch concurrently.
struct ProblemSpec {
  /// out += scale * grad f_j(x)
  using ComponentGrad = std::function<void(
      std::size_t j, std::span<const double> x, double scale,
      std::span<double> out)>;
  using ScalarFn = std::function<double(std::span<const double>)>;
  /// prox_{g,tau}(q) = argmin_y g(y) + (tau/2) ||y - q||^2
  using Prox = std::function<DenseVec(double tau, std::span<const double> q)>;

  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t num_components = 0;

  ComponentGrad component_grad;
  ScalarFn full_objective_f;
  ScalarFn g_value;
  Prox g_prox;

  SparseMat A;
  SparseMat B;
  DenseVec b;
  std::optional<Box> x_box;

  /// nu with ||grad f_j(x1) - grad f_j(x2)|| <= nu ||x1 - x2|| (Euclidean).
  double lipschitz_nu = 1.0;
  /// Underlying component evaluations charged per component_grad call. The
  /// deterministic wrapper that exposes the full gradient as one component
  /// sets this to the original N.
  std::size_t component_cost = 1;

  std::size_t n() const { return A.rows(); }

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// Reference optimum used for the objective error.
struct SaddleReference {
  DenseVec x_star;
  DenseVec y_star;
  DenseVec lambda_star;
  double f_star = 0.0;
};

/// Single component gradient as a fresh vector.
DenseVec component_gradient(const ProblemSpec& p, std::size_t j,
                            std::span<const double> x);
/// (1/N) sum_j grad f_j(x)
DenseVec full_gradient(const ProblemSpec& p, std::span<const double> x);
double objective_value(const ProblemSpec& p, std::span<const double> x,
                       std::span<const double> y);
/// A x + B y - b
DenseVec constraint_residual(const ProblemSpec& p, std::span<const double> x,
                             std::span<const double> y);

/// Projection onto X. With a box and a diagonal metric the metric projection
/// is the componentwise clamp, so no metric argument is needed.
DenseVec project_x(const ProblemSpec& p, std::span<const double> x);
void project_x_inplace(const ProblemSpec& p, std::span<double> x);

}  // namespace asadmm

#endif  // ASADMM_PROBLEM_HPP_
