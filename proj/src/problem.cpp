#include "asadmm/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace asadmm {

void ProblemSpec::validate() const {
  if (n1 == 0) throw std::invalid_argument("problem: n1 must be positive");
  if (num_components == 0) {
    throw std::invalid_argument("problem: N must be positive");
  }
  if (!component_grad || !full_objective_f || !g_value || !g_prox) {
    throw std::invalid_argument("problem: missing oracle");
  }
  if (A.cols() != n1) {
    throw DimensionError("problem: A has " + std::to_string(A.cols()) +
                         " columns, expected n1 = " + std::to_string(n1));
  }
  if (B.cols() != n2) {
    throw DimensionError("problem: B has " + std::to_string(B.cols()) +
                         " columns, expected n2 = " + std::to_string(n2));
  }
  if (B.rows() != A.rows() || b.size() != A.rows()) {
    throw DimensionError("problem: A, B, b row counts disagree");
  }
  if (!(lipschitz_nu > 0.0) || !std::isfinite(lipschitz_nu)) {
    throw std::invalid_argument("problem: lipschitz_nu must be positive");
  }
  if (component_cost == 0) {
    throw std::invalid_argument("problem: component_cost must be positive");
  }
  if (x_box) {
    if (x_box->lo.size() != n1 || x_box->hi.size() != n1) {
      throw DimensionError("problem: box bounds must have dimension n1");
    }
    for (std::size_t i = 0; i < n1; ++i) {
      if (!(x_box->lo[i] <= x_box->hi[i])) {
        throw std::invalid_argument("problem: box has lo > hi at coordinate " +
                                    std::to_string(i));
      }
    }
  }
}

DenseVec component_gradient(const ProblemSpec& p, std::size_t j,
                            std::span<const double> x) {
  DenseVec g(p.n1, 0.0);
  p.component_grad(j, x, 1.0, g);
  return g;
}

DenseVec full_gradient(const ProblemSpec& p, std::span<const double> x) {
  require_same_dim(x.size(), p.n1, "full_gradient");
  DenseVec g(p.n1, 0.0);
  const double w = 1.0 / static_cast<double>(p.num_components);
  for (std::size_t j = 0; j < p.num_components; ++j) {
    p.component_grad(j, x, w, g);
  }
  return g;
}

double objective_value(const ProblemSpec& p, std::span<const double> x,
                       std::span<const double> y) {
  require_same_dim(x.size(), p.n1, "objective_value x");
  require_same_dim(y.size(), p.n2, "objective_value y");
  return p.full_objective_f(x) + p.g_value(y);
}

DenseVec constraint_residual(const ProblemSpec& p, std::span<const double> x,
                             std::span<const double> y) {
  DenseVec r = spmv(p.A, x);
  DenseVec by = spmv(p.B, y);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += by[i] - p.b[i];
  return r;
}

void project_x_inplace(const ProblemSpec& p, std::span<double> x) {
  if (!p.x_box) return;
  const auto& box = *p.x_box;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
  }
}

DenseVec project_x(const ProblemSpec& p, std::span<const double> x) {
  require_same_dim(x.size(), p.n1, "project_x");
  DenseVec out(x.begin(), x.end());
  project_x_inplace(p, out);
  return out;
}

}  // namespace asadmm
