#include "asadmm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace asadmm {

ErrorTriple compute_metrics(const ProblemSpec& p,
                            const std::optional<SaddleReference>& ref,
                            std::span<const double> x,
                            std::span<const double> y) {
  ErrorTriple e;
  e.equ_err = norm(constraint_residual(p, x, y));
  if (!ref) {
    e.obj_err = std::numeric_limits<double>::quiet_NaN();
    e.opt_err = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  const double f = objective_value(p, x, y);
  e.obj_err = std::abs(f - ref->f_star) / std::max(ref->f_star, 1.0);
  e.opt_err = std::max(e.obj_err, e.equ_err);
  return e;
}

}  // namespace asadmm
