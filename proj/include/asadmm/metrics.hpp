#ifndef ASADMM_METRICS_HPP_
#define ASADMM_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "asadmm/problem.hpp"

namespace asadmm {

/// One row of a convergence trace.
struct MetricsRecord {
  std::size_t k = 0;
  double obj_err = 0.0;
  double equ_err = 0.0;
  double opt_err = 0.0;  // max(obj_err, equ_err)
  std::uint64_t grad_components = 0;
  double wall_seconds = 0.0;
  bool ergodic = false;

  bool operator==(const MetricsRecord&) const = default;
};

struct ErrorTriple {
  double obj_err = 0.0;
  double equ_err = 0.0;
  double opt_err = 0.0;
};

/// obj_err = |F(x,y) - F*| / max(F*, 1), equ_err = ||Ax + By - b||.
/// Without a reference obj_err and opt_err are NaN.
ErrorTriple compute_metrics(const ProblemSpec& p,
                            const std::optional<SaddleReference>& ref,
                            std::span<const double> x,
                            std::span<const double> y);

}  // namespace asadmm

#endif  // ASADMM_METRICS_HPP_
