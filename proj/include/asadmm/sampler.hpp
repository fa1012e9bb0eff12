#ifndef ASADMM_SAMPLER_HPP_
#define ASADMM_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asadmm/linalg.hpp"
#include "asadmm/problem.hpp"

namespace asadmm {

enum class SamplerMode { kPlain, kSvrgAnchor, kMinibatch };

std::string_view to_string(SamplerMode mode);
SamplerMode sampler_mode_from_string(std::string_view name);

struct SamplerConfig {
  SamplerMode mode = SamplerMode::kSvrgAnchor;
  std::uint64_t rng_seed = 1;
  // Mini-batch growth m_k = min(ceil(c (1+k)^rho), N).
  double batch_c = 1.0;
  double batch_rho = 1.1;
  // The anchor correction is applied only while M_k exceeds this count.
  // Unset means "use n1", the dimension of x.
  std::optional<std::size_t> anchor_threshold;

  void validate() const;
};

/// Snapshot point for variance reduction together with its full gradient.
struct AnchorState {
  DenseVec point;
  DenseVec full_grad;
  bool valid = false;
};

/// One stochastic direction d_t = g_t + e_t.
struct GradientDirection {
  DenseVec d;
  /// Underlying component-gradient evaluations spent on this draw.
  std::size_t components_used = 0;
  std::vector<std::size_t> sample_indices;
  bool anchored = false;
};

/// Counts component-gradient evaluations.
struct CostCounter {
  std::uint64_t components = 0;
};

/// m_k = min(ceil(c (1+k)^rho), N), never below 1.
std::size_t batch_size(const SamplerConfig& cfg, std::size_t k,
                       std::size_t num_components);

/// Recomputes the anchor at `point`; charges N evaluations to `cost`.
AnchorState refresh_anchor(const AnchorState& anchor, const ProblemSpec& p,
                           std::span<const double> point,
                           CostCounter* cost = nullptr);

/// Draws stochastic directions. Sample indices for inner step t of outer
/// iteration k are a pure function of (seed, k, t), so draws do not depend on
/// evaluation order.
class Sampler {
 public:
  Sampler(SamplerConfig cfg, std::size_t num_components, std::size_t n1);

  const SamplerConfig& config() const { return cfg_; }
  std::size_t anchor_threshold() const { return threshold_; }

  /// Whether outer iteration k with `inner_steps` uses the anchor. Never true
  /// when a full mini-batch already gives the exact gradient.
  bool wants_anchor(std::size_t inner_steps, std::size_t k) const;

  /// Fills `out` with the direction at `x_hat`. Throws std::logic_error when
  /// the anchor is required but invalid.
  void draw(const AnchorState& anchor, const ProblemSpec& p,
            std::span<const double> x_hat, std::size_t k, std::size_t t,
            std::size_t inner_steps, GradientDirection& out);

  GradientDirection draw_direction(const AnchorState& anchor,
                                   const ProblemSpec& p,
                                   std::span<const double> x_hat,
                                   std::size_t k, std::size_t t,
                                   std::size_t inner_steps);

 private:
  void sample_without_replacement(std::uint64_t seed, std::size_t m,
                                  std::vector<std::size_t>& out);

  SamplerConfig cfg_;
  std::size_t num_components_;
  std::size_t threshold_;
  std::vector<char> taken_;
};

}  // namespace asadmm

#endif  // ASADMM_SAMPLER_HPP_
