#include "asadmm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "asadmm/rng.hpp"

namespace asadmm {

std::string_view to_string(SamplerMode mode) {
  switch (mode) {
    case SamplerMode::kPlain:
      return "plain";
    case SamplerMode::kSvrgAnchor:
      return "svrg_anchor";
    case SamplerMode::kMinibatch:
      return "minibatch";
  }
  return "unknown";
}

SamplerMode sampler_mode_from_string(std::string_view name) {
  if (name == "plain") return SamplerMode::kPlain;
  if (name == "svrg_anchor") return SamplerMode::kSvrgAnchor;
  if (name == "minibatch") return SamplerMode::kMinibatch;
  throw std::invalid_argument("unknown sampler mode '" + std::string(name) +
                              "'");
}

void SamplerConfig::validate() const {
  if (!(batch_c > 0.0)) {
    throw std::invalid_argument("sampler: batch_c must be positive");
  }
  if (!(batch_rho >= 1.0)) {
    throw std::invalid_argument("sampler: batch_rho must be >= 1");
  }
}

std::size_t batch_size(const SamplerConfig& cfg, std::size_t k,
                       std::size_t num_components) {
  const double raw =
      std::ceil(cfg.batch_c * std::pow(1.0 + static_cast<double>(k),
                                       cfg.batch_rho));
  if (!(raw < static_cast<double>(num_components))) return num_components;
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

AnchorState refresh_anchor(const AnchorState& anchor, const ProblemSpec& p,
                           std::span<const double> point, CostCounter* cost) {
  require_same_dim(point.size(), p.n1, "refresh_anchor");
  AnchorState next = anchor;
  next.point.assign(point.begin(), point.end());
  next.full_grad = full_gradient(p, point);
  next.valid = true;
  if (cost) cost->components += p.num_components * p.component_cost;
  return next;
}

Sampler::Sampler(SamplerConfig cfg, std::size_t num_components, std::size_t n1)
    : cfg_(cfg),
      num_components_(num_components),
      threshold_(cfg.anchor_threshold.value_or(n1)) {
  cfg_.validate();
  if (num_components_ == 0) {
    throw std::invalid_argument("sampler: N must be positive");
  }
}

bool Sampler::wants_anchor(std::size_t inner_steps, std::size_t k) const {
  if (cfg_.mode == SamplerMode::kPlain || num_components_ == 1) return false;
  if (cfg_.mode == SamplerMode::kMinibatch &&
      batch_size(cfg_, k, num_components_) == num_components_) {
    return false;
  }
  return inner_steps > threshold_;
}

void Sampler::sample_without_replacement(std::uint64_t seed, std::size_t m,
                                         std::vector<std::size_t>& out) {
  // Floyd's algorithm; `taken_` is cleared before returning so the draw only
  // depends on the seed.
  taken_.resize(num_components_, 0);
  SplitMix64 gen(seed);
  out.clear();
  for (std::size_t j = num_components_ - m; j < num_components_; ++j) {
    std::size_t r = gen.below(j + 1);
    if (taken_[r]) r = j;
    taken_[r] = 1;
    out.push_back(r);
  }
  for (auto i : out) taken_[i] = 0;
}

void Sampler::draw(const AnchorState& anchor, const ProblemSpec& p,
                   std::span<const double> x_hat, std::size_t k, std::size_t t,
                   std::size_t inner_steps, GradientDirection& out) {
  require_same_dim(x_hat.size(), p.n1, "draw_direction");
  const std::size_t n_comp = num_components_;
  out.d.assign(p.n1, 0.0);
  out.sample_indices.clear();
  out.anchored = false;

  // A single component, or a batch covering all of them, is the exact
  // gradient; no anchor correction is applied.
  const std::size_t m = cfg_.mode == SamplerMode::kMinibatch
                            ? batch_size(cfg_, k, n_comp)
                            : std::size_t{1};
  if (n_comp == 1 || m == n_comp) {
    const double w = 1.0 / static_cast<double>(n_comp);
    for (std::size_t j = 0; j < n_comp; ++j) {
      p.component_grad(j, x_hat, w, out.d);
      out.sample_indices.push_back(j);
    }
    out.components_used = n_comp * p.component_cost;
    return;
  }

  const bool anchored = wants_anchor(inner_steps, k);
  if (anchored && !anchor.valid) {
    throw std::logic_error("draw_direction: anchored mode requires a valid anchor");
  }

  const std::uint64_t seed = stream_seed(cfg_.rng_seed, k, t);
  if (m == 1) {
    SplitMix64 gen(seed);
    out.sample_indices.push_back(static_cast<std::size_t>(gen.below(n_comp)));
  } else {
    sample_without_replacement(seed, m, out.sample_indices);
  }

  const double w = 1.0 / static_cast<double>(m);
  for (auto i : out.sample_indices) {
    p.component_grad(i, x_hat, w, out.d);
    if (anchored) p.component_grad(i, anchor.point, -w, out.d);
  }
  if (anchored) {
    axpy(1.0, anchor.full_grad, out.d);
    out.anchored = true;
  }
  out.components_used = (anchored ? 2 : 1) * m * p.component_cost;
}

GradientDirection Sampler::draw_direction(const AnchorState& anchor,
                                          const ProblemSpec& p,
                                          std::span<const double> x_hat,
                                          std::size_t k, std::size_t t,
                                          std::size_t inner_steps) {
  GradientDirection out;
  draw(anchor, p, x_hat, k, t, inner_steps, out);
  return out;
}

}  // namespace asadmm
