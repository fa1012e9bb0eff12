#include "asadmm/sampler.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support/test_problems.hpp"

namespace asadmm {
namespace {

SamplerConfig mode(SamplerMode m, std::uint64_t seed = 3) {
  SamplerConfig c;
  c.mode = m;
  c.rng_seed = seed;
  return c;
}

TEST(SamplerConfig, ModeNamesRoundTrip) {
  for (auto m : {SamplerMode::kPlain, SamplerMode::kSvrgAnchor,
                 SamplerMode::kMinibatch}) {
    EXPECT_EQ(sampler_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(sampler_mode_from_string("saga"), std::invalid_argument);
}

TEST(SamplerConfig, ValidateRejectsBadGrowth) {
  SamplerConfig c;
  c.batch_c = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.batch_c = 1.0;
  c.batch_rho = 0.5;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(Sampler(SamplerConfig{}, 0, 3), std::invalid_argument);
}

TEST(BatchSize, GrowsAndSaturates) {
  SamplerConfig c;
  c.batch_c = 1.0;
  c.batch_rho = 1.1;
  EXPECT_EQ(batch_size(c, 0, 100), 1u);
  EXPECT_EQ(batch_size(c, 1, 100), 3u);  // ceil(2^1.1) = ceil(2.14)
  EXPECT_EQ(batch_size(c, 9, 100), 13u);  // ceil(10^1.1) = ceil(12.59)
  EXPECT_EQ(batch_size(c, 1000, 100), 100u);
  c.batch_c = 1e-3;
  EXPECT_EQ(batch_size(c, 0, 100), 1u);
  for (std::size_t k = 1; k < 200; ++k) {
    EXPECT_GE(batch_size(c, k, 100), batch_size(c, k - 1, 100));
  }
}

TEST(Sampler, DrawsAreAPureFunctionOfSeedAndIndex) {
  const auto p = testing::least_squares_components(1, 4, 30);
  const DenseVec x{0.1, 0.2, -0.3, 0.4};
  Sampler a(mode(SamplerMode::kMinibatch), 30, 4);
  Sampler b(mode(SamplerMode::kMinibatch), 30, 4);
  AnchorState none;
  // b draws in a different order; the (k, t) draw must not change.
  const auto db_later = b.draw_direction(none, p, x, 2, 5, 3);
  const auto da = a.draw_direction(none, p, x, 2, 5, 3);
  const auto db = b.draw_direction(none, p, x, 2, 5, 3);
  EXPECT_EQ(da.sample_indices, db.sample_indices);
  EXPECT_EQ(da.d, db.d);
  EXPECT_EQ(db_later.d, db.d);
  const auto other = a.draw_direction(none, p, x, 2, 6, 3);
  EXPECT_NE(other.sample_indices, da.sample_indices);
}

TEST(Sampler, MinibatchDrawsAreDistinct) {
  const auto p = testing::least_squares_components(2, 3, 50);
  Sampler s(mode(SamplerMode::kMinibatch), 50, 3);
  const DenseVec x(3, 0.0);
  for (std::size_t k = 0; k < 30; ++k) {
    const auto d = s.draw_direction(AnchorState{}, p, x, k, 1, 1);
    const std::set<std::size_t> uniq(d.sample_indices.begin(),
                                     d.sample_indices.end());
    EXPECT_EQ(uniq.size(), d.sample_indices.size());
    EXPECT_EQ(d.sample_indices.size(), batch_size(s.config(), k, 50));
    for (auto i : d.sample_indices) EXPECT_LT(i, 50u);
  }
}

TEST(Sampler, FullBatchIsTheExactGradient) {
  const auto p = testing::least_squares_components(3, 4, 8);
  SamplerConfig c = mode(SamplerMode::kMinibatch);
  c.batch_c = 100.0;
  Sampler s(c, 8, 4);
  const DenseVec x{0.3, -0.1, 0.0, 0.9};
  const auto d = s.draw_direction(AnchorState{}, p, x, 0, 1, 1000);
  const auto g = full_gradient(p, x);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(d.d[i], g[i], 1e-14);
  EXPECT_FALSE(d.anchored);
  EXPECT_FALSE(s.wants_anchor(1000, 0));
  EXPECT_EQ(d.components_used, 8u);
}

TEST(Sampler, AnchorRequiredAboveThreshold) {
  const auto p = testing::least_squares_components(4, 3, 10);
  Sampler s(mode(SamplerMode::kSvrgAnchor), 10, 3);
  EXPECT_EQ(s.anchor_threshold(), 3u);
  const DenseVec x(3, 0.5);
  EXPECT_FALSE(s.wants_anchor(3, 0));
  EXPECT_TRUE(s.wants_anchor(4, 0));
  EXPECT_NO_THROW(s.draw_direction(AnchorState{}, p, x, 0, 1, 3));
  EXPECT_THROW(s.draw_direction(AnchorState{}, p, x, 0, 1, 4),
               std::logic_error);
  Sampler plain(mode(SamplerMode::kPlain), 10, 3);
  EXPECT_FALSE(plain.wants_anchor(1000, 0));
}

TEST(Sampler, DimensionMismatchThrows) {
  const auto p = testing::least_squares_components(4, 3, 10);
  Sampler s(mode(SamplerMode::kPlain), 10, 3);
  EXPECT_THROW(s.draw_direction(AnchorState{}, p, DenseVec(2), 0, 1, 1),
               DimensionError);
}

TEST(Sampler, RefreshChargesAllComponents) {
  const auto p = testing::least_squares_components(5, 3, 12);
  CostCounter cost;
  const DenseVec x{0.1, 0.2, 0.3};
  const auto a = refresh_anchor(AnchorState{}, p, x, &cost);
  EXPECT_TRUE(a.valid);
  EXPECT_EQ(a.point, x);
  EXPECT_EQ(cost.components, 12u);
  EXPECT_EQ(a.full_grad, full_gradient(p, x));
}

TEST(Sampler, AnchoredDrawAtTheAnchorIsExact) {
  const auto p = testing::least_squares_components(6, 3, 12);
  Sampler s(mode(SamplerMode::kSvrgAnchor), 12, 3);
  const DenseVec x{0.4, -0.2, 0.1};
  const auto a = refresh_anchor(AnchorState{}, p, x);
  const auto d = s.draw_direction(a, p, x, 0, 1, 10);
  EXPECT_TRUE(d.anchored);
  EXPECT_EQ(d.components_used, 2u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(d.d[i], a.full_grad[i], 1e-13);
}

// Monte Carlo: the mean direction matches the full gradient in every mode.
class UnbiasedDraws : public ::testing::TestWithParam<SamplerMode> {};

TEST_P(UnbiasedDraws, MeanMatchesFullGradient) {
  const auto p = testing::least_squares_components(7, 4, 20);
  SamplerConfig c = mode(GetParam(), 11);
  c.batch_c = 3.0;
  c.batch_rho = 1.0;
  Sampler s(c, 20, 4);
  const DenseVec x{0.2, -0.5, 0.7, 0.1};
  const auto anchor = refresh_anchor(AnchorState{}, p, DenseVec(4, 0.3));
  const auto g = full_gradient(p, x);
  const int draws = 20000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(4), sq = Eigen::VectorXd::Zero(4);
  for (int t = 1; t <= draws; ++t) {
    const auto d = s.draw_direction(anchor, p, x, 0, t, 10);
    const Eigen::VectorXd v = testing::to_eigen(d.d);
    mean += v;
    sq += v.cwiseProduct(v);
  }
  mean /= draws;
  sq /= draws;
  for (int i = 0; i < 4; ++i) {
    const double se = std::sqrt((sq[i] - mean[i] * mean[i]) / draws);
    EXPECT_NEAR(mean[i], g[i], 4.0 * se + 1e-12) << "coordinate " << i;
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, UnbiasedDraws,
                         ::testing::Values(SamplerMode::kPlain,
                                           SamplerMode::kSvrgAnchor,
                                           SamplerMode::kMinibatch));

}  // namespace
}  // namespace asadmm
