#ifndef ASADMM_MODELS_HPP_
#define ASADMM_MODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "asadmm/linalg.hpp"
#include "asadmm/problem.hpp"

namespace asadmm {

/// Training samples (a_j, b_j): row j of `features` is a_j, labels are +-1.
struct Dataset {
  SparseMat features;  // N x l
  std::vector<double> labels;

  std::size_t num_samples() const { return features.rows(); }
  std::size_t num_features() const { return features.cols(); }

  /// Throws std::invalid_argument on an empty set or a label outside {-1,+1}.
  void validate() const;
};

enum class ConstraintKind { kIdentity, kStackedGraph };
std::string_view to_string(ConstraintKind kind);
ConstraintKind constraint_kind_from_string(std::string_view name);

/// Graph-guided fused lasso:
///   min (1/N) sum_j log(1 + exp(-b_j a_j^T x)) + mu ||y||_1   s.t.  A x - y = 0
/// with A = I or A = [G; I].
struct GgflModel {
  std::shared_ptr<const Dataset> dataset;
  double mu = 1e-5;
  ConstraintKind a_kind = ConstraintKind::kIdentity;
  std::optional<SparseMat> G;
};

/// log(1 + exp(-z)) without overflow.
double logistic_loss(double z);

/// f_j(x) = log(1 + exp(-b_j a_j^T x)).
double logistic_component_value(const Dataset& ds, std::size_t j,
                                std::span<const double> x);
/// out += scale * grad f_j(x), grad f_j(x) = -b_j a_j sigmoid(-b_j a_j^T x).
void logistic_component_grad_accumulate(const Dataset& ds, std::size_t j,
                                        std::span<const double> x,
                                        double scale, std::span<double> out);
DenseVec logistic_component_grad(const Dataset& ds, std::size_t j,
                                 std::span<const double> x);

/// sign(v_i) max(|v_i| - kappa, 0), the prox of kappa ||.||_1.
DenseVec soft_shrink(double kappa, std::span<const double> v);

/// max_j ||a_j||^2 / 4, the Euclidean Lipschitz constant of the component
/// gradients.
double logistic_lipschitz(const Dataset& ds);

ProblemSpec build_ggfl(const GgflModel& model);

/// Fused-lasso difference rows for feature pairs whose absolute sample
/// correlation exceeds `corr_threshold`: one row per pair (i < j) with +1 at
/// column i and -1 at column j. Constant features never pair.
SparseMat build_graph_G(const Dataset& ds, double corr_threshold);

/// Dense l x l sample correlation matrix (row-major); entries involving a
/// constant feature are 0.
std::vector<double> feature_correlation(const Dataset& ds);

struct SyntheticInstance {
  Dataset dataset;
  DenseVec ground_truth;
};

/// Reproducible logistic-model data. Features come in correlated groups of
/// five and each row is scaled to unit norm; a fraction `sparsity` of the
/// planted weights is nonzero and labels are drawn from the logistic model.
SyntheticInstance synthetic_instance(std::uint64_t seed, std::size_t N,
                                     std::size_t l, double sparsity);

}  // namespace asadmm

#endif  // ASADMM_MODELS_HPP_
