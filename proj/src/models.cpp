#include "asadmm/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "asadmm/rng.hpp"

namespace asadmm {

void Dataset::validate() const {
  if (features.rows() == 0) {
    throw std::invalid_argument("dataset: no samples");
  }
  if (labels.size() != features.rows()) {
    throw DimensionError("dataset: label count differs from sample count");
  }
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] != 1.0 && labels[j] != -1.0) {
      throw std::invalid_argument("dataset: label of sample " +
                                  std::to_string(j) + " is not +-1");
    }
  }
}

std::string_view to_string(ConstraintKind kind) {
  return kind == ConstraintKind::kIdentity ? "identity" : "stacked_graph";
}

ConstraintKind constraint_kind_from_string(std::string_view name) {
  if (name == "identity") return ConstraintKind::kIdentity;
  if (name == "stacked_graph") return ConstraintKind::kStackedGraph;
  throw std::invalid_argument("unknown constraint kind '" + std::string(name) +
                              "'");
}

double logistic_loss(double z) {
  return z > 0.0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
}

namespace {

// 1 / (1 + exp(z)) without overflow.
double sigmoid_neg(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double row_dot(const Dataset& ds, std::size_t j, std::span<const double> x) {
  const auto row = ds.features.row(j);
  double s = 0.0;
  for (std::size_t k = 0; k < row.cols.size(); ++k) {
    s += row.values[k] * x[row.cols[k]];
  }
  return s;
}

}  // namespace

double logistic_component_value(const Dataset& ds, std::size_t j,
                                std::span<const double> x) {
  return logistic_loss(ds.labels[j] * row_dot(ds, j, x));
}

void logistic_component_grad_accumulate(const Dataset& ds, std::size_t j,
                                        std::span<const double> x,
                                        double scale, std::span<double> out) {
  const double bj = ds.labels[j];
  const double coef = -scale * bj * sigmoid_neg(bj * row_dot(ds, j, x));
  const auto row = ds.features.row(j);
  for (std::size_t k = 0; k < row.cols.size(); ++k) {
    out[row.cols[k]] += coef * row.values[k];
  }
}

DenseVec logistic_component_grad(const Dataset& ds, std::size_t j,
                                 std::span<const double> x) {
  DenseVec g(ds.num_features(), 0.0);
  logistic_component_grad_accumulate(ds, j, x, 1.0, g);
  return g;
}

DenseVec soft_shrink(double kappa, std::span<const double> v) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("soft_shrink: kappa < 0");
  DenseVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]) - kappa;
    out[i] = a > 0.0 ? std::copysign(a, v[i]) : 0.0;
  }
  return out;
}

double logistic_lipschitz(const Dataset& ds) {
  double best = 0.0;
  for (std::size_t j = 0; j < ds.num_samples(); ++j) {
    best = std::max(best, norm_sq(ds.features.row(j).values));
  }
  return best / 4.0;
}

ProblemSpec build_ggfl(const GgflModel& model) {
  if (!model.dataset) throw std::invalid_argument("build_ggfl: no dataset");
  const auto ds = model.dataset;
  ds->validate();
  if (!(model.mu >= 0.0)) throw std::invalid_argument("build_ggfl: mu < 0");
  const std::size_t l = ds->num_features();

  ProblemSpec p;
  p.n1 = l;
  p.num_components = ds->num_samples();
  if (model.a_kind == ConstraintKind::kIdentity) {
    p.A = SparseMat::identity(l);
  } else {
    if (!model.G) {
      throw std::invalid_argument(
          "build_ggfl: stacked_graph constraint requires G");
    }
    require_same_dim(model.G->cols(), l, "build_ggfl G columns");
    p.A = SparseMat::vstack(*model.G, SparseMat::identity(l));
  }
  p.n2 = p.A.rows();
  p.B = SparseMat::identity(p.n2, -1.0);
  p.b = DenseVec(p.n2, 0.0);

  p.component_grad = [ds](std::size_t j, std::span<const double> x,
                          double scale, std::span<double> out) {
    logistic_component_grad_accumulate(*ds, j, x, scale, out);
  };
  p.full_objective_f = [ds](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t j = 0; j < ds->num_samples(); ++j) {
      s += logistic_component_value(*ds, j, x);
    }
    return s / static_cast<double>(ds->num_samples());
  };
  const double mu = model.mu;
  p.g_value = [mu](std::span<const double> y) {
    double s = 0.0;
    for (double v : y) s += std::abs(v);
    return mu * s;
  };
  p.g_prox = [mu](double tau, std::span<const double> q) {
    return soft_shrink(mu / tau, q);
  };
  p.lipschitz_nu = std::max(logistic_lipschitz(*ds), 1e-12);
  return p;
}

std::vector<double> feature_correlation(const Dataset& ds) {
  const std::size_t l = ds.num_features();
  const double n = static_cast<double>(ds.num_samples());
  std::vector<double> mean(l, 0.0);
  std::vector<double> cross(l * l, 0.0);
  for (std::size_t j = 0; j < ds.num_samples(); ++j) {
    const auto row = ds.features.row(j);
    for (std::size_t a = 0; a < row.cols.size(); ++a) {
      mean[row.cols[a]] += row.values[a];
      for (std::size_t c = 0; c < row.cols.size(); ++c) {
        cross[row.cols[a] * l + row.cols[c]] += row.values[a] * row.values[c];
      }
    }
  }
  for (auto& m : mean) m /= n;
  std::vector<double> sd(l);
  for (std::size_t i = 0; i < l; ++i) {
    const double var = cross[i * l + i] / n - mean[i] * mean[i];
    sd[i] = var > 1e-14 * std::max(1.0, cross[i * l + i] / n)
                ? std::sqrt(var)
                : 0.0;
  }
  std::vector<double> corr(l * l, 0.0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < l; ++k) {
      if (sd[i] == 0.0 || sd[k] == 0.0) continue;
      const double cov = cross[i * l + k] / n - mean[i] * mean[k];
      corr[i * l + k] = std::clamp(cov / (sd[i] * sd[k]), -1.0, 1.0);
    }
  }
  return corr;
}

SparseMat build_graph_G(const Dataset& ds, double corr_threshold) {
  if (!(corr_threshold > 0.0 && corr_threshold < 1.0)) {
    throw std::invalid_argument("build_graph_G: threshold must be in (0, 1)");
  }
  const std::size_t l = ds.num_features();
  const auto corr = feature_correlation(ds);
  std::vector<SparseMat::Triplet> trips;
  std::size_t row = 0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = i + 1; k < l; ++k) {
      if (std::abs(corr[i * l + k]) > corr_threshold) {
        trips.push_back({row, i, 1.0});
        trips.push_back({row, k, -1.0});
        ++row;
      }
    }
  }
  return SparseMat(row, l, std::move(trips));
}

SyntheticInstance synthetic_instance(std::uint64_t seed, std::size_t N,
                                     std::size_t l, double sparsity) {
  if (N < 1 || l < 1) throw std::invalid_argument("synthetic: N, l >= 1");
  if (!(sparsity >= 0.0 && sparsity <= 1.0)) {
    throw std::invalid_argument("synthetic: sparsity must be in [0, 1]");
  }
  SplitMix64 gen(stream_seed(seed, 0x5717));
  std::normal_distribution<double> normal;

  constexpr std::size_t kGroup = 5;
  constexpr double kShared = 0.8;
  const std::size_t groups = (l + kGroup - 1) / kGroup;

  SyntheticInstance inst;
  inst.ground_truth.assign(l, 0.0);
  const auto nnz = static_cast<std::size_t>(std::llround(sparsity * l));
  if (nnz > 0) {
    std::vector<std::size_t> idx(l);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < nnz; ++i) {
      std::swap(idx[i], idx[i + gen.below(l - i)]);
    }
    const double scale = std::sqrt(4.0 / sparsity);
    for (std::size_t i = 0; i < nnz; ++i) {
      const double mag = scale * (0.5 + gen.uniform());
      inst.ground_truth[idx[i]] = gen.uniform() < 0.5 ? -mag : mag;
    }
  }

  std::vector<std::size_t> row_ptr(N + 1, 0);
  std::vector<std::size_t> col_idx;
  std::vector<double> values;
  col_idx.reserve(N * l);
  values.reserve(N * l);
  std::vector<double> latent(groups);
  std::vector<double> a(l);
  inst.dataset.labels.resize(N);
  for (std::size_t j = 0; j < N; ++j) {
    for (auto& u : latent) u = normal(gen);
    for (std::size_t i = 0; i < l; ++i) {
      a[i] = kShared * latent[i / kGroup] +
             std::sqrt(1.0 - kShared * kShared) * normal(gen);
    }
    const double nrm = norm(a);
    for (auto& v : a) v /= nrm;
    for (std::size_t i = 0; i < l; ++i) {
      col_idx.push_back(i);
      values.push_back(a[i]);
    }
    row_ptr[j + 1] = col_idx.size();
    const double margin = dot(a, inst.ground_truth);
    const double prob_pos = 1.0 / (1.0 + std::exp(-margin));
    inst.dataset.labels[j] = gen.uniform() < prob_pos ? 1.0 : -1.0;
  }
  inst.dataset.features = SparseMat::from_csr(
      N, l, std::move(row_ptr), std::move(col_idx), std::move(values));
  return inst;
}

}  // namespace asadmm
