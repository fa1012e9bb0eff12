// Small problems with closed-form optima, shared by the unit and acceptance
// tests. Optima are computed with Eigen, independently of the library.
#ifndef ASADMM_TESTS_TEST_PROBLEMS_HPP_
#define ASADMM_TESTS_TEST_PROBLEMS_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "asadmm/linalg.hpp"
#include "asadmm/problem.hpp"

namespace asadmm::testing {

inline Eigen::MatrixXd to_dense(const SparseMat& M) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const auto r = M.row(i);
    for (std::size_t k = 0; k < r.cols.size(); ++k) D(i, r.cols[k]) += r.values[k];
  }
  return D;
}

inline Eigen::VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size());
}

inline DenseVec to_vec(const Eigen::VectorXd& v) {
  return DenseVec(v.data(), v.data() + v.size());
}

inline std::vector<double> gaussian_vector(std::mt19937_64& gen, std::size_t n,
                                           double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = nd(gen);
  return v;
}

/// Dense Gaussian matrix with entries N(0, 1/rows).
inline SparseMat random_matrix(std::mt19937_64& gen, std::size_t rows,
                               std::size_t cols) {
  std::normal_distribution<double> nd(0.0, 1.0 / std::sqrt(double(rows)));
  std::vector<SparseMat::Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t.push_back({i, j, nd(gen)});
  }
  return SparseMat(rows, cols, std::move(t));
}

struct QuadraticInstance {
  ProblemSpec p;
  SaddleReference ref;
  std::shared_ptr<std::vector<DenseVec>> centers;
};

/// f_j(x) = 1/2 ||x - p_j||^2, g(y) = 1/2 ||y - q||^2, A x - y = b.
/// Both f and g are 1-strongly convex; the saddle point solves
/// (I + A^T A) x = pbar + A^T (b + q), y = A x - b, lambda = q - y.
/// `data_scale` multiplies all data (p_j, q, b), hence the solution norm and the
/// gradient noise.
inline QuadraticInstance separable_quadratic(std::uint64_t seed,
                                             std::size_t n1, std::size_t n2,
                                             std::size_t N,
                                             double data_scale = 1.0) {
  std::mt19937_64 gen(seed);
  QuadraticInstance inst;
  auto centers = std::make_shared<std::vector<DenseVec>>();
  for (std::size_t j = 0; j < N; ++j) {
    centers->push_back(gaussian_vector(gen, n1, data_scale));
  }
  const DenseVec q = gaussian_vector(gen, n2, data_scale);

  ProblemSpec& p = inst.p;
  p.n1 = n1;
  p.n2 = n2;
  p.num_components = N;
  p.A = random_matrix(gen, n2, n1);
  p.B = SparseMat::identity(n2, -1.0);
  p.b = gaussian_vector(gen, n2, 0.5 * data_scale);
  p.lipschitz_nu = 1.0;
  p.component_grad = [centers](std::size_t j, std::span<const double> x,
                               double scale, std::span<double> out) {
    const auto& c = (*centers)[j];
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += scale * (x[i] - c[i]);
  };
  p.full_objective_f = [centers](std::span<const double> x) {
    double s = 0.0;
    for (const auto& c : *centers) {
      for (std::size_t i = 0; i < x.size(); ++i) s += 0.5 * (x[i] - c[i]) * (x[i] - c[i]);
    }
    return s / double(centers->size());
  };
  p.g_value = [q](std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) s += 0.5 * (y[i] - q[i]) * (y[i] - q[i]);
    return s;
  };
  p.g_prox = [q](double tau, std::span<const double> v) {
    DenseVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (q[i] + tau * v[i]) / (1.0 + tau);
    return out;
  };

  Eigen::VectorXd pbar = Eigen::VectorXd::Zero(n1);
  for (const auto& c : *centers) pbar += to_eigen(c);
  pbar /= double(N);
  const Eigen::MatrixXd A = to_dense(p.A);
  const Eigen::MatrixXd K = Eigen::MatrixXd::Identity(n1, n1) + A.transpose() * A;
  const Eigen::VectorXd x = K.ldlt().solve(pbar + A.transpose() * (to_eigen(p.b) + to_eigen(q)));
  const Eigen::VectorXd y = A * x - to_eigen(p.b);
  inst.ref.x_star = to_vec(x);
  inst.ref.y_star = to_vec(y);
  inst.ref.lambda_star = to_vec(to_eigen(q) - y);
  inst.ref.f_star = p.full_objective_f(inst.ref.x_star) + p.g_value(inst.ref.y_star);
  inst.centers = centers;
  return inst;
}

/// f_j(x) = 1/2 (c_j^T x - d_j)^2 on the box [-1, 1]^n1, g = 0 on y = x.
/// Used where only gradients matter (sampling statistics).
inline ProblemSpec least_squares_components(std::uint64_t seed, std::size_t n1,
                                            std::size_t N) {
  std::mt19937_64 gen(seed);
  auto rows = std::make_shared<std::vector<DenseVec>>();
  auto rhs = std::make_shared<DenseVec>(gaussian_vector(gen, N));
  double nu = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    rows->push_back(gaussian_vector(gen, n1));
    nu = std::max(nu, norm_sq(rows->back()));
  }
  ProblemSpec p;
  p.n1 = n1;
  p.n2 = n1;
  p.num_components = N;
  p.A = SparseMat::identity(n1);
  p.B = SparseMat::identity(n1, -1.0);
  p.b = DenseVec(n1, 0.0);
  p.x_box = Box{DenseVec(n1, -1.0), DenseVec(n1, 1.0)};
  p.lipschitz_nu = nu;
  p.component_grad = [rows, rhs](std::size_t j, std::span<const double> x,
                                 double scale, std::span<double> out) {
    const auto& c = (*rows)[j];
    const double r = dot(c, x) - (*rhs)[j];
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += scale * r * c[i];
  };
  p.full_objective_f = [rows, rhs](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t j = 0; j < rows->size(); ++j) {
      const double r = dot((*rows)[j], x) - (*rhs)[j];
      s += 0.5 * r * r;
    }
    return s / double(rows->size());
  };
  p.g_value = [](std::span<const double>) { return 0.0; };
  p.g_prox = [](double, std::span<const double> v) {
    return DenseVec(v.begin(), v.end());
  };
  return p;
}

}  // namespace asadmm::testing

#endif  // ASADMM_TESTS_TEST_PROBLEMS_HPP_
