#include "asadmm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "asadmm/rng.hpp"

namespace asadmm {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(norm_sq(v)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require_same_dim(x.size(), y.size(), "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

DenseVec subtract(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a.size(), b.size(), "subtract");
  DenseVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

// ---------------------------------------------------------------------------
// SparseMat

SparseMat::SparseMat(std::size_t rows, std::size_t cols,
                     std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw DimensionError("SparseMat: triplet (" + std::to_string(t.row) +
                           "," + std::to_string(t.col) +
                           ") outside " + std::to_string(rows) + "x" +
                           std::to_string(cols));
    }
    if (!std::isfinite(t.value)) {
      throw std::invalid_argument("SparseMat: non-finite value");
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  col_idx_.reserve(triplets.size());
  values_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const auto row = triplets[i].row;
    const auto col = triplets[i].col;
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == row &&
           triplets[i].col == col) {
      v += triplets[i].value;
      ++i;
    }
    col_idx_.push_back(col);
    values_.push_back(v);
    ++row_ptr_[row + 1];
  }
  std::partial_sum(row_ptr_.begin(), row_ptr_.end(), row_ptr_.begin());
}

SparseMat SparseMat::from_csr(std::size_t rows, std::size_t cols,
                              std::vector<std::size_t> row_ptr,
                              std::vector<std::size_t> col_idx,
                              std::vector<double> values) {
  if (row_ptr.size() != rows + 1 || row_ptr.front() != 0 ||
      row_ptr.back() != col_idx.size() || col_idx.size() != values.size()) {
    throw DimensionError("SparseMat::from_csr: inconsistent array sizes");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_ptr[r] > row_ptr[r + 1]) {
      throw std::invalid_argument("SparseMat::from_csr: row_ptr decreasing");
    }
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (col_idx[k] >= cols) {
        throw DimensionError("SparseMat::from_csr: column out of range");
      }
      if (k > row_ptr[r] && col_idx[k] <= col_idx[k - 1]) {
        throw std::invalid_argument(
            "SparseMat::from_csr: columns not strictly increasing in row " +
            std::to_string(r));
      }
      if (!std::isfinite(values[k])) {
        throw std::invalid_argument("SparseMat::from_csr: non-finite value");
      }
    }
  }
  SparseMat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  m.values_ = std::move(values);
  return m;
}

SparseMat SparseMat::identity(std::size_t n, double scale) {
  std::vector<std::size_t> ptr(n + 1);
  std::vector<std::size_t> idx(n);
  std::iota(ptr.begin(), ptr.end(), std::size_t{0});
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return from_csr(n, n, std::move(ptr), std::move(idx), DenseVec(n, scale));
}

SparseMat SparseMat::zero(std::size_t rows, std::size_t cols) {
  return from_csr(rows, cols, std::vector<std::size_t>(rows + 1, 0), {}, {});
}

SparseMat SparseMat::vstack(const SparseMat& top, const SparseMat& bottom) {
  require_same_dim(top.cols(), bottom.cols(), "SparseMat::vstack");
  std::vector<std::size_t> ptr(top.row_ptr_.begin(), top.row_ptr_.end());
  for (std::size_t r = 1; r < bottom.row_ptr_.size(); ++r) {
    ptr.push_back(top.nnz() + bottom.row_ptr_[r]);
  }
  std::vector<std::size_t> idx(top.col_idx_);
  idx.insert(idx.end(), bottom.col_idx_.begin(), bottom.col_idx_.end());
  DenseVec vals(top.values_);
  vals.insert(vals.end(), bottom.values_.begin(), bottom.values_.end());
  return from_csr(top.rows() + bottom.rows(), top.cols(), std::move(ptr),
                  std::move(idx), std::move(vals));
}

SparseMat::RowView SparseMat::row(std::size_t i) const {
  const auto b = row_ptr_[i];
  const auto e = row_ptr_[i + 1];
  return {std::span<const std::size_t>(col_idx_).subspan(b, e - b),
          std::span<const double>(values_).subspan(b, e - b)};
}

void SparseMat::multiply(std::span<const double> v, std::span<double> out,
                         bool transpose) const {
  if (!transpose) {
    require_same_dim(v.size(), cols_, "spmv input");
    require_same_dim(out.size(), rows_, "spmv output");
    for (std::size_t r = 0; r < rows_; ++r) {
      double s = 0.0;
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        s += values_[k] * v[col_idx_[k]];
      }
      out[r] = s;
    }
  } else {
    require_same_dim(v.size(), rows_, "spmv^T input");
    require_same_dim(out.size(), cols_, "spmv^T output");
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const double vr = v[r];
      if (vr == 0.0) continue;
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        out[col_idx_[k]] += values_[k] * vr;
      }
    }
  }
}

bool SparseMat::is_scaled_identity(double scale) const {
  if (rows_ != cols_ || nnz() != rows_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_ptr_[r] != r || col_idx_[r] != r || values_[r] != scale) {
      return false;
    }
  }
  return true;
}

DenseVec spmv(const SparseMat& m, std::span<const double> v, bool transpose) {
  DenseVec out(transpose ? m.cols() : m.rows());
  m.multiply(v, out, transpose);
  return out;
}

// ---------------------------------------------------------------------------
// DiagMetric

DiagMetric::DiagMetric(DenseVec diagonal) : diag_(std::move(diagonal)) {
  for (double d : diag_) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("DiagMetric: entries must be positive");
    }
  }
}

DiagMetric DiagMetric::scalar(std::size_t n, double value) {
  return DiagMetric(DenseVec(n, value));
}

double DiagMetric::min_entry() const {
  return diag_.empty() ? 0.0 : *std::min_element(diag_.begin(), diag_.end());
}

double DiagMetric::max_entry() const {
  return diag_.empty() ? 0.0 : *std::max_element(diag_.begin(), diag_.end());
}

double weighted_norm_sq(std::span<const double> v, const DiagMetric& m) {
  require_same_dim(v.size(), m.size(), "weighted_norm_sq");
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += m[i] * v[i] * v[i];
  return s;
}

double inverse_weighted_norm_sq(std::span<const double> v,
                                const DiagMetric& m) {
  require_same_dim(v.size(), m.size(), "inverse_weighted_norm_sq");
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * v[i] / m[i];
  return s;
}

DenseVec diag_metric_solve(const DiagMetric& a, const DiagMetric& b,
                           std::span<const double> rhs) {
  require_same_dim(a.size(), b.size(), "diag_metric_solve");
  require_same_dim(a.size(), rhs.size(), "diag_metric_solve rhs");
  DenseVec x(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) x[i] = rhs[i] / (a[i] + b[i]);
  return x;
}

double gram_spectral_estimate(const SparseMat& m, int iterations,
                              std::uint64_t seed) {
  if (m.cols() == 0 || m.nnz() == 0) return 0.0;
  SplitMix64 gen(seed);
  std::normal_distribution<double> normal;
  DenseVec v(m.cols());
  for (auto& x : v) x = normal(gen);
  DenseVec mv(m.rows());
  DenseVec w(m.cols());
  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const double nv = norm(v);
    if (nv == 0.0) break;
    for (auto& x : v) x /= nv;
    m.multiply(v, mv);
    m.multiply(mv, w, true);
    estimate = norm_sq(mv);  // Rayleigh quotient v^T M^T M v with ||v|| = 1
    v.swap(w);
  }
  return estimate;
}

}  // namespace asadmm
