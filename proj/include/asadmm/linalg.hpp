#ifndef ASADMM_LINALG_HPP_
#define ASADMM_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asadmm {

using DenseVec = std::vector<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws DimensionError naming `what` when a != b.
void require_same_dim(std::size_t a, std::size_t b, const char* what);

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> v);
double norm(std::span<const double> v);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
DenseVec subtract(std::span<const double> a, std::span<const double> b);
bool all_finite(std::span<const double> v);

/// Compressed-row sparse matrix. Column indices are strictly increasing
/// within each row; duplicate triplets are summed when the matrix is built.
/// Immutable after construction.
class SparseMat {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    double value;
  };

  struct RowView {
    std::span<const std::size_t> cols;
    std::span<const double> values;
  };

  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  /// Validates and adopts raw CSR arrays.
  static SparseMat from_csr(std::size_t rows, std::size_t cols,
                            std::vector<std::size_t> row_ptr,
                            std::vector<std::size_t> col_idx,
                            std::vector<double> values);
  static SparseMat identity(std::size_t n, double scale = 1.0);
  static SparseMat zero(std::size_t rows, std::size_t cols);
  /// [top; bottom]; both must have the same column count.
  static SparseMat vstack(const SparseMat& top, const SparseMat& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const std::size_t> col_idx() const { return col_idx_; }
  std::span<const double> values() const { return values_; }

  RowView row(std::size_t i) const;

  /// out = M v, or out = M^T v when `transpose` is set. `out` is overwritten.
  void multiply(std::span<const double> v, std::span<double> out,
                bool transpose = false) const;

  /// True when the matrix is square and equals scale * I exactly.
  bool is_scaled_identity(double scale) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

DenseVec spmv(const SparseMat& m, std::span<const double> v,
              bool transpose = false);

/// Positive diagonal metric; ||v||_m^2 = sum_i m_i v_i^2.
class DiagMetric {
 public:
  explicit DiagMetric(DenseVec diagonal);
  static DiagMetric scalar(std::size_t n, double value);

  std::size_t size() const { return diag_.size(); }
  std::span<const double> diagonal() const { return diag_; }
  double operator[](std::size_t i) const { return diag_[i]; }
  double min_entry() const;
  double max_entry() const;

 private:
  DenseVec diag_;
};

double weighted_norm_sq(std::span<const double> v, const DiagMetric& m);
/// ||v||^2 in the inverse metric m^{-1}.
double inverse_weighted_norm_sq(std::span<const double> v,
                                const DiagMetric& m);
/// Solves (a + b) x = rhs for diagonal a, b.
DenseVec diag_metric_solve(const DiagMetric& a, const DiagMetric& b,
                           std::span<const double> rhs);

/// Power-iteration estimate of the largest eigenvalue of M^T M (= ||M||_2^2).
/// The Rayleigh quotient never exceeds the true value.
double gram_spectral_estimate(const SparseMat& m, int iterations = 200,
                              std::uint64_t seed = 0x5eed);

}  // namespace asadmm

#endif  // ASADMM_LINALG_HPP_
