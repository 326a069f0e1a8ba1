#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pcmeff {

/// Relative reciprocity slack accepted at construction: |a_ij * a_ji - 1|.
inline constexpr double kReciprocityTolerance = 1e-9;

/// Dense row-major n x n matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Positive reciprocal judgment matrix with unit diagonal, n >= 3.
/// Immutable once constructed; construction validates every invariant.
class PairwiseComparisonMatrix {
 public:
  /// Throws ValidationError listing every violated invariant.
  explicit PairwiseComparisonMatrix(SquareMatrix entries);
  static PairwiseComparisonMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const SquareMatrix& entries() const noexcept { return entries_; }

 private:
  SquareMatrix entries_;
};

enum class Normalization { SumOne, FirstOne, None };

/// Strictly positive weight vector tagged with its normalization.
class WeightVector {
 public:
  /// Keeps `values` untouched and tags them `None`. Throws ValidationError on
  /// empty input or any non-positive / non-finite component.
  explicit WeightVector(std::vector<double> values);

  /// Rescaled copies.
  static WeightVector sum_one(std::vector<double> values);
  static WeightVector first_one(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  Normalization normalization() const noexcept { return normalization_; }

  WeightVector normalized_sum_one() const { return sum_one(values_); }
  WeightVector normalized_first_one() const { return first_one(values_); }
  WeightVector scaled(double c) const;

 private:
  WeightVector(std::vector<double> values, Normalization tag);

  std::vector<double> values_;
  Normalization normalization_ = Normalization::None;
};

/// Entry (i, j) = |x_i / x_j - a_ij|; the diagonal is zero.
using ResidualMatrix = SquareMatrix;

struct EigenResult {
  WeightVector vector;  // sum-one
  double lambda_max;
  std::size_t iterations;
};

bool is_consistent(const PairwiseComparisonMatrix& m, double tol);

/// Perron eigenvector by power iteration started from the row geometric means.
/// Throws ConvergenceError when the iteration cap is reached.
EigenResult principal_eigenvector(const PairwiseComparisonMatrix& m);

/// Same iteration from a caller-supplied positive start vector.
EigenResult principal_eigenvector(const PairwiseComparisonMatrix& m,
                                  std::span<const double> start);

/// Row geometric means, sum-one normalized.
WeightVector geometric_mean_vector(const PairwiseComparisonMatrix& m);

ResidualMatrix residuals(const PairwiseComparisonMatrix& m, const WeightVector& w);

/// The consistent matrix [w_i / w_j].
SquareMatrix ratio_matrix(const WeightVector& w);

}  // namespace pcmeff
