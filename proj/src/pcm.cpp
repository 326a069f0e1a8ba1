#include "pcmeff/pcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "pcmeff/errors.hpp"

namespace pcmeff {

namespace {

constexpr double kPowerIterationTolerance = 1e-12;
constexpr std::size_t kPowerIterationCap = 100000;

std::string cell(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

void normalize_sum_one(std::vector<double>& v) {
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= total;
}

}  // namespace

std::vector<std::vector<double>> SquareMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

PairwiseComparisonMatrix::PairwiseComparisonMatrix(SquareMatrix entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  std::vector<std::string> problems;
  if (n < 3) problems.push_back("matrix size " + std::to_string(n) + " is below the minimum of 3");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = entries_(i, j);
      if (!std::isfinite(a) || a <= 0.0) problems.push_back("entry " + cell(i, j) + " is not a positive number");
    }
  }
  if (!problems.empty()) throw ValidationError(problems);

  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 1.0) problems.push_back("diagonal entry " + cell(i, i) + " is not 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(entries_(i, j) * entries_(j, i) - 1.0) > kReciprocityTolerance) {
        problems.push_back("entries " + cell(i, j) + " and " + cell(j, i) + " are not reciprocal");
      }
    }
  }
  if (!problems.empty()) throw ValidationError(problems);
}

PairwiseComparisonMatrix PairwiseComparisonMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return PairwiseComparisonMatrix(std::move(m));
}

WeightVector::WeightVector(std::vector<double> values) : WeightVector(std::move(values), Normalization::None) {}

WeightVector::WeightVector(std::vector<double> values, Normalization tag)
    : values_(std::move(values)), normalization_(tag) {
  if (values_.empty()) throw ValidationError("weight vector is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
      throw ValidationError("weight " + std::to_string(i + 1) + " is not a positive number");
    }
  }
}

WeightVector WeightVector::sum_one(std::vector<double> values) {
  WeightVector checked(std::move(values));
  normalize_sum_one(checked.values_);
  checked.normalization_ = Normalization::SumOne;
  return checked;
}

WeightVector WeightVector::first_one(std::vector<double> values) {
  WeightVector checked(std::move(values));
  const double first = checked.values_.front();
  for (auto& x : checked.values_) x /= first;
  checked.values_.front() = 1.0;
  checked.normalization_ = Normalization::FirstOne;
  return checked;
}

WeightVector WeightVector::scaled(double c) const {
  std::vector<double> out(values_);
  for (auto& x : out) x *= c;
  return WeightVector(std::move(out));
}

bool is_consistent(const PairwiseComparisonMatrix& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(m(i, j) * m(j, k) / m(i, k) - 1.0) > tol) return false;
  return true;
}

EigenResult principal_eigenvector(const PairwiseComparisonMatrix& m) {
  const auto start = geometric_mean_vector(m);
  return principal_eigenvector(m, start.values());
}

EigenResult principal_eigenvector(const PairwiseComparisonMatrix& m, std::span<const double> start) {
  const std::size_t n = m.size();
  if (start.size() != n) throw ValidationError("start vector length does not match the matrix");

  std::vector<double> current(start.begin(), start.end());
  for (double x : current) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("start vector must be positive");
  }
  normalize_sum_one(current);

  std::vector<double> next(n);
  for (std::size_t iter = 1; iter <= kPowerIterationCap; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      const auto row = m.entries().row(i);
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * current[j];
      next[i] = acc;
    }
    // current sums to one, so the sum of A*current is the Rayleigh-type estimate.
    const double lambda = std::accumulate(next.begin(), next.end(), 0.0);
    for (auto& x : next) x /= lambda;

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - current[i]));
    current.swap(next);
    if (change < kPowerIterationTolerance) {
      return {WeightVector::sum_one(std::move(current)), lambda, iter};
    }
  }
  throw ConvergenceError("power iteration did not converge within " + std::to_string(kPowerIterationCap) +
                         " iterations");
}

WeightVector geometric_mean_vector(const PairwiseComparisonMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (double a : m.entries().row(i)) log_sum += std::log(a);
    g[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return WeightVector::sum_one(std::move(g));
}

ResidualMatrix residuals(const PairwiseComparisonMatrix& m, const WeightVector& w) {
  const std::size_t n = m.size();
  if (w.size() != n) throw ValidationError("weight vector length does not match the matrix");
  ResidualMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r(i, j) = std::abs(w[i] / w[j] - m(i, j));
  return r;
}

SquareMatrix ratio_matrix(const WeightVector& w) {
  const std::size_t n = w.size();
  SquareMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = (i == j) ? 1.0 : w[i] / w[j];
  return r;
}

}  // namespace pcmeff
