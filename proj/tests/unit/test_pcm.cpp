#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pcmeff/errors.hpp"
#include "pcmeff/pcm.hpp"

using namespace pcmeff;

namespace {

PairwiseComparisonMatrix example_a() { return PairwiseComparisonMatrix::from_rows(oracle::kMatrixA); }

PairwiseComparisonMatrix ones(std::size_t n) {
  return PairwiseComparisonMatrix::from_rows(oracle::Rows(n, std::vector<double>(n, 1.0)));
}

}  // namespace

TEST_CASE("validation collects every problem") {
  CHECK_THROWS_AS(PairwiseComparisonMatrix::from_rows({{1, 2}, {0.5, 1}}), ValidationError);
  CHECK_THROWS_AS(PairwiseComparisonMatrix::from_rows({{1, 2, 3}, {0.5, 1, 1}}), ValidationError);
  try {
    PairwiseComparisonMatrix::from_rows({{2, 2, 1}, {0.4, 1, 1}, {1, 3, 1}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.details().size() == 3);
  }
  CHECK_THROWS_AS(PairwiseComparisonMatrix::from_rows({{1, 2, -1}, {0.5, 1, 1}, {-1, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(PairwiseComparisonMatrix::from_rows({{1, 2, 1}, {0.4, 1, 1}, {1, 1, 1}}), ValidationError);
  CHECK_NOTHROW(PairwiseComparisonMatrix::from_rows({{1, 2, 1}, {0.5 * (1 + 1e-12), 1, 1}, {1, 1, 1}}));
}

TEST_CASE("weight vectors") {
  CHECK_THROWS_AS(WeightVector({1.0, 0.0, 2.0}), ValidationError);
  const auto s = WeightVector::sum_one({2.0, 1.0, 1.0});
  CHECK(s[0] == doctest::Approx(0.5));
  const auto f = WeightVector::first_one({4.0, 2.0, 1.0});
  CHECK(f[0] == 1.0);
  CHECK(f[2] == 0.25);
}

TEST_CASE("consistency") {
  CHECK_FALSE(is_consistent(example_a(), 1e-9));
  CHECK(is_consistent(PairwiseComparisonMatrix::from_rows(oracle::powers_matrix(4, 2.0)), 1e-9));
  CHECK(is_consistent(ones(3), 1e-9));
}

TEST_CASE("principal eigenvector of matrix A") {
  const auto eig = principal_eigenvector(example_a());
  for (std::size_t i = 0; i < 4; ++i) CHECK(eig.vector[i] == doctest::Approx(oracle::kMatrixAEigenvector[i]).epsilon(1e-10));
  CHECK(eig.lambda_max == doctest::Approx(oracle::kMatrixALambdaMax).epsilon(1e-12));
  CHECK(eig.lambda_max >= 4.0);

  const auto m = example_a();
  const auto& a = m.entries();
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double aw = 0.0;
    for (std::size_t j = 0; j < 4; ++j) aw += a(i, j) * eig.vector[j];
    worst = std::max(worst, std::abs(aw - eig.lambda_max * eig.vector[i]));
  }
  CHECK(worst <= 1e-10 * eig.lambda_max);

  const auto other = principal_eigenvector(example_a(), std::vector<double>{1.0, 5.0, 0.1, 3.0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(other.vector[i] - eig.vector[i]) <= 1e-9);
}

TEST_CASE("eigenvector of consistent and uniform matrices") {
  const auto eig = principal_eigenvector(PairwiseComparisonMatrix::from_rows(oracle::powers_matrix(4, 2.0)));
  CHECK(eig.lambda_max == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(eig.vector[0] / eig.vector[3] == doctest::Approx(8.0).epsilon(1e-12));
  const auto u = principal_eigenvector(ones(5));
  for (std::size_t i = 0; i < 5; ++i) CHECK(u.vector[i] == doctest::Approx(0.2));
  CHECK(u.lambda_max == doctest::Approx(5.0));
}

TEST_CASE("geometric mean against row-product oracle") {
  const auto g = geometric_mean_vector(example_a());
  const auto o = oracle::geometric_mean(oracle::kMatrixA);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(g[i] == doctest::Approx(oracle::kMatrixAGeometricMean[i]).epsilon(1e-13));
    CHECK(g[i] == doctest::Approx(o[i]).epsilon(1e-13));
  }
  const auto c = PairwiseComparisonMatrix::from_rows(oracle::powers_matrix(4, 2.0));
  const auto r = ratio_matrix(geometric_mean_vector(c));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(r(i, j) - c(i, j)) <= 1e-12 * c(i, j));
}

TEST_CASE("residuals and ratio matrix of matrix A") {
  const auto m = example_a();
  const WeightVector w(oracle::kMatrixAEigenvector);
  CHECK(residuals(m, w)(0, 1) == doctest::Approx(0.0726).epsilon(1e-3));
  CHECK(residuals(m, WeightVector(oracle::kMatrixAPrime))(0, 1) == doctest::Approx(0.0114).epsilon(1e-2));
  const auto r = ratio_matrix(w);
  CHECK(std::abs(r(0, 1) - 0.9274) < 1e-4);
  CHECK(std::abs(r(0, 3) - 8.2531) < 1e-4);
  const auto r2 = ratio_matrix(WeightVector(oracle::kMatrixADoublePrime));
  CHECK(std::abs(r2(0, 2) - 3.9546) < 1e-4);
  CHECK(std::abs(r2(0, 3) - 8.8989) < 1e-4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(residuals(m, w)(i, i) == 0.0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(r(i, j) * r(j, i) - 1.0) <= 1e-12);
  }
}

TEST_CASE("residuals are scale invariant") {
  const auto m = example_a();
  const WeightVector w(oracle::kMatrixAEigenvector);
  const auto base = residuals(m, w);
  for (double c : {0.25, 2.0, 1024.0}) CHECK(residuals(m, w.scaled(c)) == base);
  for (double c : {1e-3, 3.7, 1e3}) {
    const auto scaled = residuals(m, w.scaled(c));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(scaled(i, j) - base(i, j)) <= 1e-12 * (1.0 + m(i, j)));
  }
  const auto c = PairwiseComparisonMatrix::from_rows(oracle::powers_matrix(4, 2.0));
  const auto zero = residuals(c, WeightVector({8, 4, 2, 1}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(zero(i, j) == 0.0);
}

TEST_CASE("lambda_max equals n only for consistent matrices") {
  CHECK(principal_eigenvector(example_a()).lambda_max - 4.0 > 1e-9);
  const auto c = PairwiseComparisonMatrix::from_rows(oracle::powers_matrix(5, 3.0));
  CHECK(std::abs(principal_eigenvector(c).lambda_max - 5.0) <= 1e-9);
}
