#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pcmeff/efficiency.hpp"
#include "pcmeff/errors.hpp"
#include "pcmeff/lp.hpp"
#include "pcmeff/random_lab.hpp"

using namespace pcmeff;
using namespace pcmeff::lp;

namespace {

LpProblem pinned() {
  LpProblem p;
  p.objective = {-1.0};
  p.domains = {Domain::NonNegative};
  p.constraints.push_back({{1.0}, Relation::LessEqual, 0.0, "cap"});
  return p;
}

LpProblem matrix_a_lp() {
  const auto m = PairwiseComparisonMatrix::from_rows(oracle::kMatrixA);
  const WeightVector w(oracle::kMatrixAEigenvector);
  return build_efficiency_lp(m, w, index_sets(m, w));
}

std::vector<double> matrix_a_optimum_point() {
  std::vector<double> x = oracle::kMatrixALpY;
  // s21, s24, s31, s32, s41, s43 in overshoot order.
  x.insert(x.end(), {oracle::kMatrixALpS, 0.0, oracle::kMatrixALpS, 0.0, oracle::kMatrixALpS, 0.0});
  return x;
}

}  // namespace

TEST_CASE("trivial problems") {
  const auto s = solve(pinned());
  CHECK(s.status == Status::Optimal);
  CHECK(s.optimum == 0.0);
  CHECK(s.assignment[0] == 0.0);

  LpProblem unbounded;
  unbounded.objective = {-1.0};
  unbounded.domains = {Domain::NonNegative};
  CHECK(solve(unbounded).status == Status::Unbounded);

  LpProblem infeasible = pinned();
  infeasible.constraints.push_back({{1.0}, Relation::GreaterEqual, 1.0, "floor"});
  CHECK(solve(infeasible).status == Status::Infeasible);
  CHECK(check_feasibility(unbounded, std::vector<double>{3.0}).empty());
}

TEST_CASE("free variables take negative values") {
  LpProblem p;
  p.objective = {1.0, 0.0};
  p.domains = {Domain::Free, Domain::Free};
  p.constraints.push_back({{1.0, -1.0}, Relation::GreaterEqual, -3.0, ""});
  p.constraints.push_back({{0.0, 1.0}, Relation::Equal, 0.5, ""});
  const auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.optimum == doctest::Approx(-2.5));
  CHECK(s.assignment[0] == doctest::Approx(-2.5));
}

TEST_CASE("log-domain LP of matrix A") {
  const auto p = matrix_a_lp();
  CHECK(p.constraints.size() == 13);
  CHECK(p.num_variables() == 10);
  const std::vector<double> rhs = {0, 0.0753, -1.6094, 2.1859, 1.3863, -1.2995,
                                   1.9459, -1.3749, 2.1972, -2.1106, 1.3863, -0.8111};
  for (std::size_t r = 0; r < rhs.size(); ++r) CHECK(std::abs(p.constraints[r].rhs - rhs[r]) < 1e-4);
  CHECK(p.constraints.back().relation == Relation::Equal);

  const auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.optimum == doctest::Approx(oracle::kMatrixALpOptimum).epsilon(1e-9));
  const auto x = matrix_a_optimum_point();
  for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::abs(s.assignment[j] - x[j]) < 1e-6);
}

TEST_CASE("feasibility report on the matrix A LP") {
  const auto p = matrix_a_lp();
  CHECK(check_feasibility(p, matrix_a_optimum_point()).empty());
  const auto violations = check_feasibility(p, std::vector<double>(p.num_variables(), 0.0));
  std::vector<std::size_t> rows;
  for (const auto& v : violations) rows.push_back(v.index);
  std::vector<std::size_t> negative;
  for (std::size_t r = 0; r < p.constraints.size(); ++r)
    if (p.constraints[r].rhs < 0) negative.push_back(r);
  CHECK(rows == negative);
  CHECK(violations.front().amount == doctest::Approx(1.6094).epsilon(1e-4));
}

TEST_CASE("to_lp_text") {
  const auto text = to_lp_text(matrix_a_lp());
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("anchor") != std::string::npos);
  CHECK(text.find("y1 free") != std::string::npos);
}

TEST_CASE("strong duality on random covering LPs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PortableRng rng(seed);
    const std::size_t m = 2 + rng.index(5);
    const std::size_t n = 2 + rng.index(5);
    oracle::Rows a(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (auto& row : a)
      for (auto& x : row) x = rng.index(4) == 0 ? 0.0 : std::round(10.0 * rng.uniform01()) / 2.0;
    for (auto& x : b) x = std::round(10.0 * rng.uniform01() - 2.0);
    for (auto& x : c) x = 0.5 + std::round(8.0 * rng.uniform01());

    LpProblem primal;
    primal.objective = c;
    primal.domains.assign(n, Domain::NonNegative);
    for (std::size_t r = 0; r < m; ++r) primal.constraints.push_back({a[r], Relation::GreaterEqual, b[r], ""});

    const auto ps = solve(primal);
    const auto ds = solve(oracle::dual_of_covering(a, b, c));
    if (ps.status == Status::Optimal) {
      REQUIRE(ds.status == Status::Optimal);
      CHECK(std::abs(ps.optimum + ds.optimum) <= 1e-7);
    } else {
      CHECK(ps.status == Status::Infeasible);
      CHECK(ds.status == Status::Unbounded);
    }
  }
}

TEST_CASE("solves are deterministic") {
  const auto a = solve(matrix_a_lp());
  const auto b = solve(matrix_a_lp());
  CHECK(a.assignment == b.assignment);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("degenerate problems terminate") {
  // A classic cycling example for the largest-coefficient rule.
  LpProblem p;
  p.objective = {-0.75, 150.0, -0.02, 6.0};
  p.domains.assign(4, Domain::NonNegative);
  p.constraints.push_back({{0.25, -60.0, -0.04, 9.0}, Relation::LessEqual, 0.0, ""});
  p.constraints.push_back({{0.5, -90.0, -0.02, 3.0}, Relation::LessEqual, 0.0, ""});
  p.constraints.push_back({{0.0, 0.0, 1.0, 0.0}, Relation::LessEqual, 1.0, ""});
  const auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.optimum == doctest::Approx(-0.05));
  CHECK(s.iterations < kIterationCap);
}

TEST_CASE("malformed problems are rejected") {
  LpProblem p = pinned();
  p.constraints.push_back({{1.0, 2.0}, Relation::LessEqual, 1.0, ""});
  CHECK_THROWS_AS(solve(p), ValidationError);
}
