#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pcmeff::lp {

// Solver tolerances. Acceptance tests refer to these by name.
inline constexpr double kFeasibilityTolerance = 1e-8;
inline constexpr double kReducedCostTolerance = 1e-9;
inline constexpr double kPivotFloor = 1e-12;
inline constexpr std::size_t kIterationCap = 10000;
/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
inline constexpr std::size_t kDegenerateStreakLimit = 50;

enum class Relation { LessEqual, Equal, GreaterEqual };

/// Lower bound of a variable: 0 or minus infinity. There are no upper bounds.
enum class Domain { NonNegative, Free };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
  std::string name;
};

/// minimize objective . x subject to constraints and variable domains.
struct LpProblem {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<Domain> domains;
  std::vector<std::string> variable_names;  // optional; used by to_lp_text

  std::size_t num_variables() const noexcept { return objective.size(); }

  /// Throws ValidationError when rows or domains disagree with the objective.
  void validate() const;
  std::string variable_name(std::size_t j) const;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct LpSolution {
  Status status = Status::Infeasible;
  double optimum = 0.0;             // meaningful when Optimal
  std::vector<double> assignment;   // one value per problem variable
  std::size_t iterations = 0;       // pivots over both phases
  double phase_one_residual = 0.0;  // sum of artificials after phase one
};

struct Violation {
  enum class Kind { Row, Bound };
  Kind kind = Kind::Row;
  std::size_t index = 0;  // row index or variable index
  std::string name;
  /// Signed amount by which the row misses its right-hand side:
  /// lhs - rhs for <= and =, rhs - lhs for >=, -x for a violated bound.
  double amount = 0.0;
};

/// Dense two-phase primal simplex. Entering column by the largest reduced
/// cost, falling back to Bland's rule for the rest of a phase after a streak
/// of degenerate pivots. Deterministic. Throws NumericalError when no
/// admissible pivot remains or the iteration cap is hit.
LpSolution solve(const LpProblem& problem);

/// Rows (and variable bounds) violated by more than kFeasibilityTolerance.
std::vector<Violation> check_feasibility(const LpProblem& problem, std::span<const double> assignment);

/// Human-readable CPLEX-LP-style dump for debugging.
std::string to_lp_text(const LpProblem& problem);

const char* to_string(Status s) noexcept;

}  // namespace pcmeff::lp
