#include "pcmeff/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "pcmeff/errors.hpp"

namespace pcmeff::lp {

void LpProblem::validate() const {
  const std::size_t n = num_variables();
  if (n == 0) throw ValidationError("LP has no variables");
  if (domains.size() != n) throw ValidationError("LP domain list length differs from the objective");
  if (!variable_names.empty() && variable_names.size() != n) {
    throw ValidationError("LP variable name list length differs from the objective");
  }
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto& c = constraints[r];
    if (c.coefficients.size() != n) {
      throw ValidationError("LP row " + std::to_string(r + 1) + " has the wrong number of coefficients");
    }
    if (!std::isfinite(c.rhs)) throw ValidationError("LP row " + std::to_string(r + 1) + " has a non-finite rhs");
    for (double a : c.coefficients) {
      if (!std::isfinite(a)) throw ValidationError("LP row " + std::to_string(r + 1) + " has a non-finite coefficient");
    }
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw ValidationError("LP objective has a non-finite coefficient");
  }
}

std::string LpProblem::variable_name(std::size_t j) const {
  if (j < variable_names.size() && !variable_names[j].empty()) return variable_names[j];
  return "x" + std::to_string(j + 1);
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

enum class ColumnKind { Structural, Slack, Artificial };

struct Column {
  ColumnKind kind;
  std::size_t source;  // problem variable for structural columns
  double sign;         // +1, or -1 for the negative half of a free variable
};

class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : problem_(p) {
    for (std::size_t j = 0; j < p.num_variables(); ++j) {
      columns_.push_back({ColumnKind::Structural, j, 1.0});
      if (p.domains[j] == Domain::Free) columns_.push_back({ColumnKind::Structural, j, -1.0});
    }
    const std::size_t structural = columns_.size();

    // Orient rows so every right-hand side is nonnegative.
    std::vector<Relation> relations;
    std::vector<double> signs;
    for (const auto& c : p.constraints) {
      const double s = c.rhs < 0.0 ? -1.0 : 1.0;
      Relation rel = c.relation;
      if (s < 0.0 && rel == Relation::LessEqual)
        rel = Relation::GreaterEqual;
      else if (s < 0.0 && rel == Relation::GreaterEqual)
        rel = Relation::LessEqual;
      relations.push_back(rel);
      signs.push_back(s);
    }
    for (std::size_t r = 0; r < p.constraints.size(); ++r) {
      if (relations[r] != Relation::Equal) columns_.push_back({ColumnKind::Slack, r, 1.0});
    }
    for (std::size_t r = 0; r < p.constraints.size(); ++r) {
      if (relations[r] != Relation::LessEqual) columns_.push_back({ColumnKind::Artificial, r, 1.0});
    }

    width_ = columns_.size() + 1;
    rows_ = p.constraints.size();
    cells_.assign(rows_ * width_, 0.0);
    basis_.assign(rows_, 0);

    std::size_t slack_col = structural;
    std::size_t art_col = structural;
    while (art_col < columns_.size() && columns_[art_col].kind != ColumnKind::Artificial) ++art_col;

    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& c = p.constraints[r];
      for (std::size_t k = 0; k < structural; ++k) {
        const auto& col = columns_[k];
        at(r, k) = signs[r] * col.sign * c.coefficients[col.source];
      }
      rhs(r) = signs[r] * c.rhs;
      if (relations[r] == Relation::LessEqual) {
        at(r, slack_col) = 1.0;
        basis_[r] = slack_col++;
      } else if (relations[r] == Relation::GreaterEqual) {
        at(r, slack_col++) = -1.0;
        at(r, art_col) = 1.0;
        basis_[r] = art_col++;
      } else {
        at(r, art_col) = 1.0;
        basis_[r] = art_col++;
      }
    }
    barred_.assign(columns_.size(), false);
  }

  std::size_t iterations() const noexcept { return iterations_; }

  // Phase one: minimize the sum of artificials. Returns that minimum.
  double phase_one() {
    std::vector<double> cost(columns_.size(), 0.0);
    for (std::size_t k = 0; k < columns_.size(); ++k)
      if (columns_[k].kind == ColumnKind::Artificial) cost[k] = 1.0;
    const auto outcome = optimize(cost);
    if (outcome == Outcome::Unbounded) throw NumericalError("phase one reported an unbounded ray");
    return objective_value(cost);
  }

  // Pivots basic artificials out (or drops their redundant rows) and bars
  // every artificial column from re-entering.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_;) {
      if (columns_[basis_[r]].kind != ColumnKind::Artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> best;
      double best_mag = kPivotFloor;
      for (std::size_t k = 0; k < columns_.size(); ++k) {
        if (columns_[k].kind == ColumnKind::Artificial) continue;
        const double mag = std::abs(at(r, k));
        if (mag > best_mag) {
          best_mag = mag;
          best = k;
        }
      }
      if (best) {
        pivot(r, *best);
        ++r;
      } else {
        erase_row(r);
      }
    }
    for (std::size_t k = 0; k < columns_.size(); ++k)
      if (columns_[k].kind == ColumnKind::Artificial) barred_[k] = true;
  }

  bool phase_two() {
    std::vector<double> cost(columns_.size(), 0.0);
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      const auto& col = columns_[k];
      if (col.kind == ColumnKind::Structural) cost[k] = col.sign * problem_.objective[col.source];
    }
    return optimize(cost) == Outcome::Optimal;
  }

  std::vector<double> assignment() const {
    std::vector<double> x(problem_.num_variables(), 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& col = columns_[basis_[r]];
      if (col.kind == ColumnKind::Structural) x[col.source] += col.sign * rhs(r);
    }
    return x;
  }

 private:
  enum class Outcome { Optimal, Unbounded };

  double& at(std::size_t r, std::size_t k) { return cells_[r * width_ + k]; }
  double at(std::size_t r, std::size_t k) const { return cells_[r * width_ + k]; }
  double& rhs(std::size_t r) { return cells_[r * width_ + width_ - 1]; }
  double rhs(std::size_t r) const { return cells_[r * width_ + width_ - 1]; }

  double objective_value(const std::vector<double>& cost) const {
    double z = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) z += cost[basis_[r]] * rhs(r);
    return z;
  }

  std::vector<double> reduced_costs(const std::vector<double>& cost) const {
    std::vector<double> d(cost);
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t k = 0; k < columns_.size(); ++k) d[k] -= cb * at(r, k);
    }
    return d;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t k = 0; k < width_; ++k) at(pr, k) /= p;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < width_; ++k) at(r, k) -= f * at(pr, k);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
    if (++iterations_ > kIterationCap) throw NumericalError("simplex iteration cap exceeded");
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width_),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width_));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Minimum-ratio row for entering column pc, or nullopt. `tiny` is set when
  // the column has positive entries that all sit at or below the pivot floor.
  std::optional<std::size_t> ratio_test(std::size_t pc, bool bland, bool& tiny) const {
    std::optional<std::size_t> best;
    double best_ratio = std::numeric_limits<double>::infinity();
    tiny = false;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double a = at(r, pc);
      if (a <= 0.0) continue;
      if (a <= kPivotFloor) {
        tiny = true;
        continue;
      }
      const double ratio = std::max(rhs(r), 0.0) / a;
      if (!best || ratio < best_ratio) {
        best = r;
        best_ratio = ratio;
        continue;
      }
      if (ratio == best_ratio) {
        const bool better = bland ? basis_[r] < basis_[*best] : a > at(*best, pc);
        if (better) best = r;
      }
    }
    if (best) tiny = false;
    return best;
  }

  Outcome optimize(const std::vector<double>& cost) {
    bool bland = false;
    std::size_t degenerate_streak = 0;
    for (;;) {
      const auto d = reduced_costs(cost);
      std::vector<std::size_t> candidates;
      for (std::size_t k = 0; k < columns_.size(); ++k)
        if (!barred_[k] && d[k] < -kReducedCostTolerance) candidates.push_back(k);
      if (candidates.empty()) return Outcome::Optimal;
      if (!bland) {
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
      }

      bool pivoted = false;
      for (std::size_t pc : candidates) {
        bool tiny = false;
        const auto pr = ratio_test(pc, bland, tiny);
        if (!pr) {
          if (!tiny) return Outcome::Unbounded;
          continue;
        }
        const bool degenerate = rhs(*pr) <= kFeasibilityTolerance * 1e-3;
        pivot(*pr, pc);
        degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
        if (degenerate_streak >= kDegenerateStreakLimit) bland = true;
        pivoted = true;
        break;
      }
      if (!pivoted) throw NumericalError("no admissible pivot above the pivot floor");
    }
  }

  const LpProblem& problem_;
  std::vector<Column> columns_;
  std::vector<bool> barred_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::size_t iterations_ = 0;
};

double row_activity(const Constraint& c, std::span<const double> x) {
  double lhs = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
  return lhs;
}

}  // namespace

LpSolution solve(const LpProblem& problem) {
  problem.validate();
  Tableau t(problem);
  LpSolution out;

  out.phase_one_residual = t.phase_one();
  if (out.phase_one_residual > kFeasibilityTolerance) {
    out.status = Status::Infeasible;
    out.iterations = t.iterations();
    return out;
  }
  t.drive_out_artificials();
  const bool bounded = t.phase_two();
  out.iterations = t.iterations();
  if (!bounded) {
    out.status = Status::Unbounded;
    return out;
  }

  out.status = Status::Optimal;
  out.assignment = t.assignment();
  out.optimum = 0.0;
  for (std::size_t j = 0; j < problem.num_variables(); ++j) out.optimum += problem.objective[j] * out.assignment[j];

  if (const auto v = check_feasibility(problem, out.assignment); !v.empty()) {
    throw NumericalError("simplex solution violates " + std::to_string(v.size()) + " constraint(s)");
  }
  return out;
}

std::vector<Violation> check_feasibility(const LpProblem& problem, std::span<const double> assignment) {
  if (assignment.size() != problem.num_variables()) {
    throw ValidationError("assignment length differs from the number of LP variables");
  }
  std::vector<Violation> out;
  for (std::size_t r = 0; r < problem.constraints.size(); ++r) {
    const auto& c = problem.constraints[r];
    const double lhs = row_activity(c, assignment);
    double amount = 0.0;
    switch (c.relation) {
      case Relation::LessEqual: amount = lhs - c.rhs; break;
      case Relation::GreaterEqual: amount = c.rhs - lhs; break;
      case Relation::Equal: amount = std::abs(lhs - c.rhs) > kFeasibilityTolerance ? lhs - c.rhs : 0.0; break;
    }
    if (c.relation == Relation::Equal ? amount != 0.0 : amount > kFeasibilityTolerance) {
      out.push_back({Violation::Kind::Row, r, c.name, amount});
    }
  }
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (problem.domains[j] == Domain::NonNegative && assignment[j] < -kFeasibilityTolerance) {
      out.push_back({Violation::Kind::Bound, j, problem.variable_name(j), -assignment[j]});
    }
  }
  return out;
}

namespace {

void write_linear(std::ostringstream& os, const LpProblem& p, const std::vector<double>& coef) {
  bool first = true;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    const double a = coef[j];
    if (a == 0.0) continue;
    if (first) {
      if (a < 0.0) os << "- ";
    } else {
      os << (a < 0.0 ? " - " : " + ");
    }
    const double mag = std::abs(a);
    if (mag != 1.0) os << mag << " ";
    os << p.variable_name(j);
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

std::string to_lp_text(const LpProblem& p) {
  std::ostringstream os;
  os.precision(10);
  os << "Minimize\n obj: ";
  write_linear(os, p, p.objective);
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    const auto& c = p.constraints[r];
    os << " " << (c.name.empty() ? "c" + std::to_string(r + 1) : c.name) << ": ";
    write_linear(os, p, c.coefficients);
    switch (c.relation) {
      case Relation::LessEqual: os << " <= "; break;
      case Relation::GreaterEqual: os << " >= "; break;
      case Relation::Equal: os << " = "; break;
    }
    os << c.rhs << "\n";
  }
  os << "Bounds\n";
  for (std::size_t j = 0; j < p.num_variables(); ++j) {
    os << " " << p.variable_name(j) << (p.domains[j] == Domain::Free ? " free" : " >= 0") << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace pcmeff::lp
