#include "pcmeff/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pcmeff/errors.hpp"

namespace pcmeff {

namespace {

void require_same_size(const PairwiseComparisonMatrix& m, const WeightVector& w) {
  if (w.size() != m.size()) {
    throw ValidationError("weight vector has " + std::to_string(w.size()) + " entries, matrix has size " +
                          std::to_string(m.size()));
  }
}

std::string pair_label(const IndexPair& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

std::vector<double> unit_row(std::size_t width) { return std::vector<double>(width, 0.0); }

// Rows shared by both LPs: for (i, j) in the overshoot set,
//   y_j - y_i <= -b_ij        (stay on or above a_ij)
//   y_i - y_j + s <= v_i - v_j (move down by at least s)
void add_overshoot_rows(lp::LpProblem& p, const PairwiseComparisonMatrix& m, const WeightVector& w,
                        const IndexPair& pair, std::size_t s_column) {
  const auto [i, j] = pair;
  const std::size_t width = p.num_variables();
  const std::string tag = std::to_string(i + 1) + "_" + std::to_string(j + 1);

  auto stay = unit_row(width);
  stay[j] = 1.0;
  stay[i] = -1.0;
  p.constraints.push_back({std::move(stay), lp::Relation::LessEqual, -std::log(m(i, j)), "floor_" + tag});

  auto move = unit_row(width);
  move[i] = 1.0;
  move[j] = -1.0;
  move[s_column] = 1.0;
  p.constraints.push_back(
      {std::move(move), lp::Relation::LessEqual, std::log(w[i]) - std::log(w[j]), "gain_" + tag});
}

void add_normalization_row(lp::LpProblem& p) {
  auto row = unit_row(p.num_variables());
  row[0] = 1.0;
  p.constraints.push_back({std::move(row), lp::Relation::Equal, 0.0, "anchor"});
}

lp::LpProblem skeleton(std::size_t n, std::size_t extra) {
  lp::LpProblem p;
  p.objective.assign(n + extra, 0.0);
  p.domains.assign(n, lp::Domain::Free);
  p.domains.resize(n + extra, lp::Domain::NonNegative);
  for (std::size_t k = 0; k < n; ++k) p.variable_names.push_back("y" + std::to_string(k + 1));
  return p;
}

WeightVector exp_of_prefix(const std::vector<double>& y, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = std::exp(y[k]);
  return WeightVector::sum_one(std::move(x));
}

lp::LpSolution solve_or_throw(const lp::LpProblem& p, const char* which) {
  auto sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal) {
    throw NumericalError(std::string(which) + " LP ended " + lp::to_string(sol.status) +
                         " although it is feasible and bounded by construction");
  }
  return sol;
}

std::string fixed(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

EfficiencyReport empty_report(const PairwiseComparisonMatrix& m, const WeightVector& w, const Tolerances& tol) {
  require_same_size(m, w);
  return EfficiencyReport{m.size(),          w, tol, index_sets(m, w, tol.tau_eq), build_digraph(m, w, tol.tau_eq),
                          std::nullopt, std::nullopt, {}};
}

EfficiencyTest run_efficiency(const PairwiseComparisonMatrix& m, const WeightVector& w, const IndexSets& sets,
                              const DominanceDigraph& g, const Tolerances& tol, std::vector<std::string>& log) {
  EfficiencyTest t;
  t.graph = strongly_connected(g);

  if (sets.overshoot.empty()) {
    log.push_back("efficiency: overshoot set empty, w reproduces the matrix; LP skipped");
    if (!t.graph.strongly_connected) {
      throw VerdictConflict("efficiency", 0.0, true, false,
                            "empty overshoot set but the digraph is not strongly connected");
    }
    t.verdict = Verdict::Efficient;
    return t;
  }

  const auto problem = build_efficiency_lp(m, w, sets);
  const auto sol = solve_or_throw(problem, "efficiency");
  t.lp_solved = true;
  t.lp_optimum = sol.optimum;
  t.lp_iterations = sol.iterations;
  log.push_back("efficiency: LP with " + std::to_string(problem.constraints.size()) + " rows solved, optimum " +
                fixed(sol.optimum));

  if (sol.optimum > tol.eps_opt) {
    throw NumericalError("efficiency LP optimum " + fixed(sol.optimum) + " exceeds zero");
  }
  const bool lp_efficient = sol.optimum >= -tol.eps_opt;
  log.push_back(std::string("efficiency: digraph ") +
                (t.graph.strongly_connected ? "strongly connected" : "not strongly connected") + " (" +
                std::to_string(t.graph.scc_partition.size()) + " components)");
  if (lp_efficient != t.graph.strongly_connected) {
    throw VerdictConflict("efficiency", sol.optimum, lp_efficient, t.graph.strongly_connected,
                          "efficiency LP optimum " + fixed(sol.optimum) + " disagrees with the digraph test");
  }
  if (lp_efficient) {
    t.verdict = Verdict::Efficient;
    return t;
  }

  t.verdict = Verdict::Inefficient;
  auto dominator = exp_of_prefix(sol.assignment, m.size());

  // The extracted vector must itself be efficient and dominate w internally.
  const auto own = strongly_connected(build_digraph(m, dominator, tol.tau_eq));
  if (!own.strongly_connected) {
    throw VerdictConflict("dominator_check", sol.optimum, false, false,
                          "extracted dominator is not efficient by its own digraph");
  }
  const auto rel = dominates(m, dominator, w, tol.tau_eq);
  t.certificate = dominance_certificate(m, dominator, w, tol.tau_eq);
  if (!rel.internal || t.certificate.empty()) {
    throw VerdictConflict("dominator_check", sol.optimum, false, false,
                          "extracted dominator does not dominate w internally");
  }
  log.push_back("efficiency: dominator verified efficient and internally dominating (" +
                std::to_string(t.certificate.size()) + " improved pairs)");
  t.dominator = std::move(dominator);
  return t;
}

WeakEfficiencyTest run_weak(const PairwiseComparisonMatrix& m, const WeightVector& w, const IndexSets& sets,
                            const DominanceDigraph& g, const Tolerances& tol, std::vector<std::string>& log) {
  WeakEfficiencyTest t;
  const auto tournament = is_acyclic_tournament(g);
  t.acyclic_tournament = tournament.acyclic_tournament;

  if (!sets.equal.empty()) {
    log.push_back("weak: ratio " + pair_label(sets.equal.front()) +
                  " matches its entry, w is weakly efficient; LP skipped");
    if (t.acyclic_tournament) {
      throw VerdictConflict("weak_efficiency", 0.0, true, false, "equality witness inside an acyclic tournament");
    }
    t.verdict = WeakVerdict::WeaklyEfficient;
    return t;
  }

  const auto problem = build_weak_lp(m, w, sets);
  const auto sol = solve_or_throw(problem, "weak-efficiency");
  t.lp_solved = true;
  t.lp_optimum = sol.optimum;
  t.lp_iterations = sol.iterations;
  log.push_back("weak: LP with " + std::to_string(problem.constraints.size()) + " rows solved, optimum " +
                fixed(sol.optimum));

  if (sol.optimum > tol.eps_opt) {
    throw NumericalError("weak-efficiency LP optimum " + fixed(sol.optimum) + " exceeds zero");
  }
  const bool lp_weak = sol.optimum >= -tol.eps_opt;
  log.push_back(std::string("weak: digraph ") + (t.acyclic_tournament ? "is" : "is not") + " the acyclic tournament");
  if (lp_weak == t.acyclic_tournament) {
    throw VerdictConflict("weak_efficiency", sol.optimum, lp_weak, !t.acyclic_tournament,
                          "weak-efficiency LP optimum " + fixed(sol.optimum) + " disagrees with the tournament test");
  }
  if (lp_weak) {
    t.verdict = WeakVerdict::WeaklyEfficient;
    return t;
  }

  t.verdict = WeakVerdict::StronglyInefficient;
  auto strict = exp_of_prefix(sol.assignment, m.size());
  if (!dominates(m, strict, w, tol.tau_eq).strong) {
    throw VerdictConflict("dominator_check", sol.optimum, false, false,
                          "weak LP vector does not strictly dominate w");
  }
  t.tournament_dominator = acyclic_dominator(m, w, *tournament.order).normalized_sum_one();
  log.push_back("weak: multiplier dominator constructed along the tournament order");

  // Chain into the efficiency test so the returned dominator is efficient.
  std::vector<std::string> inner;
  const auto chained = run_efficiency(m, strict, index_sets(m, strict, tol.tau_eq),
                                      build_digraph(m, strict, tol.tau_eq), tol, inner);
  for (auto& line : inner) log.push_back("weak/chain " + line);
  t.dominator = chained.dominator ? *chained.dominator : strict;
  t.strict_dominator = std::move(strict);
  t.certificate = dominance_certificate(m, *t.dominator, w, tol.tau_eq);
  return t;
}

}  // namespace

const char* to_string(Verdict v) noexcept { return v == Verdict::Efficient ? "efficient" : "inefficient"; }

const char* to_string(WeakVerdict v) noexcept {
  return v == WeakVerdict::WeaklyEfficient ? "weakly_efficient" : "strongly_inefficient";
}

const char* to_string(DominanceKind k) noexcept {
  switch (k) {
    case DominanceKind::None: return "none";
    case DominanceKind::Dominates: return "dominates";
    case DominanceKind::DominatesInternally: return "dominates_internally";
    case DominanceKind::DominatesStrongly: return "dominates_strongly";
  }
  return "none";
}

IndexSets index_sets(const PairwiseComparisonMatrix& m, const WeightVector& w, double tau_eq) {
  require_same_size(m, w);
  // Classification matches build_digraph: one decision per unordered pair.
  const auto g = build_digraph(m, w, tau_eq);
  IndexSets sets;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.bidirected(i, j)) {
        if (i < j) sets.equal.emplace_back(i, j);
      } else if (g.has_arc(i, j)) {
        sets.overshoot.emplace_back(i, j);
      }
    }
  }
  return sets;
}

lp::LpProblem build_efficiency_lp(const PairwiseComparisonMatrix& m, const WeightVector& w, const IndexSets& sets) {
  require_same_size(m, w);
  if (sets.overshoot.empty()) throw ConsistentInput("overshoot set is empty; w is efficient");
  const std::size_t n = m.size();

  auto p = skeleton(n, sets.overshoot.size());
  for (std::size_t k = 0; k < sets.overshoot.size(); ++k) {
    const auto& pair = sets.overshoot[k];
    p.objective[n + k] = -1.0;
    p.variable_names.push_back("s" + std::to_string(pair.first + 1) + "_" + std::to_string(pair.second + 1));
    add_overshoot_rows(p, m, w, pair, n + k);
  }
  for (const auto& [i, j] : sets.equal) {
    auto row = unit_row(p.num_variables());
    row[i] = 1.0;
    row[j] = -1.0;
    p.constraints.push_back({std::move(row), lp::Relation::Equal, std::log(m(i, j)),
                             "tie_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
  }
  add_normalization_row(p);
  return p;
}

lp::LpProblem build_weak_lp(const PairwiseComparisonMatrix& m, const WeightVector& w, const IndexSets& sets) {
  require_same_size(m, w);
  if (!sets.equal.empty()) {
    throw EqualityWitness("ratio " + pair_label(sets.equal.front()) + " matches its entry; w is weakly efficient");
  }
  const std::size_t n = m.size();
  auto p = skeleton(n, 1);
  p.objective[n] = -1.0;
  p.variable_names.push_back("s");
  for (const auto& pair : sets.overshoot) add_overshoot_rows(p, m, w, pair, n);
  add_normalization_row(p);
  return p;
}

const std::optional<WeightVector>& EfficiencyReport::dominator() const {
  static const std::optional<WeightVector> none;
  if (efficiency && efficiency->dominator) return efficiency->dominator;
  if (weak && weak->dominator) return weak->dominator;
  return none;
}

EfficiencyReport test_efficiency(const PairwiseComparisonMatrix& m, const WeightVector& w, const Tolerances& tol) {
  auto report = empty_report(m, w, tol);
  report.efficiency = run_efficiency(m, w, report.sets, report.digraph, tol, report.provenance);
  return report;
}

EfficiencyReport test_weak_efficiency(const PairwiseComparisonMatrix& m, const WeightVector& w,
                                      const Tolerances& tol) {
  auto report = empty_report(m, w, tol);
  report.weak = run_weak(m, w, report.sets, report.digraph, tol, report.provenance);
  return report;
}

EfficiencyReport analyze(const PairwiseComparisonMatrix& m, const WeightVector& w, const Tolerances& tol) {
  auto report = empty_report(m, w, tol);
  report.efficiency = run_efficiency(m, w, report.sets, report.digraph, tol, report.provenance);
  report.weak = run_weak(m, w, report.sets, report.digraph, tol, report.provenance);
  return report;
}

WeightVector acyclic_dominator(const PairwiseComparisonMatrix& m, const WeightVector& w,
                               const std::vector<std::size_t>& order) {
  require_same_size(m, w);
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw PreconditionError("order is not a permutation of the items");
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw PreconditionError("order is not a permutation of the items");
    seen[v] = true;
  }

  // multiplier[k] belongs to position k (k >= 1).
  std::vector<double> multiplier(n, 1.0);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t col = order[k];
    double p = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t row = order[i];
      p = std::max(p, m(row, col) / (w[row] / w[col]));
    }
    if (!(p < 1.0)) {
      throw PreconditionError("multiplier at position " + std::to_string(k + 1) +
                              " is not below 1; w is not strongly inefficient along this order");
    }
    multiplier[k] = p;
  }

  std::vector<double> out(n);
  double tail = 1.0;  // product of multipliers after the current position
  for (std::size_t k = n; k-- > 0;) {
    out[order[k]] = w[order[k]] * tail;
    tail *= multiplier[k];
  }

  // The per-position multipliers only bound adjacent ratios from below. When
  // a longer product undershoots some a_kl, use one common rate t < 1 with
  // t^(l-k) >= a_kl / (w_k / w_l) for every earlier k and later l.
  bool holds = true;
  for (std::size_t k = 0; k < n && holds; ++k)
    for (std::size_t l = k + 1; l < n && holds; ++l)
      holds = out[order[k]] / out[order[l]] >= m(order[k], order[l]);
  if (holds) return WeightVector(std::move(out));

  double rate = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const double c = m(order[k], order[l]) / (w[order[k]] / w[order[l]]);
      rate = std::max(rate, std::pow(c, 1.0 / static_cast<double>(l - k)));
    }
  }
  for (std::size_t k = 0; k < n; ++k) out[order[k]] = w[order[k]] * std::pow(rate, static_cast<double>(n - 1 - k));
  return WeightVector(std::move(out));
}

DominanceRelation dominates(const PairwiseComparisonMatrix& m, const WeightVector& candidate,
                            const WeightVector& incumbent, double tau) {
  require_same_size(m, candidate);
  require_same_size(m, incumbent);
  const std::size_t n = m.size();

  bool plain_ok = true, plain_strict = false;
  bool internal_ok = true, internal_strict = false;
  bool strong_ok = true;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double a = m(i, j);
      const double r = incumbent[i] / incumbent[j];
      const double rc = candidate[i] / candidate[j];
      const double old_res = std::abs(r - a);
      const double new_res = std::abs(rc - a);
      const double slack = tau * a;

      if (new_res > old_res + slack) plain_ok = false;
      const bool improved = new_res < old_res - slack;
      plain_strict = plain_strict || improved;
      strong_ok = strong_ok && improved;

      const double q = r / a;
      const double qc = rc / a;
      if (std::abs(q - 1.0) <= tau) {
        if (std::abs(qc - 1.0) > tau) internal_ok = false;
      } else if (q > 1.0) {
        if (qc < 1.0 - tau || rc > r * (1.0 + tau)) internal_ok = false;
        if (rc < r * (1.0 - tau)) internal_strict = true;
      } else {
        if (qc > 1.0 + tau || rc < r * (1.0 - tau)) internal_ok = false;
        if (rc > r * (1.0 + tau)) internal_strict = true;
      }
    }
  }

  DominanceRelation rel;
  rel.plain = plain_ok && plain_strict;
  rel.internal = internal_ok && internal_strict;
  rel.strong = strong_ok;
  if (rel.strong)
    rel.kind = DominanceKind::DominatesStrongly;
  else if (rel.internal)
    rel.kind = DominanceKind::DominatesInternally;
  else if (rel.plain)
    rel.kind = DominanceKind::Dominates;
  return rel;
}

std::vector<CertificateRow> dominance_certificate(const PairwiseComparisonMatrix& m, const WeightVector& candidate,
                                                  const WeightVector& incumbent, double tau) {
  require_same_size(m, candidate);
  require_same_size(m, incumbent);
  const auto before = residuals(m, incumbent);
  const auto after = residuals(m, candidate);
  std::vector<CertificateRow> rows;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && after(i, j) < before(i, j) - tau * m(i, j)) rows.push_back({i, j, before(i, j), after(i, j)});
  return rows;
}

WeightVector align_to(const WeightVector& v, const WeightVector& ref) {
  if (v.size() != ref.size()) throw ValidationError("vectors to align differ in length");
  std::vector<double> log_ratio(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) log_ratio[i] = std::log(ref[i]) - std::log(v[i]);
  std::sort(log_ratio.begin(), log_ratio.end());
  const std::size_t mid = log_ratio.size() / 2;
  const double shift =
      log_ratio.size() % 2 == 1 ? log_ratio[mid] : 0.5 * (log_ratio[mid - 1] + log_ratio[mid]);
  return v.scaled(std::exp(shift));
}

}  // namespace pcmeff
