#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmeff/digraph.hpp"
#include "pcmeff/lp.hpp"
#include "pcmeff/pcm.hpp"

namespace pcmeff {

/// Absolute cut on the LP optimum between "zero" and "negative".
inline constexpr double kOptimumTolerance = 1e-7;

struct Tolerances {
  double tau_eq = kEqualityTolerance;
  double eps_opt = kOptimumTolerance;
};

using IndexPair = std::pair<std::size_t, std::size_t>;  // 0-based (i, j)

/// overshoot: ordered pairs with a_ij < w_i / w_j beyond the guard band.
/// equal:     pairs i < j with w_i / w_j = a_ij inside the guard band.
/// Both lists are in lexicographic order.
struct IndexSets {
  std::vector<IndexPair> overshoot;
  std::vector<IndexPair> equal;
};

IndexSets index_sets(const PairwiseComparisonMatrix& m, const WeightVector& w,
                     double tau_eq = kEqualityTolerance);

/// Log-domain LP whose optimum is 0 iff w is efficient.
/// Variables: y_1..y_n (free), then one s_ij >= 0 per overshoot pair.
/// Rows, per overshoot pair in order: y_j - y_i <= -log a_ij and
/// y_i - y_j + s_ij <= log w_i - log w_j; then y_i - y_j = log a_ij per
/// equal pair; finally y_1 = 0. Objective: minimize -sum s_ij.
/// Throws ConsistentInput when the overshoot set is empty.
lp::LpProblem build_efficiency_lp(const PairwiseComparisonMatrix& m, const WeightVector& w,
                                  const IndexSets& sets);

/// Same rows with a single shared s >= 0 and objective -s.
/// Throws EqualityWitness when the equal set is nonempty.
lp::LpProblem build_weak_lp(const PairwiseComparisonMatrix& m, const WeightVector& w,
                            const IndexSets& sets);

enum class Verdict { Efficient, Inefficient };
enum class WeakVerdict { WeaklyEfficient, StronglyInefficient };

const char* to_string(Verdict v) noexcept;
const char* to_string(WeakVerdict v) noexcept;

/// One ordered pair where the dominator strictly improves the residual.
struct CertificateRow {
  std::size_t i;  // 0-based
  std::size_t j;
  double old_residual;
  double new_residual;
};

struct EfficiencyTest {
  Verdict verdict = Verdict::Efficient;
  bool lp_solved = false;  // false when the overshoot set was empty
  double lp_optimum = 0.0;
  std::size_t lp_iterations = 0;
  GraphVerdict graph;
  std::optional<WeightVector> dominator;  // sum-one
  std::vector<CertificateRow> certificate;
};

struct WeakEfficiencyTest {
  WeakVerdict verdict = WeakVerdict::WeaklyEfficient;
  bool lp_solved = false;  // false when an equality witness exists
  double lp_optimum = 0.0;
  std::size_t lp_iterations = 0;
  bool acyclic_tournament = false;
  /// exp(y*) of the weak LP, sum-one; strictly dominates w.
  std::optional<WeightVector> strict_dominator;
  /// Efficient dominator reached by feeding strict_dominator to the
  /// efficiency test (equal to strict_dominator when that is efficient).
  std::optional<WeightVector> dominator;
  /// Constructive multiplier dominator along the tournament order.
  std::optional<WeightVector> tournament_dominator;
  std::vector<CertificateRow> certificate;
};

struct EfficiencyReport {
  std::size_t n = 0;
  WeightVector weights;
  Tolerances tolerances;
  IndexSets sets;
  DominanceDigraph digraph;
  std::optional<EfficiencyTest> efficiency;
  std::optional<WeakEfficiencyTest> weak;
  std::vector<std::string> provenance;

  /// The final efficient dominator, if any test produced one.
  const std::optional<WeightVector>& dominator() const;
};

/// Runs the efficiency LP and the strong-connectivity test and requires them
/// to agree. When w is inefficient the dominator is exp(y*) renormalized,
/// re-verified to be efficient by its own digraph.
/// Throws VerdictConflict on any disagreement.
EfficiencyReport test_efficiency(const PairwiseComparisonMatrix& m, const WeightVector& w,
                                 const Tolerances& tol = {});

/// Runs the weak-efficiency LP and the acyclic-tournament test. A strictly
/// dominating exp(y*) is then passed through test_efficiency and replaced by
/// its efficient dominator if needed. Throws VerdictConflict.
EfficiencyReport test_weak_efficiency(const PairwiseComparisonMatrix& m, const WeightVector& w,
                                      const Tolerances& tol = {});

/// Both tests in one report.
EfficiencyReport analyze(const PairwiseComparisonMatrix& m, const WeightVector& w, const Tolerances& tol = {});

/// Multiplier construction for a strongly inefficient w whose digraph is the
/// acyclic tournament along `order` (order[0] beats everyone). Positions are
/// relabelled by `order`; p_k = max over earlier positions i of
/// a_ik / (w_i / w_k) and w'_k = w_k * prod of p over later positions.
/// If that w' leaves some a_kl above w'_k / w'_l (possible for non-adjacent
/// positions), w'_k = w_k * t^(n-1-k) is used instead, with t the largest
/// (a_kl / (w_k / w_l))^(1/(l-k)). Either way a_kl <= w'_k / w'_l < w_k / w_l
/// for earlier k and later l. Returns the unnormalized w'. Throws
/// PreconditionError if some p_k >= 1.
WeightVector acyclic_dominator(const PairwiseComparisonMatrix& m, const WeightVector& w,
                               const std::vector<std::size_t>& order);

enum class DominanceKind { None, Dominates, DominatesInternally, DominatesStrongly };

const char* to_string(DominanceKind k) noexcept;

/// All three relations of candidate over incumbent; `kind` is the strongest
/// one that holds (strong, then internal, then plain).
struct DominanceRelation {
  DominanceKind kind = DominanceKind::None;
  bool plain = false;
  bool internal = false;
  bool strong = false;
};

/// Residual comparisons use a relative slack of `tau` on the matrix entry, so
/// ratios that agree to within rounding count as equal.
DominanceRelation dominates(const PairwiseComparisonMatrix& m, const WeightVector& candidate,
                            const WeightVector& incumbent, double tau = kEqualityTolerance);

/// Pairs where candidate's residual is strictly below incumbent's.
std::vector<CertificateRow> dominance_certificate(const PairwiseComparisonMatrix& m,
                                                  const WeightVector& candidate,
                                                  const WeightVector& incumbent,
                                                  double tau = kEqualityTolerance);

/// Rescales `v` by the factor that minimizes sum_i |log(c v_i) - log ref_i|
/// (the median ratio; the geometric mean of the two middle ratios for even
/// n). Used to print a dominator on the incumbent's scale.
WeightVector align_to(const WeightVector& v, const WeightVector& ref);

}  // namespace pcmeff
