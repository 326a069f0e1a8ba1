#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcmeff/pcm.hpp"

namespace pcmeff {

/// Relative guard band used to call a ratio equal to its matrix entry.
inline constexpr double kEqualityTolerance = 1e-9;

/// Arc i -> j means w_i / w_j >= a_ij. Both arcs of a pair are present when
/// the ratio matches a_ij within the guard band.
///
/// Every unordered pair {i, j}, i < j, is classified once from
/// q = (w_i / w_j) / a_ij so the two directions can never disagree:
///   |q - 1| <= tau   -> i <-> j
///   q > 1 + tau      -> i -> j
///   q < 1 - tau      -> j -> i
class DominanceDigraph {
 public:
  DominanceDigraph(std::size_t n, double tolerance);

  std::size_t size() const noexcept { return n_; }
  double tolerance() const noexcept { return tolerance_; }
  bool has_arc(std::size_t from, std::size_t to) const { return adj_[from * n_ + to]; }
  bool bidirected(std::size_t i, std::size_t j) const { return has_arc(i, j) && has_arc(j, i); }

  /// Arcs in lexicographic (from, to) order, 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;
  std::vector<std::size_t> outdegrees() const;

  /// Pairs (i < j) whose classification lies outside the guard band but
  /// within ten times of it: |q - 1| in (tau, 10 tau].
  const std::vector<std::pair<std::size_t, std::size_t>>& near_threshold_pairs() const noexcept {
    return near_threshold_;
  }

  void add_arc(std::size_t from, std::size_t to) { adj_[from * n_ + to] = true; }
  void mark_near_threshold(std::size_t i, std::size_t j) { near_threshold_.emplace_back(i, j); }

 private:
  std::size_t n_;
  double tolerance_;
  std::vector<bool> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> near_threshold_;
};

struct GraphVerdict {
  bool strongly_connected = false;
  /// Strongly connected components in reverse topological order of the
  /// condensation (sink components first). Nodes sorted within a block.
  std::vector<std::vector<std::size_t>> scc_partition;
  std::vector<std::size_t> outdegrees;
  bool acyclic_tournament = false;
  /// Nodes by descending outdegree; present only for the acyclic tournament.
  std::optional<std::vector<std::size_t>> topological_order;
};

struct TournamentCheck {
  bool acyclic_tournament = false;
  std::optional<std::vector<std::size_t>> order;
};

DominanceDigraph build_digraph(const PairwiseComparisonMatrix& m, const WeightVector& w,
                               double tau_eq = kEqualityTolerance);

GraphVerdict strongly_connected(const DominanceDigraph& g);

/// Outdegree test: no bidirected pair and outdegrees {0, 1, ..., n-1}.
TournamentCheck is_acyclic_tournament(const DominanceDigraph& g);

/// DOT text, nodes labelled 1..n, one edge per arc. Both arcs of a
/// bidirected pair carry `style=dashed`.
std::string to_dot(const DominanceDigraph& g);

}  // namespace pcmeff
