#include "pcmeff/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "pcmeff/errors.hpp"

namespace pcmeff {

DominanceDigraph::DominanceDigraph(std::size_t n, double tolerance)
    : n_(n), tolerance_(tolerance), adj_(n * n, false) {}

std::vector<std::pair<std::size_t, std::size_t>> DominanceDigraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_arc(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> DominanceDigraph::outdegrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_arc(i, j)) ++deg[i];
  return deg;
}

DominanceDigraph build_digraph(const PairwiseComparisonMatrix& m, const WeightVector& w, double tau_eq) {
  const std::size_t n = m.size();
  if (w.size() != n) throw ValidationError("weight vector length does not match the matrix");
  if (!(tau_eq >= 0.0)) throw ValidationError("equality tolerance must be nonnegative");

  DominanceDigraph g(n, tau_eq);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double q = (w[i] / w[j]) / m(i, j);
      const double dev = std::abs(q - 1.0);
      if (dev <= tau_eq) {
        g.add_arc(i, j);
        g.add_arc(j, i);
        continue;
      }
      if (dev <= 10.0 * tau_eq) g.mark_near_threshold(i, j);
      if (q > 1.0)
        g.add_arc(i, j);
      else
        g.add_arc(j, i);
    }
  }
  return g;
}

namespace {

// Tarjan's algorithm. Components are emitted as they are closed, which is
// reverse topological order of the condensation.
std::vector<std::vector<std::size_t>> tarjan_scc(const DominanceDigraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (!g.has_arc(v, u)) continue;
      if (index[u] == unvisited) {
        visit(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t u;
      do {
        u = stack.back();
        stack.pop_back();
        on_stack[u] = false;
        component.push_back(u);
      } while (u != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };

  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unvisited) visit(v);
  return components;
}

}  // namespace

TournamentCheck is_acyclic_tournament(const DominanceDigraph& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.bidirected(i, j)) return {};

  const auto deg = g.outdegrees();
  std::vector<bool> seen(n, false);
  for (std::size_t d : deg) {
    if (d >= n || seen[d]) return {};
    seen[d] = true;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  return {true, std::move(order)};
}

GraphVerdict strongly_connected(const DominanceDigraph& g) {
  GraphVerdict v;
  v.scc_partition = tarjan_scc(g);
  v.strongly_connected = v.scc_partition.size() == 1;
  v.outdegrees = g.outdegrees();
  auto t = is_acyclic_tournament(g);
  v.acyclic_tournament = t.acyclic_tournament;
  v.topological_order = std::move(t.order);
  return v;
}

std::string to_dot(const DominanceDigraph& g) {
  std::ostringstream os;
  os << "digraph dominance {\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i + 1 << ";\n";
  for (const auto& [from, to] : g.arcs()) {
    os << "  " << from + 1 << " -> " << to + 1;
    if (g.bidirected(from, to)) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pcmeff
