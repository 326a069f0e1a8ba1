#include "pcmeff/report_json.hpp"

#include "pcmeff/digraph.hpp"

namespace pcmeff {

namespace {

using nlohmann::json;

json pairs_json(const std::vector<IndexPair>& pairs) {
  json out = json::array();
  for (const auto& [i, j] : pairs) out.push_back({i + 1, j + 1});
  return out;
}

json optional_vector(const std::optional<WeightVector>& w) { return w ? vector_json(*w) : json(nullptr); }

json certificate_json(const std::vector<CertificateRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"old_residual", r.old_residual}, {"new_residual", r.new_residual}});
  }
  return out;
}

json graph_json(const DominanceDigraph& g, const GraphVerdict& v) {
  json blocks = json::array();
  for (const auto& block : v.scc_partition) {
    json b = json::array();
    for (auto node : block) b.push_back(node + 1);
    blocks.push_back(std::move(b));
  }
  json order = nullptr;
  if (v.topological_order) {
    order = json::array();
    for (auto node : *v.topological_order) order.push_back(node + 1);
  }
  return {{"arcs", pairs_json(g.arcs())},
          {"strongly_connected", v.strongly_connected},
          {"scc_partition", std::move(blocks)},
          {"outdegrees", v.outdegrees},
          {"acyclic_tournament", v.acyclic_tournament},
          {"topological_order", std::move(order)},
          {"near_threshold_pairs", pairs_json(g.near_threshold_pairs())},
          {"tolerance", g.tolerance()},
          {"dot", to_dot(g)}};
}

json efficiency_json(const EfficiencyTest& t, const WeightVector& incumbent) {
  return {{"verdict", to_string(t.verdict)},
          {"lp_solved", t.lp_solved},
          {"lp_optimum", t.lp_optimum},
          {"lp_iterations", t.lp_iterations},
          {"dominator", optional_vector(t.dominator)},
          {"dominator_aligned", t.dominator ? vector_json(align_to(*t.dominator, incumbent)) : json(nullptr)},
          {"certificate", certificate_json(t.certificate)}};
}

json weak_json(const WeakEfficiencyTest& t, const WeightVector& incumbent) {
  return {{"verdict", to_string(t.verdict)},
          {"lp_solved", t.lp_solved},
          {"lp_optimum", t.lp_optimum},
          {"lp_iterations", t.lp_iterations},
          {"acyclic_tournament", t.acyclic_tournament},
          {"strict_dominator", optional_vector(t.strict_dominator)},
          {"tournament_dominator", optional_vector(t.tournament_dominator)},
          {"dominator", optional_vector(t.dominator)},
          {"dominator_aligned", t.dominator ? vector_json(align_to(*t.dominator, incumbent)) : json(nullptr)},
          {"certificate", certificate_json(t.certificate)}};
}

}  // namespace

json vector_json(const WeightVector& w) { return json(std::vector<double>(w.values().begin(), w.values().end())); }

json report_to_json(const PairwiseComparisonMatrix& m, const EfficiencyReport& report, std::string_view method) {
  const auto graph = strongly_connected(report.digraph);
  json doc = {
      {"schema", kReportSchema},
      {"n", report.n},
      {"method", method},
      {"matrix", m.entries().to_rows()},
      {"weights", vector_json(report.weights)},
      {"tolerances", {{"tau_eq", report.tolerances.tau_eq}, {"eps_opt", report.tolerances.eps_opt}}},
      {"index_sets", {{"I", pairs_json(report.sets.overshoot)}, {"J", pairs_json(report.sets.equal)}}},
      {"digraph", graph_json(report.digraph, graph)},
      {"efficiency", report.efficiency ? efficiency_json(*report.efficiency, report.weights) : json(nullptr)},
      {"weak_efficiency", report.weak ? weak_json(*report.weak, report.weights) : json(nullptr)},
      {"dominator", optional_vector(report.dominator())},
      {"provenance", report.provenance},
  };
  return doc;
}

std::string report_json_text(const PairwiseComparisonMatrix& m, const EfficiencyReport& report,
                             std::string_view method) {
  return report_to_json(m, report, method).dump(2) + "\n";
}

}  // namespace pcmeff
