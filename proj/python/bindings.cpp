#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcmeff/cli.hpp"
#include "pcmeff/efficiency.hpp"
#include "pcmeff/errors.hpp"
#include "pcmeff/random_lab.hpp"
#include "pcmeff/report_json.hpp"
#include "pcmeff/service.hpp"

namespace py = pybind11;
using namespace pcmeff;

namespace {

using Rows = std::vector<std::vector<double>>;

PairwiseComparisonMatrix to_matrix(const Rows& rows) { return PairwiseComparisonMatrix::from_rows(rows); }

std::vector<double> to_list(const WeightVector& w) { return {w.values().begin(), w.values().end()}; }

WeightVector pick_weights(const PairwiseComparisonMatrix& m, const std::optional<std::vector<double>>& weights,
                          const std::string& method) {
  if (weights) {
    if (weights->size() != m.size()) throw ValidationError("weight vector length does not match the matrix");
    return WeightVector(*weights);
  }
  if (method == "geometric_mean") return geometric_mean_vector(m);
  if (method == "eigenvector") return principal_eigenvector(m).vector;
  throw ValidationError("unknown method '" + method + "'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Efficiency analysis of weight vectors for pairwise comparison matrices";
  mod.attr("__version__") = PCMEFF_VERSION;

  static py::exception<Error> base_error(mod, "PcmError");
  py::register_exception<ValidationError>(mod, "ValidationError", base_error.ptr());
  py::register_exception<ParseError>(mod, "ParseError", base_error.ptr());
  py::register_exception<VerdictConflict>(mod, "VerdictConflict", base_error.ptr());

  mod.def(
      "principal_eigenvector",
      [](const Rows& rows) {
        const auto eig = principal_eigenvector(to_matrix(rows));
        return py::make_tuple(to_list(eig.vector), eig.lambda_max);
      },
      py::arg("matrix"));
  mod.def(
      "geometric_mean", [](const Rows& rows) { return to_list(geometric_mean_vector(to_matrix(rows))); },
      py::arg("matrix"));
  mod.def(
      "analyze_json",
      [](const Rows& rows, std::optional<std::vector<double>> weights, const std::string& method, double tau_eq,
         double eps_opt) {
        const auto m = to_matrix(rows);
        const auto w = pick_weights(m, weights, method);
        const auto report = analyze(m, w, {tau_eq, eps_opt});
        return report_json_text(m, report, weights ? "custom" : method);
      },
      py::arg("matrix"), py::arg("weights") = py::none(), py::arg("method") = "eigenvector",
      py::arg("tau_eq") = kEqualityTolerance, py::arg("eps_opt") = kOptimumTolerance);
  mod.def(
      "dominates",
      [](const Rows& rows, const std::vector<double>& candidate, const std::vector<double>& incumbent, double tau) {
        return std::string(to_string(dominates(to_matrix(rows), WeightVector(candidate), WeightVector(incumbent), tau).kind));
      },
      py::arg("matrix"), py::arg("candidate"), py::arg("incumbent"), py::arg("tau") = kEqualityTolerance);
  mod.def(
      "acyclic_dominator",
      [](const Rows& rows, const std::vector<double>& weights, const std::vector<std::size_t>& order) {
        return to_list(acyclic_dominator(to_matrix(rows), WeightVector(weights), order));
      },
      py::arg("matrix"), py::arg("weights"), py::arg("order"));
  mod.def(
      "generate",
      [](std::size_t n, const std::string& mode, std::uint64_t seed, double sigma) {
        return generate({n, generator_mode_from_string(mode), sigma, seed}).entries().to_rows();
      },
      py::arg("n"), py::arg("mode") = "saaty_discrete", py::arg("seed") = 0, py::arg("sigma") = kDefaultSigma);
  mod.def(
      "experiment_json",
      [](std::size_t n, const std::string& mode, std::size_t trials, std::uint64_t seed, double sigma) {
        return summary_json(run_experiment({n, generator_mode_from_string(mode), sigma, seed}, trials)).dump();
      },
      py::arg("n"), py::arg("mode") = "saaty_discrete", py::arg("trials") = 100, py::arg("seed") = 0,
      py::arg("sigma") = kDefaultSigma);
  mod.def(
      "handle_request",
      [](const std::string& method, const std::string& path, const std::string& body) {
        const auto r = handle_request(method, path, body);
        return py::make_tuple(r.status, r.body);
      },
      py::arg("method"), py::arg("path"), py::arg("body") = "");
  mod.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
