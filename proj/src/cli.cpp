#include "pcmeff/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcmeff/errors.hpp"
#include "pcmeff/matrix_io.hpp"
#include "pcmeff/random_lab.hpp"
#include "pcmeff/service.hpp"

namespace pcmeff {

namespace {

struct InputOptions {
  std::string matrix_path;
  std::string weights_path;
  std::string method = "eigenvector";
  double tau_eq = kEqualityTolerance;
  double eps_opt = kOptimumTolerance;
  bool json = false;
};

struct Printer {
  std::ostream& out;
  int precision = 6;

  std::string number(double x) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << x;
    return os.str();
  }

  std::string vector(const WeightVector& w) const {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) s += ", ";
      s += number(w[i]);
    }
    return s + "]";
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_json) {
  cmd->add_option("file", in.matrix_path, "matrix file (.csv or .json)")->required();
  auto* weights = cmd->add_option("--weights", in.weights_path, "weight vector file (.csv or .json)");
  cmd->add_option("--method", in.method, "weight method")
      ->check(CLI::IsMember({"eigenvector", "geometric_mean"}))
      ->excludes(weights);
  cmd->add_option("--tau-eq", in.tau_eq, "equality tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--eps-opt", in.eps_opt, "LP optimum tolerance")->check(CLI::PositiveNumber);
  if (with_json) cmd->add_flag("--json", in.json, "print the full JSON report");
}

AnalysisRequest load_request(const InputOptions& in) {
  AnalysisRequest req{read_matrix_file(in.matrix_path), WeightMethod::Eigenvector, std::nullopt, {}};
  req.tolerances = {in.tau_eq, in.eps_opt};
  if (!in.weights_path.empty()) {
    auto w = read_weights_file(in.weights_path);
    if (w.size() != req.matrix.size()) {
      throw ValidationError("weight vector has " + std::to_string(w.size()) + " entries, matrix has " +
                            std::to_string(req.matrix.size()));
    }
    req.method = WeightMethod::Custom;
    req.custom_weights = std::move(w);
  } else {
    req.method = weight_method_from_string(in.method);
  }
  return req;
}

void print_certificate(const Printer& p, const std::vector<CertificateRow>& rows) {
  for (const auto& r : rows) {
    p.out << "  (" << r.i + 1 << "," << r.j + 1 << ") residual " << p.number(r.old_residual) << " -> "
          << p.number(r.new_residual) << "\n";
  }
}

int cmd_weights(const Printer& p, const InputOptions& in) {
  const auto m = read_matrix_file(in.matrix_path);
  if (in.method == "geometric_mean") {
    p.out << "weights=" << p.vector(geometric_mean_vector(m)) << "\n";
  } else {
    const auto eig = principal_eigenvector(m);
    p.out << "weights=" << p.vector(eig.vector) << ", lambda_max=" << p.number(eig.lambda_max) << "\n";
  }
  return kExitOk;
}

int cmd_efficiency(const Printer& p, const InputOptions& in) {
  const auto req = load_request(in);
  if (in.json) {
    const auto text = analysis_report_text(req);
    p.out << text;
    return nlohmann::json::parse(text).at("efficiency").at("verdict") == "efficient" ? kExitOk : kExitInefficient;
  }
  const auto w = request_weights(req);
  const auto report = test_efficiency(req.matrix, w, req.tolerances);
  const auto& t = *report.efficiency;
  if (t.verdict == Verdict::Efficient) {
    p.out << "EFFICIENT\n";
    return kExitOk;
  }
  p.out << "INEFFICIENT, lp_optimum=" << p.number(t.lp_optimum)
        << ", dominator=" << p.vector(align_to(*t.dominator, w)) << "\n";
  return kExitInefficient;
}

int cmd_weak(const Printer& p, const InputOptions& in) {
  const auto req = load_request(in);
  if (in.json) {
    const auto text = analysis_report_text(req);
    p.out << text;
    return nlohmann::json::parse(text).at("weak_efficiency").at("verdict") == "weakly_efficient" ? kExitOk
                                                                                                 : kExitInefficient;
  }
  const auto w = request_weights(req);
  const auto report = test_weak_efficiency(req.matrix, w, req.tolerances);
  const auto& t = *report.weak;
  if (t.verdict == WeakVerdict::WeaklyEfficient) {
    p.out << "WEAKLY_EFFICIENT\n";
    return kExitOk;
  }
  p.out << "STRONGLY_INEFFICIENT, lp_optimum=" << p.number(t.lp_optimum)
        << ", dominator=" << p.vector(align_to(*t.dominator, w)) << "\n";
  return kExitInefficient;
}

int cmd_dominate(const Printer& p, const InputOptions& in) {
  const auto req = load_request(in);
  const auto w = request_weights(req);
  const auto report = test_efficiency(req.matrix, w, req.tolerances);
  const auto& t = *report.efficiency;
  if (!t.dominator) {
    p.out << "EFFICIENT, no dominating vector exists\n";
    return kExitOk;
  }
  p.out << "dominator=" << p.vector(align_to(*t.dominator, w)) << "\n";
  p.out << "dominator_sum_one=" << p.vector(*t.dominator) << "\n";
  p.out << "improved pairs:\n";
  print_certificate(p, t.certificate);
  return kExitInefficient;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Efficiency analysis of weight vectors for pairwise comparison matrices", "pcmeff"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PCMEFF_VERSION);

  int precision = 6;
  app.add_option("--precision", precision, "digits after the decimal point")
      ->check(CLI::Range(1, 17))
      ->configurable(false);

  InputOptions in;
  auto* weights = app.add_subcommand("weights", "compute a weight vector");
  weights->add_option("file", in.matrix_path, "matrix file (.csv or .json)")->required();
  weights->add_option("--method", in.method, "weight method")->check(CLI::IsMember({"eigenvector", "geometric_mean"}));

  auto* efficiency = app.add_subcommand("efficiency", "test Pareto efficiency of a weight vector");
  add_input_options(efficiency, in, true);
  auto* weak = app.add_subcommand("weak-efficiency", "test weak efficiency of a weight vector");
  add_input_options(weak, in, true);
  auto* dominate = app.add_subcommand("dominate", "print an efficient dominating vector");
  add_input_options(dominate, in, false);

  GeneratorSpec spec;
  std::string mode = "saaty_discrete";
  std::size_t trials = 100;
  std::string csv_path;
  auto* experiment = app.add_subcommand("experiment", "run a random matrix experiment");
  experiment->add_option("--n", spec.n, "matrix size")->required()->check(CLI::Range(3, 50));
  experiment->add_option("--mode", mode, "generator mode")
      ->check(CLI::IsMember({"saaty_discrete", "lognormal_perturbed_consistent", "saaty", "lognormal"}));
  experiment->add_option("--trials", trials, "number of matrices")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", spec.seed, "base seed");
  experiment->add_option("--sigma", spec.sigma, "log-scale noise for the lognormal mode")->check(CLI::NonNegativeNumber);
  experiment->add_option("--csv", csv_path, "write per-trial rows to this file");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "start the HTTP JSON service");
  serve->add_option("--port", port, "port to listen on")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "address to bind");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Printer p{out, precision};
  try {
    if (*weights) return cmd_weights(p, in);
    if (*efficiency) return cmd_efficiency(p, in);
    if (*weak) return cmd_weak(p, in);
    if (*dominate) return cmd_dominate(p, in);
    if (*experiment) {
      spec.mode = generator_mode_from_string(mode);
      const auto summary = run_experiment(spec, trials);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw ValidationError("cannot write " + csv_path);
        f << trials_csv(summary);
      }
      out << summary_json(summary).dump(2) << "\n";
      return summary.conflicts == 0 ? kExitOk : kExitError;
    }
    if (*serve) {
      ApiServer server;
      const int bound = server.bind(host, port);
      if (bound < 0) throw ValidationError("cannot bind " + host + ":" + std::to_string(port));
      err << "listening on http://" << host << ":" << bound << "\n";
      return server.listen() ? kExitOk : kExitError;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const VerdictConflict& e) {
    err << "error: verdict conflict in " << e.test() << ": " << e.what() << " (lp_optimum=" << e.lp_optimum()
        << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace pcmeff
