#include "pcmeff/service.hpp"

#include <cmath>

#include <httplib.h>

#include "pcmeff/errors.hpp"
#include "pcmeff/matrix_io.hpp"
#include "pcmeff/report_json.hpp"

namespace pcmeff {

namespace {

using nlohmann::json;

HttpResponse json_response(int status, const json& body) { return {status, body.dump(2) + "\n"}; }

HttpResponse error_response(int status, std::string_view kind, const std::vector<std::string>& details) {
  return json_response(status, {{"error", kind}, {"details", details}});
}

double positive_option(const json& options, const char* key, double fallback) {
  if (!options.contains(key)) return fallback;
  const auto& v = options.at(key);
  if (!v.is_number()) throw ValidationError(std::string("option ") + key + " must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError(std::string("option ") + key + " must be positive");
  return x;
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

HttpResponse analyze_endpoint(const json& body) {
  return {200, analysis_report_text(parse_analysis_request(body))};
}

HttpResponse dominate_endpoint(const json& body) {
  const auto req = parse_analysis_request(body);
  const auto w = request_weights(req);
  const auto report = test_efficiency(req.matrix, w, req.tolerances);
  const auto& t = *report.efficiency;
  json certificate = json::array();
  for (const auto& r : t.certificate) {
    certificate.push_back({{"i", r.i + 1}, {"j", r.j + 1}, {"old_residual", r.old_residual}, {"new_residual", r.new_residual}});
  }
  return json_response(200, {
                                {"schema", kReportSchema},
                                {"method", to_string(req.method)},
                                {"verdict", to_string(t.verdict)},
                                {"lp_optimum", t.lp_optimum},
                                {"weights", vector_json(w)},
                                {"dominator", t.dominator ? vector_json(*t.dominator) : json(nullptr)},
                                {"dominator_aligned", t.dominator ? vector_json(align_to(*t.dominator, w)) : json(nullptr)},
                                {"certificate", std::move(certificate)},
                            });
}

HttpResponse weights_endpoint(const json& body) {
  const auto req = parse_analysis_request(body);
  if (req.method == WeightMethod::Custom) throw ValidationError("weights endpoint needs eigenvector or geometric_mean");
  json lambda = nullptr;
  std::optional<WeightVector> w;
  if (req.method == WeightMethod::Eigenvector) {
    auto eig = principal_eigenvector(req.matrix);
    lambda = eig.lambda_max;
    w = std::move(eig.vector);
  } else {
    w = geometric_mean_vector(req.matrix);
  }
  return json_response(200, {{"method", to_string(req.method)},
                             {"weights", vector_json(*w)},
                             {"lambda_max", lambda},
                             {"consistent", is_consistent(req.matrix, 1e-9)}});
}

}  // namespace

const char* to_string(WeightMethod m) noexcept {
  switch (m) {
    case WeightMethod::Eigenvector: return "eigenvector";
    case WeightMethod::GeometricMean: return "geometric_mean";
    case WeightMethod::Custom: return "custom";
  }
  return "eigenvector";
}

WeightMethod weight_method_from_string(std::string_view name) {
  if (name == "eigenvector") return WeightMethod::Eigenvector;
  if (name == "geometric_mean") return WeightMethod::GeometricMean;
  if (name == "custom") return WeightMethod::Custom;
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

AnalysisRequest parse_analysis_request(const json& body) {
  if (!body.is_object() || !body.contains("matrix")) throw ValidationError("request must be an object with \"matrix\"");
  json matrix = body.at("matrix");
  if (matrix.is_array()) matrix = json{{"entries", matrix}};
  if (matrix.is_object() && matrix.contains("entries") && matrix.at("entries").is_array() &&
      matrix.at("entries").size() > kMaxItems) {
    throw ValidationError("matrix size exceeds the limit of " + std::to_string(kMaxItems));
  }

  AnalysisRequest req{matrix_from_json(matrix), WeightMethod::Eigenvector, std::nullopt, {}};
  if (body.contains("method")) {
    if (!body.at("method").is_string()) throw ValidationError("\"method\" must be a string");
    req.method = weight_method_from_string(body.at("method").get<std::string>());
  }
  if (req.method == WeightMethod::Custom) {
    if (!body.contains("custom_weights")) throw ValidationError("method custom needs \"custom_weights\"");
    auto w = parse_weights(body.at("custom_weights").dump(), MatrixFormat::Json);
    if (w.size() != req.matrix.size()) {
      throw ValidationError("custom_weights has " + std::to_string(w.size()) + " entries, expected " +
                            std::to_string(req.matrix.size()));
    }
    req.custom_weights = std::move(w);
  }
  if (body.contains("options")) {
    const auto& options = body.at("options");
    if (!options.is_object()) throw ValidationError("\"options\" must be an object");
    req.tolerances.tau_eq = positive_option(options, "tau_eq", req.tolerances.tau_eq);
    req.tolerances.eps_opt = positive_option(options, "eps_opt", req.tolerances.eps_opt);
  }
  return req;
}

WeightVector request_weights(const AnalysisRequest& req) {
  switch (req.method) {
    case WeightMethod::Eigenvector: return principal_eigenvector(req.matrix).vector;
    case WeightMethod::GeometricMean: return geometric_mean_vector(req.matrix);
    case WeightMethod::Custom: return *req.custom_weights;
  }
  throw ValidationError("unknown method");
}

std::string analysis_report_text(const AnalysisRequest& req) {
  const auto w = request_weights(req);
  return report_json_text(req.matrix, analyze(req.matrix, w, req.tolerances), to_string(req.method));
}

HttpResponse handle_request(std::string_view method, std::string_view path, std::string_view body) {
  if (path == "/api/v1/health") {
    if (method != "GET") return error_response(405, "method_not_allowed", {"use GET"});
    return json_response(200, {{"status", "ok"}, {"version", PCMEFF_VERSION}});
  }

  using Endpoint = HttpResponse (*)(const json&);
  Endpoint endpoint = nullptr;
  if (path == "/api/v1/analyze") endpoint = analyze_endpoint;
  else if (path == "/api/v1/dominate") endpoint = dominate_endpoint;
  else if (path == "/api/v1/weights") endpoint = weights_endpoint;
  if (endpoint == nullptr) return error_response(404, "not_found", {std::string(path)});
  if (method != "POST") return error_response(405, "method_not_allowed", {"use POST"});
  if (body.size() > kMaxRequestBytes) {
    return error_response(413, "payload_too_large", {"request body exceeds " + std::to_string(kMaxRequestBytes) + " bytes"});
  }

  try {
    return endpoint(parse_body(body));
  } catch (const ParseError& e) {
    return error_response(400, "parse", {e.what()});
  } catch (const ValidationError& e) {
    return error_response(400, "validation", e.details());
  } catch (const VerdictConflict& e) {
    return json_response(422, {{"error", "verdict_conflict"},
                               {"test", e.test()},
                               {"lp_optimum", e.lp_optimum()},
                               {"lp_says_efficient", e.lp_positive()},
                               {"graph_says_efficient", e.graph_positive()},
                               {"details", {e.what()}}});
  } catch (const Error& e) {
    return error_response(500, "numerical", {e.what()});
  }
}

struct ApiServer::Impl {
  httplib::Server server;
};

ApiServer::ApiServer() : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  s.set_payload_max_length(kMaxRequestBytes);
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    const auto out = handle_request(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  s.Get(R"(/api/v1/.*)", forward);
  s.Post(R"(/api/v1/.*)", forward);
  // Bodies over the payload cap never reach the handlers.
  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.status == 413) {
      res.set_content(
          json{{"error", "payload_too_large"}, {"details", {"request body exceeds the size cap"}}}.dump(2) + "\n",
          "application/json");
    }
  });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::listen() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

bool http_serve(int port, const std::string& host) {
  ApiServer server;
  if (server.bind(host, port) < 0) return false;
  return server.listen();
}

}  // namespace pcmeff
