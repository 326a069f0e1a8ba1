#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcmeff/efficiency.hpp"
#include "pcmeff/pcm.hpp"

namespace pcmeff {

inline constexpr std::size_t kMaxRequestBytes = 64 * 1024;
inline constexpr std::size_t kMaxItems = 50;

enum class WeightMethod { Eigenvector, GeometricMean, Custom };

const char* to_string(WeightMethod m) noexcept;
/// Throws ValidationError for unknown names.
WeightMethod weight_method_from_string(std::string_view name);

struct AnalysisRequest {
  PairwiseComparisonMatrix matrix;
  WeightMethod method = WeightMethod::Eigenvector;
  std::optional<WeightVector> custom_weights;
  Tolerances tolerances;
};

/// Accepts {"matrix": {"n", "entries"} | [[...]], "method": "...",
/// "custom_weights": [...], "options": {"tau_eq", "eps_opt"}}.
/// Throws ParseError or ValidationError.
AnalysisRequest parse_analysis_request(const nlohmann::json& body);

/// Weight vector selected by the request's method.
WeightVector request_weights(const AnalysisRequest& req);

/// The report_v1 text produced for a request; the CLI and the service both
/// go through here, so identical inputs give identical bytes.
std::string analysis_report_text(const AnalysisRequest& req);

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Stateless request router:
///   GET  /api/v1/health
///   POST /api/v1/analyze | /api/v1/dominate | /api/v1/weights
HttpResponse handle_request(std::string_view method, std::string_view path, std::string_view body);

/// Thin cpp-httplib front end over handle_request.
class ApiServer {
 public:
  ApiServer();
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds and serves until the process is stopped. Returns false if the port
/// could not be bound.
bool http_serve(int port, const std::string& host = "0.0.0.0");

}  // namespace pcmeff
