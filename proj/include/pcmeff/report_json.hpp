#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pcmeff/efficiency.hpp"
#include "pcmeff/pcm.hpp"

namespace pcmeff {

inline constexpr std::string_view kReportSchema = "report_v1";

/// Versioned report document shared by the CLI (--json) and the HTTP API.
/// Item indices are 1-based. Absent sections and vectors are null.
nlohmann::json report_to_json(const PairwiseComparisonMatrix& m, const EfficiencyReport& report,
                              std::string_view method);

/// Canonical text form: two-space indentation and a trailing newline.
std::string report_json_text(const PairwiseComparisonMatrix& m, const EfficiencyReport& report,
                             std::string_view method);

nlohmann::json vector_json(const WeightVector& w);

}  // namespace pcmeff
