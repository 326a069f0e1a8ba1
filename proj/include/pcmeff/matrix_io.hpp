#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcmeff/pcm.hpp"

namespace pcmeff {

enum class MatrixFormat { Csv, Json };

/// Parses one numeric literal: a decimal ("0.25", "4", "1e-3") or a fraction
/// "p/q" whose numerator and denominator are decimals. A fraction is divided
/// once, after both parts are read, so "1/7" rounds exactly like 1.0 / 7.0.
/// Throws ParseError.
double parse_number(std::string_view token);

/// CSV: one row per line, comma separated, no header. Blank lines are ignored.
/// JSON: {"n": int, "entries": [[...], ...]} with numbers or literal strings.
/// Throws ParseError on malformed text, ValidationError on invariant failure.
PairwiseComparisonMatrix parse_matrix(std::string_view text, MatrixFormat format);

/// Guesses the format from a file name (".json" means JSON, anything else CSV).
MatrixFormat format_from_path(std::string_view path);

PairwiseComparisonMatrix read_matrix_file(const std::string& path);

/// Matrix JSON object as accepted by parse_matrix (entries as numbers).
PairwiseComparisonMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const PairwiseComparisonMatrix& m);

/// Weights from CSV (comma and/or newline separated) or a JSON array,
/// optionally wrapped as {"weights": [...]}.
WeightVector parse_weights(std::string_view text, MatrixFormat format);
WeightVector read_weights_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace pcmeff
