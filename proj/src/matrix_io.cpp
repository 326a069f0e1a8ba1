#include "pcmeff/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pcmeff/errors.hpp"

namespace pcmeff {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view token, std::string_view whole) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  if (token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

double json_number(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_number(v.get<std::string>());
  throw ParseError("matrix entries must be numbers or numeric strings");
}

PairwiseComparisonMatrix parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  for (auto line : lines_of(text)) {
    std::vector<double> row;
    for (auto token : split(line, ',')) row.push_back(parse_number(token));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  return PairwiseComparisonMatrix::from_rows(rows);
}

PairwiseComparisonMatrix parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace

double parse_number(std::string_view token) {
  const auto whole = trim(token);
  const auto slash = whole.find('/');
  if (slash == std::string_view::npos) return parse_decimal(whole, whole);
  const double p = parse_decimal(whole.substr(0, slash), whole);
  const double q = parse_decimal(whole.substr(slash + 1), whole);
  if (q == 0.0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  return p / q;
}

PairwiseComparisonMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix JSON must be an object with \"entries\"");
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array of rows");

  std::vector<std::vector<double>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw ParseError("every row of \"entries\" must be an array");
    std::vector<double> values;
    for (const auto& v : row) values.push_back(json_number(v));
    rows.push_back(std::move(values));
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw ParseError("\"n\" must be an integer");
    if (j.at("n").get<long long>() != static_cast<long long>(rows.size())) {
      throw ValidationError("\"n\" does not match the number of rows");
    }
  }
  return PairwiseComparisonMatrix::from_rows(rows);
}

nlohmann::json matrix_to_json(const PairwiseComparisonMatrix& m) {
  return {{"n", m.size()}, {"entries", m.entries().to_rows()}};
}

PairwiseComparisonMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Json ? parse_json(text) : parse_csv(text);
}

MatrixFormat format_from_path(std::string_view path) {
  constexpr std::string_view ext = ".json";
  if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) return MatrixFormat::Json;
  return MatrixFormat::Csv;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PairwiseComparisonMatrix read_matrix_file(const std::string& path) {
  return parse_matrix(read_text_file(path), format_from_path(path));
}

WeightVector parse_weights(std::string_view text, MatrixFormat format) {
  std::vector<double> values;
  if (format == MatrixFormat::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("weights")) j = j.at("weights");
    if (!j.is_array()) throw ParseError("weights JSON must be an array");
    for (const auto& v : j) values.push_back(json_number(v));
  } else {
    for (auto line : lines_of(text))
      for (auto token : split(line, ',')) values.push_back(parse_number(token));
  }
  if (values.empty()) throw ParseError("no weights found");
  return WeightVector(std::move(values));
}

WeightVector read_weights_file(const std::string& path) {
  return parse_weights(read_text_file(path), format_from_path(path));
}

}  // namespace pcmeff
