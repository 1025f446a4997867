/*
 * Copyright 2026 The detident Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "detident/errors.hpp"

namespace detident::cli {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::size_t parse_dimension(const std::string& token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ParseError("matrix header needs positive integers, got '" + token + "'");
  }
  return value;
}

Scalar scalar_from_json(const nlohmann::json& value) {
  if (value.is_string()) return parse_scalar(value.get<std::string>());
  if (value.is_number_integer()) return parse_scalar(value.dump());
  throw ParseError("matrix entries must be scalar strings or integers, got " + value.dump());
}

}  // namespace

Matrix read_matrix_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!skippable(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty matrix file");
  const auto header = tokens_of(line);
  if (header.size() != 2) throw ParseError("matrix header must be 'rows cols'");
  const std::size_t rows = parse_dimension(header[0]);
  const std::size_t cols = parse_dimension(header[1]);

  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!next_line()) {
      throw DimensionError("matrix file ends after " + std::to_string(r) + " of " +
                           std::to_string(rows) + " rows");
    }
    const auto row = tokens_of(line);
    if (row.size() != cols) {
      throw DimensionError("line " + std::to_string(line_no) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (const auto& token : row) entries.push_back(parse_scalar(token));
  }
  if (next_line()) throw DimensionError("unexpected content after the last matrix row");
  return Matrix(rows, cols, std::move(entries));
}

Matrix read_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON matrix: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("entries")) {
    throw ParseError("JSON matrix needs rows, cols and entries");
  }
  if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
    throw ParseError("JSON matrix rows/cols must be positive integers");
  }
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) throw ParseError("JSON matrix rows/cols must be positive");
  const auto& body = doc["entries"];
  if (!body.is_array() || body.size() != rows) {
    throw DimensionError("JSON matrix entries must hold " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (const auto& row : body) {
    if (!row.is_array() || row.size() != cols) {
      throw DimensionError("JSON matrix row must hold " + std::to_string(cols) + " entries");
    }
    for (const auto& value : row) entries.push_back(scalar_from_json(value));
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix read_matrix(std::istream& in) {
  const std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return read_matrix_json(content);
  std::istringstream text(content);
  return read_matrix_text(text);
}

Matrix read_matrix_file(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_matrix(stdin_stream);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return read_matrix(file);
}

void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format) {
  if (format == MatrixFormat::json) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j).to_string());
      doc["entries"].push_back(std::move(row));
    }
    out << doc.dump() << '\n';
    return;
  }
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out << ' ';
      out << m.at(i, j).to_string();
    }
    out << '\n';
  }
}

std::string format_matrix(const Matrix& m, MatrixFormat format) {
  std::ostringstream out;
  write_matrix(out, m, format);
  return out.str();
}

}  // namespace detident::cli
