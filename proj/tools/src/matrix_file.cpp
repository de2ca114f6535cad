// Copyright 2026 The edmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edmkit/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "edm/errors.hpp"
#include "json.hpp"

namespace edmkit {
namespace {

using edm::Error;
using edm::ErrorCode;
using edm::Matrix;

// 2^53: every integer below this magnitude is exactly representable.
constexpr double kExactIntegerLimit = 9007199254740992.0;

void CheckOrder(std::size_t n, std::size_t max_order) {
  if (n == 0) throw Error(ErrorCode::kParseError, "matrix order must be positive");
  if (n > max_order) {
    throw Error(ErrorCode::kTooLarge, "matrix order " + std::to_string(n) +
                                          " exceeds max order " +
                                          std::to_string(max_order));
  }
}

bool IsBlank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<std::string_view> Tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsBlank(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !IsBlank(text[pos])) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

double ParseReal(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParseError,
                "'" + std::string(token) + "' is not a real number");
  }
  return value;
}

Matrix ParseText(std::string_view content, std::size_t max_order) {
  const std::vector<std::string_view> tokens = Tokenize(content);
  if (tokens.empty()) throw Error(ErrorCode::kParseError, "empty matrix file");
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(
      tokens[0].data(), tokens[0].data() + tokens[0].size(), n);
  if (ec != std::errc() || ptr != tokens[0].data() + tokens[0].size()) {
    throw Error(ErrorCode::kParseError,
                "first token '" + std::string(tokens[0]) +
                    "' is not a matrix order");
  }
  CheckOrder(n, max_order);
  if (tokens.size() - 1 != n * n) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(n * n) + " entries, found " +
                    std::to_string(tokens.size() - 1));
  }
  const auto k = static_cast<Eigen::Index>(n);
  Matrix m(k, k);
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    m(static_cast<Eigen::Index>(idx / n), static_cast<Eigen::Index>(idx % n)) =
        ParseReal(tokens[idx + 1]);
  }
  return m;
}

Matrix ParseJson(std::string_view content, std::size_t max_order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("entries")) {
    throw Error(ErrorCode::kParseError,
                "structured matrix needs \"order\" and \"entries\" keys");
  }
  const nlohmann::json& order = doc["order"];
  if (!order.is_number_unsigned() && !(order.is_number_integer() && order.get<std::int64_t>() > 0)) {
    throw Error(ErrorCode::kParseError, "\"order\" must be a positive integer");
  }
  const auto n = order.get<std::size_t>();
  CheckOrder(n, max_order);

  // Accept a flat array or an array of rows.
  std::vector<double> values;
  const nlohmann::json& entries = doc["entries"];
  if (!entries.is_array()) {
    throw Error(ErrorCode::kParseError, "\"entries\" must be an array");
  }
  for (const auto& item : entries) {
    if (item.is_array()) {
      for (const auto& x : item) {
        if (!x.is_number()) throw Error(ErrorCode::kParseError, "non-numeric entry");
        values.push_back(x.get<double>());
      }
    } else if (item.is_number()) {
      values.push_back(item.get<double>());
    } else {
      throw Error(ErrorCode::kParseError, "non-numeric entry");
    }
  }
  if (values.size() != n * n) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(n * n) + " entries, found " +
                    std::to_string(values.size()));
  }
  const auto k = static_cast<Eigen::Index>(n);
  Matrix m(k, k);
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    m(static_cast<Eigen::Index>(idx / n), static_cast<Eigen::Index>(idx % n)) =
        values[idx];
  }
  return m;
}

}  // namespace

Matrix ParseMatrix(std::string_view content, std::size_t max_order) {
  for (const char c : content) {
    if (IsBlank(c)) continue;
    return c == '{' ? ParseJson(content, max_order) : ParseText(content, max_order);
  }
  throw Error(ErrorCode::kParseError, "empty matrix file");
}

Matrix ReadMatrixFile(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMatrix(buffer.str(), max_order);
}

std::string FormatNumber(double value) {
  if (std::isfinite(value) && value == std::trunc(value) &&
      std::abs(value) < kExactIntegerLimit) {
    if (value == 0.0 && std::signbit(value)) return "-0";
    return std::to_string(static_cast<std::int64_t>(value));
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string FormatMatrix(const Matrix& m, MatrixFormat format) {
  std::string out;
  const Eigen::Index n = m.rows();
  if (format == MatrixFormat::kText) {
    out += std::to_string(n) + "\n";
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j > 0) out += ' ';
        out += FormatNumber(m(i, j));
      }
      out += '\n';
    }
    return out;
  }
  out += "{\"order\": " + std::to_string(n) + ", \"entries\": [";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i > 0 || j > 0) out += ", ";
      out += FormatNumber(m(i, j));
    }
  }
  out += "]}\n";
  return out;
}

void WriteMatrixFile(const std::filesystem::path& path, const Matrix& m,
                     MatrixFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << FormatMatrix(m, format);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed for " + path.string());
}

}  // namespace edmkit
