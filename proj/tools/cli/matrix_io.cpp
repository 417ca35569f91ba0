/*
 *   Copyright 2026 The maxalg Authors
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

#include "matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "maxalg/error.hpp"

namespace maxalg::cli {

namespace {

using nlohmann::json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

double parse_entry(std::string_view token, std::size_t line, std::size_t column) {
  double value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || end != last) {
    throw ParseError(line, column, "not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, column, "entry is not finite: '" + std::string(token) + "'");
  }
  if (value < 0) {
    throw ParseError(line, column, "negative entry " + std::string(token));
  }
  return value == 0 ? 0.0 : value;  // drop -0
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && is_space(line[k])) ++k;
    const std::size_t start = k;
    while (k < line.size() && !is_space(line[k])) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

MatrixFile square_up(std::vector<std::vector<double>> rows, std::size_t last_line,
                     std::string name) {
  if (rows.empty()) throw ParseError(1, 1, "empty matrix");
  if (rows.size() != rows.front().size()) {
    throw ParseError(last_line, 1, "matrix is not square: " + std::to_string(rows.size()) +
                                       " rows of " + std::to_string(rows.front().size()) +
                                       " entries");
  }
  return {std::move(name), MaxMatrix::from_rows(rows), {}};
}

}  // namespace

MatrixFile parse_tsv(std::string_view text, std::string name) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t last_data_line = 1;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    std::vector<double> row;
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      row.push_back(parse_entry(tokens[c], line_no, c + 1));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, std::min(row.size(), rows.front().size()) + 1,
                       "ragged row: " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    last_data_line = line_no;
  }
  return square_up(std::move(rows), last_data_line, std::move(name));
}

MatrixFile parse_json(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // locate the failing byte
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError(1, 1, "expected an object with 'n' and 'rows'");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    throw ParseError(1, 1, "'n' must be a positive integer");
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != n) {
    throw ParseError(1, 1, "'rows' must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const json& r = doc["rows"][i];
    if (!r.is_array() || r.size() != n) {
      throw ParseError(i + 1, 1, "row " + std::to_string(i + 1) + " must have " +
                                     std::to_string(n) + " entries");
    }
    std::vector<double> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[j].is_number()) throw ParseError(i + 1, j + 1, "not a number");
      const double v = r[j].get<double>();
      if (!std::isfinite(v)) throw ParseError(i + 1, j + 1, "entry is not finite");
      if (v < 0) throw ParseError(i + 1, j + 1, "negative entry");
      row.push_back(v == 0 ? 0.0 : v);
    }
    rows.push_back(std::move(row));
  }
  MatrixFile out{std::move(name), MaxMatrix::from_rows(rows), {}};
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != n) {
      throw ParseError(1, 1, "'labels' must be an array of " + std::to_string(n) + " strings");
    }
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError(1, 1, "labels must be strings");
      out.labels.push_back(l.get<std::string>());
    }
  }
  return out;
}

MatrixFile parse_matrix(std::string_view text, InputFormat format, std::string name) {
  if (format == InputFormat::automatic) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? InputFormat::json
                                                                   : InputFormat::tsv;
  }
  return format == InputFormat::json ? parse_json(text, std::move(name))
                                     : parse_tsv(text, std::move(name));
}

MatrixFile read_matrix(const std::string& path, InputFormat format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_matrix(text, format, path);
}

std::string format_double(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

std::string to_tsv(const MaxMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += '\t';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const MatrixFile& f) {
  json doc;
  doc["n"] = f.matrix.size();
  doc["rows"] = f.matrix.rows();
  if (!f.labels.empty()) doc["labels"] = f.labels;
  return doc.dump() + "\n";
}

MaxVector parse_vector(std::string_view text) {
  MaxVector out;
  std::size_t column = 0;
  while (true) {
    ++column;
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    out.push_back(parse_entry(token, 1, column));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace maxalg::cli
