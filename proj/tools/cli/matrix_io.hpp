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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxalg/matrix.hpp"

namespace maxalg::cli {

/// Unreadable input file; reported like a parse failure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InputFormat { automatic, tsv, json };

struct MatrixFile {
  std::string name;
  MaxMatrix matrix{1};
  /// Empty, or one name per vertex.
  std::vector<std::string> labels;
};

/// Whitespace separated rows; blank lines and lines starting with '#' are
/// skipped. Errors carry the file line and the entry column (both 1-based).
MatrixFile parse_tsv(std::string_view text, std::string name = {});

/// {"n": 3, "rows": [[...], ...], "labels": [...]}.
MatrixFile parse_json(std::string_view text, std::string name = {});

/// automatic picks json when the first non-blank character is '{'.
MatrixFile parse_matrix(std::string_view text, InputFormat format,
                        std::string name = {});

/// Reads a file, or stdin for "-".
MatrixFile read_matrix(const std::string& path, InputFormat format);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

std::string to_tsv(const MaxMatrix& m);
std::string to_json(const MatrixFile& f);

MaxVector parse_vector(std::string_view text);

}  // namespace maxalg::cli
