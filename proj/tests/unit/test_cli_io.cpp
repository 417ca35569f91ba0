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

#include <gtest/gtest.h>

#include "matrix_io.hpp"
#include "maxalg/maxalg.hpp"
#include "maxalg/verify/oracles.hpp"

using namespace maxalg;
using namespace maxalg::cli;

namespace {

void expect_parse_error(std::string_view text, InputFormat f, std::size_t line, std::size_t col) {
  try {
    parse_matrix(text, f);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), col) << e.what();
  }
}

}  // namespace

TEST(ParseTsv, Basic) {
  const MatrixFile f = parse_tsv("0.5 1\n1 0.5");
  EXPECT_EQ(f.matrix, (MaxMatrix{{0.5, 1}, {1, 0.5}}));
}

TEST(ParseTsv, CommentsTabsAndBlankLines) {
  const MatrixFile f = parse_tsv("# three vertices\n0.2\t1\t4\n\n1 0.5 6\r\n0   0  0.9\n");
  ASSERT_EQ(f.matrix.size(), 3u);
  EXPECT_EQ(f.matrix(0, 2), 4.0);
}

TEST(ParseTsv, Errors) {
  expect_parse_error("0.5 -1", InputFormat::tsv, 1, 2);
  expect_parse_error("1 2\n3 x", InputFormat::tsv, 2, 2);
  expect_parse_error("1 2\n3", InputFormat::tsv, 2, 2);
  expect_parse_error("1 2 3\n4 5 6", InputFormat::tsv, 2, 1);
  expect_parse_error("", InputFormat::tsv, 1, 1);
  expect_parse_error("# nothing\n\n", InputFormat::tsv, 1, 1);
  expect_parse_error("1 inf\n1 1", InputFormat::tsv, 1, 2);
  expect_parse_error("1 nan\n1 1", InputFormat::tsv, 1, 2);
  expect_parse_error("1 0x1\n1 1", InputFormat::tsv, 1, 2);
}

TEST(ParseJson, Basic) {
  const MatrixFile f = parse_json(R"({"n": 2, "rows": [[4, 2], [0, 5]], "labels": ["x", "y"]})");
  EXPECT_EQ(f.matrix, (MaxMatrix{{4, 2}, {0, 5}}));
  EXPECT_EQ(f.labels, (std::vector<std::string>{"x", "y"}));
}

TEST(ParseJson, Errors) {
  expect_parse_error(R"({"n": 2, "rows": [[1, 2], [3]]})", InputFormat::json, 2, 1);
  expect_parse_error(R"({"n": 2, "rows": [[1, 2], [3, -4]]})", InputFormat::json, 2, 2);
  expect_parse_error(R"({"n": 2, "rows": [[1, "a"], [3, 4]]})", InputFormat::json, 1, 2);
  expect_parse_error(R"({"n": 0, "rows": []})", InputFormat::json, 1, 1);
  expect_parse_error("{\"n\": 1,\n \"rows\": [[1]", InputFormat::json, 2, 14);
  expect_parse_error(R"({"n": 1, "rows": [[1]], "labels": [1]})", InputFormat::json, 1, 1);
}

TEST(ParseMatrix, AutoDetect) {
  EXPECT_EQ(parse_matrix("  {\"n\":1,\"rows\":[[2]]}", InputFormat::automatic).matrix, (MaxMatrix{{2}}));
  EXPECT_EQ(parse_matrix("2", InputFormat::automatic).matrix, (MaxMatrix{{2}}));
}

TEST(RoundTrip, TsvAndJsonExact) {
  verify::Generator gen(71);
  for (int t = 0; t < 100; ++t) {
    MatrixFile f{"m", gen.matrix(gen.dimension(1, 6), 0, 1e6, 0.3), {}};
    EXPECT_EQ(parse_tsv(to_tsv(f.matrix)).matrix, f.matrix);
    EXPECT_EQ(parse_json(to_json(f)).matrix, f.matrix);
  }
  MatrixFile tiny{"m", MaxMatrix{{5e-324, 1.7976931348623157e308}, {0.1, 1.0 / 3}}, {"a", "b"}};
  EXPECT_EQ(parse_tsv(to_tsv(tiny.matrix)).matrix, tiny.matrix);
  const MatrixFile back = parse_json(to_json(tiny));
  EXPECT_EQ(back.matrix, tiny.matrix);
  EXPECT_EQ(back.labels, tiny.labels);
}

TEST(FormatDouble, Shortest) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(6), "6");
  EXPECT_EQ(format_double(5.4), "5.4");
}

TEST(ParseVector, Basic) {
  EXPECT_EQ(parse_vector("27, 23,1"), (MaxVector{27, 23, 1}));
  EXPECT_THROW(parse_vector("1,-2"), ParseError);
  EXPECT_THROW(parse_vector("1,,2"), ParseError);
}
