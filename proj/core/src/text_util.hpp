// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <istream>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow::detail {

inline bool is_blank_or_comment(const std::string& line, bool* blank) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    *blank = false;
    return ch == '#';
  }
  *blank = true;
  return false;
}

// Splits the input into records (non-comment lines) with line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next record, skipping comments. Blank lines are skipped unless
  // `blank_is_record` (certificate part lines may legitimately be empty).
  bool next(std::string* record, bool blank_is_record = false) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      bool blank = false;
      const bool comment = is_blank_or_comment(line, &blank);
      if (comment) continue;
      if (blank && !blank_is_record) continue;
      *record = std::move(line);
      return true;
    }
    return false;
  }

  int line_number() const { return line_number_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_number_, message);
  }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline int parse_int(const LineReader& reader, const std::string& token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(reader.line_number(), "expected an integer, got '" + token + "'");
  }
  return value;
}

inline std::vector<int> parse_ints(const LineReader& reader, const std::string& line) {
  std::vector<int> values;
  for (const std::string& token : tokens_of(line)) {
    values.push_back(parse_int(reader, token));
  }
  return values;
}

// Reads a line `keyword a b c...` with exactly `arity` integer fields.
inline std::vector<int> read_keyword_line(LineReader& reader, const std::string& keyword,
                                          int arity) {
  std::string line;
  if (!reader.next(&line)) {
    throw ParseError(reader.line_number() + 1, "missing '" + keyword + "' line");
  }
  const std::vector<std::string> tokens = tokens_of(line);
  if (tokens.empty() || tokens[0] != keyword) {
    reader.fail("expected '" + keyword + "' line");
  }
  if (static_cast<int>(tokens.size()) != arity + 1) {
    reader.fail("'" + keyword + "' line takes " + std::to_string(arity) + " fields");
  }
  std::vector<int> fields;
  for (int i = 1; i <= arity; ++i) fields.push_back(parse_int(reader, tokens[i]));
  return fields;
}

inline std::string read_record(LineReader& reader, const char* what, bool blank_is_record = false) {
  std::string line;
  if (!reader.next(&line, blank_is_record)) {
    throw ParseError(reader.line_number() + 1,
                     std::string("unexpected end of input, expected ") + what);
  }
  return line;
}

}  // namespace rainbow::detail

namespace rainbow {
struct EdgeColoredGraph;
struct NaeFormula;
}

namespace rainbow::detail {

// Mid-stream parsers, used for instances embedded in map sidecars;
// implemented in io.cpp.
EdgeColoredGraph parse_edge_colored_graph(LineReader& reader);
NaeFormula parse_nae_formula(LineReader& reader);

}  // namespace rainbow::detail
