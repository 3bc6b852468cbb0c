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

#include "rainbow/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "rainbow/errors.hpp"
#include "text_util.hpp"

namespace rainbow {

namespace {

using detail::LineReader;
using detail::parse_ints;
using detail::read_keyword_line;
using detail::read_record;
using detail::tokens_of;

void check_range(const LineReader& reader, int value, int limit, const char* what) {
  if (value < 0 || value >= limit) {
    reader.fail(std::string(what) + " " + std::to_string(value) + " out of range [0, " +
                std::to_string(limit) + ")");
  }
}

std::vector<std::vector<int>> parse_index_sets(std::istream& in, const std::string& keyword) {
  LineReader reader(in);
  const std::vector<int> header = read_keyword_line(reader, keyword, 1);
  const int k = header[0];
  if (k < 0) reader.fail("negative set count");
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < k; ++i) {
    const std::string line = read_record(reader, "an index line", /*blank_is_record=*/true);
    std::vector<int> ids = parse_ints(reader, line);
    for (int id : ids) {
      if (id < 0) reader.fail("negative index");
    }
    sets.push_back(std::move(ids));
  }
  return sets;
}

void write_index_sets(std::ostream& out, const std::string& keyword,
                      const std::vector<std::vector<int>>& sets) {
  out << keyword << ' ' << sets.size() << '\n';
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out << ' ';
      out << set[i];
    }
    out << '\n';
  }
}

}  // namespace

namespace detail {

EdgeColoredGraph parse_edge_colored_graph(LineReader& reader) {
  const std::vector<int> header = read_keyword_line(reader, "ecg", 3);
  EdgeColoredGraph g;
  g.vertex_count = header[0];
  const int m = header[1];
  g.color_count = header[2];
  if (g.vertex_count < 0 || m < 0 || g.color_count < 0) reader.fail("negative count in header");
  for (int i = 0; i < m; ++i) {
    const std::string line = read_record(reader, "an edge line");
    const std::vector<int> fields = parse_ints(reader, line);
    if (fields.size() != 3) reader.fail("edge line takes 'u v c'");
    check_range(reader, fields[0], g.vertex_count, "vertex");
    check_range(reader, fields[1], g.vertex_count, "vertex");
    check_range(reader, fields[2], g.color_count, "color");
    g.edges.push_back({fields[0], fields[1]});
    g.colors.push_back(fields[2]);
  }
  return g;
}

NaeFormula parse_nae_formula(LineReader& reader) {
  const std::vector<int> header = read_keyword_line(reader, "nae", 2);
  NaeFormula f;
  f.variable_count = header[0];
  const int m = header[1];
  if (f.variable_count < 0 || m < 0) reader.fail("negative count in header");
  for (int i = 0; i < m; ++i) {
    const std::string line = read_record(reader, "a clause line");
    std::vector<int> fields = parse_ints(reader, line);
    if (fields.size() != 3) reader.fail("clause line takes three variable ids");
    for (int& v : fields) {
      if (v < 1 || v > f.variable_count) {
        reader.fail("variable " + std::to_string(v) + " out of range [1, " +
                    std::to_string(f.variable_count) + "]");
      }
      --v;  // 1-based on disk, 0-based in memory
    }
    std::sort(fields.begin(), fields.end());
    if (fields[0] == fields[1] || fields[1] == fields[2]) {
      reader.fail("clause has a repeated variable");
    }
    f.clauses.push_back({fields[0], fields[1], fields[2]});
  }
  return f;
}

}  // namespace detail

EdgeColoredGraph parse_edge_colored_graph(std::istream& in) {
  LineReader reader(in);
  return detail::parse_edge_colored_graph(reader);
}

Digraph parse_digraph(std::istream& in) {
  LineReader reader(in);
  const std::vector<int> header = read_keyword_line(reader, "dig", 3);
  Digraph d;
  d.vertex_count = header[0];
  const int m = header[1];
  d.root = header[2];
  if (d.vertex_count <= 0 || m < 0) reader.fail("bad counts in header");
  check_range(reader, d.root, d.vertex_count, "root");
  for (int i = 0; i < m; ++i) {
    const std::string line = read_record(reader, "an arc line");
    const std::vector<int> fields = parse_ints(reader, line);
    if (fields.size() != 2) reader.fail("arc line takes 'tail head'");
    check_range(reader, fields[0], d.vertex_count, "vertex");
    check_range(reader, fields[1], d.vertex_count, "vertex");
    d.arcs.push_back({fields[0], fields[1]});
  }
  return d;
}

PairedGraph parse_paired_graph(std::istream& in) {
  LineReader reader(in);
  const std::vector<int> header = read_keyword_line(reader, "pgr", 2);
  PairedGraph g;
  g.vertex_count = header[0];
  const int m = header[1];
  if (g.vertex_count < 0 || m < 0) reader.fail("negative count in header");
  if (m % 2 != 0) reader.fail("paired graph needs an even number of edges");
  g.pair_count = m / 2;
  for (int i = 0; i < m; ++i) {
    const std::string line = read_record(reader, "an edge line");
    const std::vector<int> fields = parse_ints(reader, line);
    if (fields.size() != 3) reader.fail("edge line takes 'u v pair_id'");
    check_range(reader, fields[0], g.vertex_count, "vertex");
    check_range(reader, fields[1], g.vertex_count, "vertex");
    check_range(reader, fields[2], g.pair_count, "pair id");
    g.edges.push_back({fields[0], fields[1]});
    g.pair_ids.push_back(fields[2]);
  }
  try {
    validate(g);
  } catch (const InstanceError& err) {
    reader.fail(err.what());
  }
  return g;
}

NaeFormula parse_nae_formula(std::istream& in) {
  LineReader reader(in);
  return detail::parse_nae_formula(reader);
}

TreePacking parse_tree_packing(std::istream& in) {
  TreePacking p;
  p.trees = parse_index_sets(in, "packing");
  return p;
}

ArcPartition parse_arc_partition(std::istream& in) {
  ArcPartition p;
  p.parts = parse_index_sets(in, "arcpart");
  return p;
}

Assignment parse_assignment(std::istream& in) {
  LineReader reader(in);
  const std::vector<int> header = read_keyword_line(reader, "assign", 1);
  const int n = header[0];
  if (n < 0) reader.fail("negative variable count");
  Assignment a;
  if (n == 0) return a;
  const std::string line = read_record(reader, "a 0/1 line");
  const std::vector<int> values = parse_ints(reader, line);
  if (static_cast<int>(values.size()) != n) {
    reader.fail("expected " + std::to_string(n) + " values, got " + std::to_string(values.size()));
  }
  for (int v : values) {
    if (v != 0 && v != 1) reader.fail("assignment values must be 0 or 1");
    a.values.push_back(v == 1);
  }
  return a;
}

void serialize(std::ostream& out, const EdgeColoredGraph& g) {
  out << "ecg " << g.vertex_count << ' ' << g.edges.size() << ' ' << g.color_count << '\n';
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out << g.edges[i].u << ' ' << g.edges[i].v << ' ' << g.colors[i] << '\n';
  }
}

void serialize(std::ostream& out, const Digraph& d) {
  out << "dig " << d.vertex_count << ' ' << d.arcs.size() << ' ' << d.root << '\n';
  for (const Arc& a : d.arcs) out << a.tail << ' ' << a.head << '\n';
}

void serialize(std::ostream& out, const PairedGraph& g) {
  out << "pgr " << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    out << g.edges[i].u << ' ' << g.edges[i].v << ' ' << g.pair_ids[i] << '\n';
  }
}

void serialize(std::ostream& out, const NaeFormula& f) {
  out << "nae " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
  }
}

void serialize(std::ostream& out, const TreePacking& p) { write_index_sets(out, "packing", p.trees); }

void serialize(std::ostream& out, const ArcPartition& p) { write_index_sets(out, "arcpart", p.parts); }

void serialize(std::ostream& out, const Assignment& a) {
  out << "assign " << a.values.size() << '\n';
  if (a.values.empty()) return;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (i > 0) out << ' ';
    out << (a.values[i] ? 1 : 0);
  }
  out << '\n';
}

template <typename T>
std::string to_text(const T& value) {
  std::ostringstream out;
  serialize(out, value);
  return out.str();
}

template std::string to_text(const EdgeColoredGraph&);
template std::string to_text(const Digraph&);
template std::string to_text(const PairedGraph&);
template std::string to_text(const NaeFormula&);
template std::string to_text(const TreePacking&);
template std::string to_text(const ArcPartition&);
template std::string to_text(const Assignment&);

}  // namespace rainbow
