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

#include <iosfwd>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Line-oriented text formats, one record per line, `#` comment lines
// ignored. Parsers throw ParseError with 1-based line numbers; parsed
// instances are structurally validated. parse(serialize(x)) == x.
//
//   ecg <n> <m> <colors>   then m lines  u v c
//   dig <n> <m> <root>     then m lines  tail head      (loops as `v v`)
//   pgr <n> <m>            then m lines  u v pair_id
//   nae <n> <m>            then m lines  v1 v2 v3       (1-based variables)
//   packing <k>            then k lines of edge indices (blank = empty tree)
//   arcpart <k>            then k lines of arc indices
//   assign <n>             then one line of n 0/1 values

EdgeColoredGraph parse_edge_colored_graph(std::istream& in);
Digraph parse_digraph(std::istream& in);
PairedGraph parse_paired_graph(std::istream& in);
NaeFormula parse_nae_formula(std::istream& in);
TreePacking parse_tree_packing(std::istream& in);
ArcPartition parse_arc_partition(std::istream& in);
Assignment parse_assignment(std::istream& in);

void serialize(std::ostream& out, const EdgeColoredGraph& g);
void serialize(std::ostream& out, const Digraph& d);
void serialize(std::ostream& out, const PairedGraph& g);
void serialize(std::ostream& out, const NaeFormula& f);
void serialize(std::ostream& out, const TreePacking& p);
void serialize(std::ostream& out, const ArcPartition& p);
void serialize(std::ostream& out, const Assignment& a);

template <typename T>
std::string to_text(const T& value);

}  // namespace rainbow
