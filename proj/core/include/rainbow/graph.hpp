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

#include <array>
#include <cstdint>
#include <vector>

namespace rainbow {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Undirected multigraph with one color per edge. Parallel edges and loops
// carry distinct edge ids; certificates reference edges by index. Color ids
// are contiguous from 0.
struct EdgeColoredGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<int> colors;  // one entry per edge
  int color_count = 0;

  friend bool operator==(const EdgeColoredGraph&, const EdgeColoredGraph&) = default;
};

// Directed multigraph with loops and parallels, plus a designated root.
struct Digraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  int root = 0;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Undirected graph whose edges are partitioned into two-element pairs.
struct PairedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<int> pair_ids;  // one entry per edge
  int pair_count = 0;

  friend bool operator==(const PairedGraph&, const PairedGraph&) = default;
};

// Monotone 3-CNF: clauses are sets of three distinct variables, stored
// 0-based and strictly increasing.
struct NaeFormula {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

// k edge-index sets. Validity (disjointness, each set a spanning tree, the
// rainbow/parity conditions) is checked by the verifiers, not by the type.
struct TreePacking {
  std::vector<std::vector<int>> trees;

  friend bool operator==(const TreePacking&, const TreePacking&) = default;
};

// k arc-index sets intended to partition the arc set of a Digraph.
struct ArcPartition {
  std::vector<std::vector<int>> parts;

  friend bool operator==(const ArcPartition&, const ArcPartition&) = default;
};

struct Assignment {
  std::vector<bool> values;  // one entry per variable

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Structural validation; all throw InstanceError on violation.
void validate(const EdgeColoredGraph& g);
void validate(const Digraph& d);
void validate(const PairedGraph& g);
void validate(const NaeFormula& f);

// True iff the whole vertex set lies in one component of `edges`.
bool is_connected(int vertex_count, const std::vector<Edge>& edges);

// Paper-normal form: |E| = 2(|V|-1), every color class has exactly two
// edges, and the edge set splits into two spanning trees.
bool is_paper_normal_form(const EdgeColoredGraph& g);

// True iff every variable occurs in exactly four clauses.
bool is_exactly_four(const NaeFormula& f);

// Not-all-equal satisfaction: every clause sees at least one true and at
// least one false variable.
bool nae_satisfies(const NaeFormula& f, const Assignment& a);

// Tutte's characterization: every vertex partition P is crossed by at least
// k(|P|-1) edges. Decided via the spanning-tree packing number.
bool is_k_partition_connected(int vertex_count, const std::vector<Edge>& edges, int k);

// In-degree of every vertex, counting loops.
std::vector<int> in_degrees(const Digraph& d);

// Problem-box instance shape for the digraph decomposition problem: the root
// has in-degree 0 and every other vertex has in-degree >= k.
bool satisfies_indegree_conditions(const Digraph& d, int k);

}  // namespace rainbow
