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

#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

#include "rainbow/dsu.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

namespace {

void check_vertex(int v, int vertex_count, const char* what) {
  if (v < 0 || v >= vertex_count) {
    throw InstanceError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

void validate(const EdgeColoredGraph& g) {
  if (g.vertex_count < 0) throw InstanceError("edge-colored graph: negative vertex count");
  if (g.colors.size() != g.edges.size()) {
    throw InstanceError("edge-colored graph: one color required per edge");
  }
  for (const Edge& e : g.edges) {
    check_vertex(e.u, g.vertex_count, "edge-colored graph");
    check_vertex(e.v, g.vertex_count, "edge-colored graph");
  }
  for (int c : g.colors) {
    if (c < 0 || c >= g.color_count) {
      throw InstanceError("edge-colored graph: color " + std::to_string(c) + " out of range");
    }
  }
}

void validate(const Digraph& d) {
  if (d.vertex_count <= 0) throw InstanceError("digraph: vertex count must be positive");
  check_vertex(d.root, d.vertex_count, "digraph root");
  for (const Arc& a : d.arcs) {
    check_vertex(a.tail, d.vertex_count, "digraph");
    check_vertex(a.head, d.vertex_count, "digraph");
  }
}

void validate(const PairedGraph& g) {
  if (g.vertex_count < 0) throw InstanceError("paired graph: negative vertex count");
  if (g.pair_ids.size() != g.edges.size()) {
    throw InstanceError("paired graph: one pair id required per edge");
  }
  for (const Edge& e : g.edges) {
    check_vertex(e.u, g.vertex_count, "paired graph");
    check_vertex(e.v, g.vertex_count, "paired graph");
  }
  std::vector<int> count(static_cast<std::size_t>(g.pair_count), 0);
  for (int p : g.pair_ids) {
    if (p < 0 || p >= g.pair_count) {
      throw InstanceError("paired graph: pair id " + std::to_string(p) + " out of range");
    }
    ++count[p];
  }
  for (int p = 0; p < g.pair_count; ++p) {
    if (count[p] != 2) {
      throw InstanceError("paired graph: pair " + std::to_string(p) + " has " +
                          std::to_string(count[p]) + " edges, expected 2");
    }
  }
}

void validate(const NaeFormula& f) {
  if (f.variable_count < 0) throw InstanceError("formula: negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (!(c[0] < c[1] && c[1] < c[2])) {
      throw InstanceError("formula: clause " + std::to_string(j) +
                          " must list three distinct variables in increasing order");
    }
    if (c[0] < 0 || c[2] >= f.variable_count) {
      throw InstanceError("formula: clause " + std::to_string(j) + " has a variable out of range");
    }
  }
}

bool is_connected(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 1) return true;
  DisjointSets dsu(vertex_count);
  for (const Edge& e : edges) dsu.unite(e.u, e.v);
  return dsu.component_count() == 1;
}

bool is_paper_normal_form(const EdgeColoredGraph& g) {
  if (g.vertex_count < 1) return false;
  if (static_cast<int>(g.edges.size()) != 2 * (g.vertex_count - 1)) return false;
  std::vector<int> class_size(static_cast<std::size_t>(g.color_count), 0);
  for (int c : g.colors) ++class_size[c];
  for (int s : class_size) {
    if (s != 2) return false;
  }
  const Matroid graphic = Matroid::graphic(g.vertex_count, g.edges);
  const std::optional<int> packing = packing_number(graphic);
  return !packing.has_value() || *packing >= 2;
}

bool is_exactly_four(const NaeFormula& f) {
  std::vector<int> occurrences(static_cast<std::size_t>(f.variable_count), 0);
  for (const auto& c : f.clauses) {
    for (int v : c) ++occurrences[v];
  }
  return std::all_of(occurrences.begin(), occurrences.end(), [](int o) { return o == 4; });
}

bool nae_satisfies(const NaeFormula& f, const Assignment& a) {
  if (static_cast<int>(a.values.size()) != f.variable_count) {
    throw InstanceError("assignment length does not match variable count");
  }
  for (const auto& c : f.clauses) {
    const bool v0 = a.values[c[0]];
    const bool v1 = a.values[c[1]];
    const bool v2 = a.values[c[2]];
    if (v0 == v1 && v1 == v2) return false;
  }
  return true;
}

bool is_k_partition_connected(int vertex_count, const std::vector<Edge>& edges, int k) {
  if (k < 1) throw InstanceError("k-partition-connectivity: k must be positive");
  if (vertex_count <= 1) return true;
  // A disconnected graph fails already at the partition into components; for
  // a connected graph Tutte's theorem reduces the question to packing k
  // spanning trees.
  if (!is_connected(vertex_count, edges)) return false;
  const Matroid graphic = Matroid::graphic(vertex_count, edges);
  const std::optional<int> packing = packing_number(graphic);
  return !packing.has_value() || *packing >= k;
}

std::vector<int> in_degrees(const Digraph& d) {
  std::vector<int> degree(static_cast<std::size_t>(d.vertex_count), 0);
  for (const Arc& a : d.arcs) ++degree[a.head];
  return degree;
}

bool satisfies_indegree_conditions(const Digraph& d, int k) {
  const std::vector<int> degree = in_degrees(d);
  if (degree[d.root] != 0) return false;
  for (int v = 0; v < d.vertex_count; ++v) {
    if (v != d.root && degree[v] < k) return false;
  }
  return true;
}

}  // namespace rainbow
