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

#include "rainbow/verify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <vector>

#include "rainbow/dsu.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

VerifyResult violation(const std::string& reason) { return {false, reason}; }

void check_indices(const std::vector<std::vector<int>>& sets, int limit, const char* what) {
  for (const auto& set : sets) {
    for (int id : set) {
      if (id < 0 || id >= limit) {
        throw InstanceError(std::string(what) + " index " + std::to_string(id) + " out of range");
      }
    }
  }
}

// The edges of `tree` up to and including the closing edge contain a unique
// cycle; returns its edge list as a witness.
std::vector<int> cycle_witness(const std::vector<Edge>& edges, const std::vector<int>& tree,
                               int closing_index) {
  const Edge closing = edges[tree[closing_index]];
  if (closing.u == closing.v) return {tree[closing_index]};
  // BFS between the closing edge's endpoints through the earlier edges.
  struct Hop {
    int to;
    int via_edge;
  };
  int max_vertex = std::max(closing.u, closing.v);
  for (int i = 0; i < closing_index; ++i) {
    max_vertex = std::max({max_vertex, edges[tree[i]].u, edges[tree[i]].v});
  }
  std::vector<std::vector<Hop>> adjacency(static_cast<std::size_t>(max_vertex) + 1);
  for (int i = 0; i < closing_index; ++i) {
    const Edge e = edges[tree[i]];
    adjacency[e.u].push_back({e.v, tree[i]});
    adjacency[e.v].push_back({e.u, tree[i]});
  }
  std::vector<int> parent_edge(static_cast<std::size_t>(max_vertex) + 1, -1);
  std::vector<int> parent_vertex(static_cast<std::size_t>(max_vertex) + 1, -1);
  std::vector<char> seen(static_cast<std::size_t>(max_vertex) + 1, 0);
  std::deque<int> queue{closing.u};
  seen[closing.u] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == closing.v) break;
    for (const Hop& hop : adjacency[v]) {
      if (!seen[hop.to]) {
        seen[hop.to] = 1;
        parent_edge[hop.to] = hop.via_edge;
        parent_vertex[hop.to] = v;
        queue.push_back(hop.to);
      }
    }
  }
  std::vector<int> cycle{tree[closing_index]};
  for (int v = closing.v; v != closing.u; v = parent_vertex[v]) {
    cycle.push_back(parent_edge[v]);
  }
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ' ';
    out << ids[i];
  }
  return out.str();
}

// Spanning-tree shape: acyclic and connecting all vertices. On failure the
// result names the cycle or an unreached vertex.
VerifyResult check_spanning_tree(int vertex_count, const std::vector<Edge>& edges,
                                 const std::vector<int>& tree, int tree_index) {
  std::vector<int> sorted = tree;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      return violation("tree " + std::to_string(tree_index) + " lists edge " +
                       std::to_string(sorted[i]) + " twice");
    }
  }
  DisjointSets dsu(vertex_count);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const Edge e = edges[tree[i]];
    if (!dsu.unite(e.u, e.v)) {
      return violation("cycle in tree " + std::to_string(tree_index) + ": edges " +
                       join_ids(cycle_witness(edges, tree, static_cast<int>(i))));
    }
  }
  if (dsu.component_count() != 1) {
    for (int v = 1; v < vertex_count; ++v) {
      if (!dsu.connected(0, v)) {
        return violation("tree " + std::to_string(tree_index) + " not spanning: vertex " +
                         std::to_string(v) + " is cut off from vertex 0");
      }
    }
  }
  return {};
}

VerifyResult check_disjoint(const std::vector<std::vector<int>>& sets, int ground,
                            const char* element) {
  std::vector<int> first_owner(static_cast<std::size_t>(ground), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int id : sets[i]) {
      if (first_owner[id] >= 0) {
        return violation(std::string(element) + " " + std::to_string(id) + " appears in sets " +
                         std::to_string(first_owner[id]) + " and " + std::to_string(i));
      }
      first_owner[id] = static_cast<int>(i);
    }
  }
  return {};
}

}  // namespace

VerifyResult verify_rainbow_packing(const EdgeColoredGraph& g, const TreePacking& p,
                                    bool require_partition) {
  check_indices(p.trees, static_cast<int>(g.edges.size()), "edge");
  for (std::size_t t = 0; t < p.trees.size(); ++t) {
    const VerifyResult shape =
        check_spanning_tree(g.vertex_count, g.edges, p.trees[t], static_cast<int>(t));
    if (!shape.ok) return shape;
    std::vector<int> first_edge_of_color(static_cast<std::size_t>(g.color_count), -1);
    for (int e : p.trees[t]) {
      const int c = g.colors[e];
      if (first_edge_of_color[c] >= 0) {
        return violation("repeated color " + std::to_string(c) + " in tree " + std::to_string(t) +
                         ": edges " + std::to_string(first_edge_of_color[c]) + " and " +
                         std::to_string(e));
      }
      first_edge_of_color[c] = e;
    }
  }
  const VerifyResult disjoint = check_disjoint(p.trees, static_cast<int>(g.edges.size()), "edge");
  if (!disjoint.ok) return disjoint;
  if (require_partition) {
    std::vector<char> covered(g.edges.size(), 0);
    for (const auto& tree : p.trees) {
      for (int e : tree) covered[e] = 1;
    }
    for (std::size_t e = 0; e < covered.size(); ++e) {
      if (!covered[e]) {
        return violation("edge " + std::to_string(e) + " is not covered by any tree");
      }
    }
  }
  return {};
}

VerifyResult verify_digraph_decomposition(const Digraph& d, const ArcPartition& p) {
  check_indices(p.parts, static_cast<int>(d.arcs.size()), "arc");
  std::vector<int> owner(d.arcs.size(), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (int a : p.parts[i]) {
      if (owner[a] >= 0) {
        return violation("arc " + std::to_string(a) + " appears in parts " +
                         std::to_string(owner[a]) + " and " + std::to_string(i));
      }
      owner[a] = static_cast<int>(i);
    }
  }
  for (std::size_t a = 0; a < owner.size(); ++a) {
    if (owner[a] < 0) {
      return violation("arc " + std::to_string(a) + " is not covered by any part");
    }
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    DisjointSets dsu(d.vertex_count);
    std::vector<int> indegree(static_cast<std::size_t>(d.vertex_count), 0);
    for (int a : p.parts[i]) {
      dsu.unite(d.arcs[a].tail, d.arcs[a].head);
      ++indegree[d.arcs[a].head];  // loops count
    }
    if (d.vertex_count > 1 && dsu.component_count() != 1) {
      for (int v = 1; v < d.vertex_count; ++v) {
        if (!dsu.connected(0, v)) {
          return violation("part " + std::to_string(i) + " not weakly connected spanning: vertex " +
                           std::to_string(v) + " is cut off from vertex 0" +
                           (p.parts[i].empty() ? " (empty part)" : ""));
        }
      }
    }
    for (int v = 0; v < d.vertex_count; ++v) {
      if (v != d.root && indegree[v] == 0) {
        return violation("vertex " + std::to_string(v) + " has in-degree 0 in part " +
                         std::to_string(i));
      }
    }
  }
  return {};
}

VerifyResult verify_parity_packing(const PairedGraph& g, const TreePacking& p) {
  check_indices(p.trees, static_cast<int>(g.edges.size()), "edge");
  for (std::size_t t = 0; t < p.trees.size(); ++t) {
    std::vector<int> pair_hits(static_cast<std::size_t>(g.pair_count), 0);
    for (int e : p.trees[t]) ++pair_hits[g.pair_ids[e]];
    for (int q = 0; q < g.pair_count; ++q) {
      if (pair_hits[q] == 1) {
        return violation("broken pair " + std::to_string(q) + ": tree " + std::to_string(t) +
                         " contains only one of its edges");
      }
    }
    const VerifyResult shape =
        check_spanning_tree(g.vertex_count, g.edges, p.trees[t], static_cast<int>(t));
    if (!shape.ok) return shape;
  }
  return check_disjoint(p.trees, static_cast<int>(g.edges.size()), "edge");
}

}  // namespace rainbow
