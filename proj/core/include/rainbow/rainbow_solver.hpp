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

#include <cstdint>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

// Node budget shared by the exact backtracking solvers. Exceeding it throws
// ResourceError, which is a different outcome than a proven "none".
inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

// Bell-number enumeration cap for the partition criterion.
inline constexpr int kDefaultPartitionCap = 9;

// Brute-force edge cap for the enumeration oracles.
inline constexpr int kDefaultPackEdgeCap = 16;

// One rainbow spanning tree, or nullopt if none exists. Polynomial:
// maximum common independent set of the graphic matroid and the color
// partition matroid, accepted iff it reaches size |V|-1.
std::optional<TreePacking> find_rainbow_spanning_tree(const EdgeColoredGraph& g);

// A vertex partition violating the intersection criterion: fewer than
// |P|-1 colors cross between its blocks. Exists iff the graph has no
// rainbow spanning tree. Enumerates all partitions; refuses more than
// `vertex_cap` vertices.
struct PartitionWitness {
  std::vector<int> block_of;  // block id per vertex
  int block_count = 0;
  int crossing_colors = 0;
};
std::optional<PartitionWitness> partition_criterion_witness(const EdgeColoredGraph& g,
                                                            int vertex_cap = kDefaultPartitionCap);

// k pairwise disjoint rainbow spanning trees, or nullopt if none exist.
// Exact: when |E| = k(|V|-1) with k = 2 and all color classes of size at
// most two, the search makes one binary decision per color class (a
// partition into two rainbow trees must split every class of size two);
// otherwise a generic edge-to-tree backtracker runs. Deterministic for a
// fixed budget.
std::optional<TreePacking> pack_rainbow_trees(const EdgeColoredGraph& g, int k,
                                              std::uint64_t node_budget = kDefaultNodeBudget);

// Independent oracle: enumerates assignments of every edge to one of the k
// trees or "unused", skipping only prefixes that already violate a
// hereditary condition (cycle or repeated color in a tree), and accepts via
// the verifier. Refuses more than `edge_cap` edges.
std::optional<TreePacking> brute_force_pack(const EdgeColoredGraph& g, int k,
                                            int edge_cap = kDefaultPackEdgeCap);

}  // namespace rainbow
