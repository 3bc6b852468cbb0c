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
#include "rainbow/rainbow_solver.hpp"

namespace rainbow {

// Partition of the arc set into k weakly connected spanning parts in which
// every non-root vertex has positive in-degree (loops count), or nullopt if
// none exists. Requires the problem-box in-degree shape: root in-degree 0,
// all other in-degrees >= k (InstanceError otherwise). Exact; branches on
// groups of mutually parallel arcs with in-degree, incidence and
// connectivity pruning. Deterministic for a fixed budget.
std::optional<ArcPartition> decompose_digraph(const Digraph& d, int k,
                                              std::uint64_t node_budget = kDefaultNodeBudget);

// k pairwise disjoint parity spanning trees (each tree a union of whole
// pairs), or nullopt. Exact; branches per pair: wholly into one tree or
// unused. Deterministic for a fixed budget.
std::optional<TreePacking> pack_parity_trees(const PairedGraph& g, int k,
                                             std::uint64_t node_budget = kDefaultNodeBudget);

// Independent oracles: full enumeration of part assignments, accepted by the
// verifiers. Refuse more than `cap` arcs/edges.
std::optional<ArcPartition> decompose_digraph_bf(const Digraph& d, int k,
                                                 int arc_cap = kDefaultPackEdgeCap);
std::optional<TreePacking> pack_parity_trees_bf(const PairedGraph& g, int k,
                                                int edge_cap = kDefaultPackEdgeCap);

// True iff k arc-disjoint root->v paths exist for every vertex v != root,
// decided by unit-capacity max-flow per sink.
bool is_rooted_k_edge_connected(const Digraph& d, int k);

}  // namespace rainbow
