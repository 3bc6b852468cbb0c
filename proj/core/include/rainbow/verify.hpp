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

#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Verdict of a certificate check. On failure, `reason` names the first
// violated condition together with a concrete witness (the repeated color,
// the cycle's edge list, the unreached vertex, ...).
struct VerifyResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Checks that every tree is a spanning tree of g without a repeated color
// and that the trees are pairwise disjoint; with `require_partition` the
// trees must additionally cover every edge. Throws InstanceError for edge
// indices out of range.
VerifyResult verify_rainbow_packing(const EdgeColoredGraph& g, const TreePacking& p,
                                    bool require_partition);

// Checks that the parts partition the arc set, each part is weakly connected
// and spanning, and every non-root vertex has in-degree at least one in
// every part (loops count toward in-degree).
VerifyResult verify_digraph_decomposition(const Digraph& d, const ArcPartition& p);

// Checks that every tree is a spanning tree made of whole pairs and that the
// trees are pairwise disjoint.
VerifyResult verify_parity_packing(const PairedGraph& g, const TreePacking& p);

}  // namespace rainbow
