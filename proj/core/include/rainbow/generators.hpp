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

#include "rainbow/graph.hpp"

namespace rainbow {

// Overlay of two uniformly random spanning trees on `vertex_count` vertices,
// with the 2(vertex_count-1) edges randomly matched into color classes of
// size two. The output is always in paper-normal form. Deterministic in
// (vertex_count, seed).
EdgeColoredGraph gen_two_tree_union(int vertex_count, std::uint64_t seed);

// Random monotone 3-CNF in which every variable occurs in exactly four
// clauses and every clause holds three distinct variables
// (configuration-model sampling, resampling on clauses with repeats).
// Requires n >= 3 and 4n divisible by 3. Deterministic in (n, seed).
NaeFormula gen_nae_exactly4(int variable_count, std::uint64_t seed);

}  // namespace rainbow
