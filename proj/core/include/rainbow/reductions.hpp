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
#include <iosfwd>
#include <optional>
#include <utility>

#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Monotone NAE-3SAT (exactly four occurrences per variable) -> packing two
// rainbow spanning trees.
//
// Layout: root is vertex 0; variable i occupies four K4 blocks (u,v,w,z) at
// 1 + 16i + 4p; clause j occupies a triangle at 1 + 16n + 3j. A variable's
// p-th occurrence is counted clause-index ascending, then position within
// the (sorted) clause ascending. Cyclic indices wrap p: 3 -> 0 and slot
// q: 2 -> 0.
// ---------------------------------------------------------------------------

struct Nae2RstMap {
  struct VariableBlock {
    int u = 0, v = 0, w = 0, z = 0;  // vertex ids of the K4
    int clause = 0;                  // clause of this occurrence
    int slot = 0;                    // position of the variable in that clause
    int root_edge1 = 0, root_edge2 = 0;
    int uv = 0, uw = 0, uz = 0, vw = 0, vz = 0, wz = 0;  // K4 edge ids
    int z_edge = 0;                  // z^i_p -- c^{j_p}_{q_p}
    int root_class = 0;              // color classes touching this block
    int wz_class = 0;                // {wz, z_edge}
    int vz_class = 0;                // {vz, uv of block p+1}
    int uz_class = 0;                // {uz, vw}
    int uw_class = 0;                // {uw, triangle edge (clause, slot)}
  };
  struct ClauseBlock {
    std::array<int, 3> c{};         // triangle vertex ids
    std::array<int, 3> tri_edge{};  // edge q joins c[q] and c[(q+1)%3]
  };

  NaeFormula source;
  EdgeColoredGraph reduced;
  int root = 0;
  std::vector<std::array<VariableBlock, 4>> blocks;  // per variable, per occurrence
  std::vector<ClauseBlock> clause_blocks;
};

// Builds the reduced instance; |V| = 16n + 3m + 1, |E| = 32n + 6m, every
// color class of size two, and the result is in paper-normal form. The
// formula must be monotone with distinct-variable clauses and every variable
// occurring exactly four times (InstanceError naming the offender).
std::pair<EdgeColoredGraph, Nae2RstMap> reduce_nae_to_rst(const NaeFormula& f);

// Claim-1 mapping: a not-all-equal satisfying assignment to a partition into
// two rainbow spanning trees, each of size 20n. PreconditionError if the
// assignment is not NAE-satisfying.
TreePacking assignment_to_packing(const Nae2RstMap& map, const Assignment& a);

// Claim-2 mapping: a verifier-clean two-tree partition to an NAE-satisfying
// assignment; x_i is true iff its z-edges lie in the first tree. All four
// z-edges of a variable must land in one tree; a violation of that (or a
// non-NAE result) raises InternalError since the claim guarantees both.
Assignment packing_to_assignment(const Nae2RstMap& map, const TreePacking& p);

// ---------------------------------------------------------------------------
// Rainbow instance (paper-normal form) -> digraph decomposition.
// ---------------------------------------------------------------------------

// Orients a union of two spanning trees so that every vertex has in-degree
// exactly two except the root with in-degree zero: the edge set splits into
// two spanning trees via matroid union and each tree is oriented away from
// the root. Arc i is the orientation of edge i. InstanceError if the edge
// set is not a union of two spanning trees.
Digraph orient_indegree_two(int vertex_count, const std::vector<Edge>& edges, int root);

struct Rst2DigMap {
  struct ClassGadget {
    int w = 0;                      // gadget vertex
    int out1 = 0, out2 = 0;         // arcs toward the image heads of the class's edges
    int loop1 = 0, loop2 = 0;
  };

  EdgeColoredGraph source;
  int source_root = 0;
  Digraph reduced;
  Digraph orientation;              // over source vertices; arc i orients edge i
  // New ids per source vertex; -1 entries for the root, which keeps id 0.
  std::vector<int> vertex_in1, vertex_in2, vertex_out;
  std::vector<ClassGadget> gadgets; // per color class
  // The image arc of edge e is arc e of the reduced digraph.
};

// Builds the decomposition instance: |U| = 3(|V|-1) + 1 + |E|/2 and
// |F| = 4(|V|-1) + 3|E|; the root has in-degree 0 and every other vertex of
// U has in-degree at least two. InstanceError unless g is in paper-normal
// form.
std::pair<Digraph, Rst2DigMap> reduce_rst_to_digraph(const EdgeColoredGraph& g, int root);

// Claim-3 mapping: a two-tree rainbow partition to a two-part decomposition.
ArcPartition packing_to_arc_partition(const Rst2DigMap& map, const TreePacking& p);

// Claim-4 mapping: a verifier-clean decomposition back to a rainbow
// partition; tree i collects the edges whose image arcs lie in part i.
TreePacking arc_partition_to_packing(const Rst2DigMap& map, const ArcPartition& ap);

// ---------------------------------------------------------------------------
// Rainbow instance (paper-normal form) -> parity tree packing.
// ---------------------------------------------------------------------------

struct Rst2ParityMap {
  struct ClassGadget {
    int w = 0;          // new vertex for this color class
    int e = 0, f = 0;   // the class's edges (original ids)
    int e_mate = 0;     // pendant edge paired with e
    int f_mate = 0;     // pendant edge paired with f
  };

  EdgeColoredGraph source;
  PairedGraph reduced;
  std::vector<ClassGadget> gadgets;  // per color class
  // Original edges keep their ids; pair id of edge e is e itself.
};

// Builds the parity instance: for each color class {e,f} a new vertex w_c
// with pendant edges to the lower-indexed endpoints of e and f, paired as
// {e, e_c} and {f, f_c}. |V'| = |V| + |E|/2 and |E'| = 2|E|. InstanceError
// unless g is in paper-normal form.
std::pair<PairedGraph, Rst2ParityMap> reduce_rst_to_parity(const EdgeColoredGraph& g);

// Forward direction of the Theorem-3 correspondence: extend each rainbow
// tree by the mates of its edges.
TreePacking parity_extend(const Rst2ParityMap& map, const TreePacking& p);

// Backward direction: intersect each parity tree with the original edges.
TreePacking parity_restrict(const Rst2ParityMap& map, const TreePacking& p);

// ---------------------------------------------------------------------------
// NAE brute force.
// ---------------------------------------------------------------------------

inline constexpr int kDefaultNaeVariableCap = 24;

// First NAE-satisfying assignment in increasing bitmask order, or nullopt if
// none exists. Exhaustive over the 2^n assignments; refuses more than
// `variable_cap` variables.
std::optional<Assignment> nae_bruteforce(const NaeFormula& f,
                                         int variable_cap = kDefaultNaeVariableCap);

// ---------------------------------------------------------------------------
// Map sidecars: `map <kind>` header, the source instance, then labeled id
// tables. Loading re-runs the (deterministic) reduction from the embedded
// source and cross-checks every table entry.
// ---------------------------------------------------------------------------

void serialize(std::ostream& out, const Nae2RstMap& map);
void serialize(std::ostream& out, const Rst2DigMap& map);
void serialize(std::ostream& out, const Rst2ParityMap& map);

Nae2RstMap parse_nae2rst_map(std::istream& in);
Rst2DigMap parse_rst2dig_map(std::istream& in);
Rst2ParityMap parse_rst2parity_map(std::istream& in);

}  // namespace rainbow
