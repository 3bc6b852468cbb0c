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

#include "rainbow/reductions.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/verify.hpp"
#include "text_util.hpp"

namespace rainbow {

namespace {

void require_paper_normal_form(const EdgeColoredGraph& g, const char* what) {
  validate(g);
  if (!is_paper_normal_form(g)) {
    throw InstanceError(std::string(what) +
                        ": instance is not in paper-normal form "
                        "(two-tree union with color classes of size two)");
  }
}

// The two edges of every color class, lower id first. Only meaningful for
// paper-normal-form inputs.
std::vector<std::array<int, 2>> class_pairs(const EdgeColoredGraph& g) {
  std::vector<std::vector<int>> members(static_cast<std::size_t>(g.color_count));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    members[g.colors[e]].push_back(e);
  }
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(members.size());
  for (const auto& m : members) pairs.push_back({m[0], m[1]});
  return pairs;
}

}  // namespace

std::pair<EdgeColoredGraph, Nae2RstMap> reduce_nae_to_rst(const NaeFormula& f) {
  validate(f);
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  {
    std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
    for (const auto& c : f.clauses) {
      for (int v : c) ++occurrences[v];
    }
    for (int v = 0; v < n; ++v) {
      if (occurrences[v] != 4) {
        throw InstanceError("reduce nae2rst: variable " + std::to_string(v + 1) + " occurs " +
                            std::to_string(occurrences[v]) + " times, expected exactly 4");
      }
    }
  }

  Nae2RstMap map;
  map.source = f;
  map.root = 0;
  map.blocks.resize(static_cast<std::size_t>(n));
  map.clause_blocks.resize(static_cast<std::size_t>(m));

  // Vertex layout: root, then per variable four (u,v,w,z) blocks, then the
  // clause triangles.
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      const int base = 1 + 16 * i + 4 * p;
      auto& block = map.blocks[i][p];
      block.u = base;
      block.v = base + 1;
      block.w = base + 2;
      block.z = base + 3;
    }
  }
  for (int j = 0; j < m; ++j) {
    const int base = 1 + 16 * n + 3 * j;
    map.clause_blocks[j].c = {base, base + 1, base + 2};
  }

  // Occurrence slots: clause index ascending, position within the clause
  // ascending.
  {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < m; ++j) {
      for (int q = 0; q < 3; ++q) {
        const int variable = f.clauses[j][q];
        auto& block = map.blocks[variable][seen[variable]];
        block.clause = j;
        block.slot = q;
        ++seen[variable];
      }
    }
  }

  EdgeColoredGraph g;
  g.vertex_count = 16 * n + 3 * m + 1;
  g.color_count = 20 * n;
  auto add_edge = [&g](int u, int v) {
    g.edges.push_back({u, v});
    g.colors.push_back(-1);
    return static_cast<int>(g.edges.size()) - 1;
  };

  // Edges: root pairs, K4 blocks, clause triangles, z-to-clause edges.
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      auto& block = map.blocks[i][p];
      block.root_edge1 = add_edge(0, block.u);
      block.root_edge2 = add_edge(0, block.u);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      auto& block = map.blocks[i][p];
      block.uv = add_edge(block.u, block.v);
      block.uw = add_edge(block.u, block.w);
      block.uz = add_edge(block.u, block.z);
      block.vw = add_edge(block.v, block.w);
      block.vz = add_edge(block.v, block.z);
      block.wz = add_edge(block.w, block.z);
    }
  }
  for (int j = 0; j < m; ++j) {
    auto& clause = map.clause_blocks[j];
    for (int q = 0; q < 3; ++q) {
      clause.tri_edge[q] = add_edge(clause.c[q], clause.c[(q + 1) % 3]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      auto& block = map.blocks[i][p];
      block.z_edge = add_edge(block.z, map.clause_blocks[block.clause].c[block.slot]);
    }
  }

  // Color classes of size two: one per root pair, then the four patterns per
  // occurrence. Pattern two couples into the cyclically next block.
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      auto& block = map.blocks[i][p];
      block.root_class = 4 * i + p;
      g.colors[block.root_edge1] = block.root_class;
      g.colors[block.root_edge2] = block.root_class;
      const int base = 4 * n + 16 * i + 4 * p;
      block.wz_class = base;
      block.vz_class = base + 1;
      block.uz_class = base + 2;
      block.uw_class = base + 3;
      g.colors[block.wz] = block.wz_class;
      g.colors[block.z_edge] = block.wz_class;
      g.colors[block.vz] = block.vz_class;
      g.colors[map.blocks[i][(p + 1) % 4].uv] = block.vz_class;
      g.colors[block.uz] = block.uz_class;
      g.colors[block.vw] = block.uz_class;
      g.colors[block.uw] = block.uw_class;
      g.colors[map.clause_blocks[block.clause].tri_edge[block.slot]] = block.uw_class;
    }
  }
  validate(g);
  map.reduced = g;
  return {std::move(g), std::move(map)};
}

TreePacking assignment_to_packing(const Nae2RstMap& map, const Assignment& a) {
  if (static_cast<int>(a.values.size()) != map.source.variable_count) {
    throw PreconditionError("assignment length does not match the source formula");
  }
  if (!nae_satisfies(map.source, a)) {
    throw PreconditionError("assignment is not NAE-satisfying; the mapping is only defined "
                            "for satisfying assignments");
  }
  std::vector<char> in_first(map.reduced.edges.size(), 0);
  for (int i = 0; i < map.source.variable_count; ++i) {
    for (int p = 0; p < 4; ++p) {
      const auto& block = map.blocks[i][p];
      in_first[block.root_edge1] = 1;
      if (a.values[i]) {
        in_first[block.uw] = 1;
        in_first[block.uz] = 1;
        in_first[block.vz] = 1;
        in_first[block.z_edge] = 1;
      } else {
        in_first[block.uv] = 1;
        in_first[block.vw] = 1;
        in_first[block.wz] = 1;
        in_first[map.clause_blocks[block.clause].tri_edge[block.slot]] = 1;
      }
    }
  }
  TreePacking p;
  p.trees.assign(2, {});
  for (std::size_t e = 0; e < in_first.size(); ++e) {
    p.trees[in_first[e] ? 0 : 1].push_back(static_cast<int>(e));
  }
  const VerifyResult check = verify_rainbow_packing(map.reduced, p, /*require_partition=*/true);
  if (!check.ok) {
    throw InternalError("assignment mapping produced an invalid packing: " + check.reason);
  }
  return p;
}

Assignment packing_to_assignment(const Nae2RstMap& map, const TreePacking& p) {
  if (p.trees.size() != 2) {
    throw PreconditionError("packing must consist of exactly two trees");
  }
  const VerifyResult check = verify_rainbow_packing(map.reduced, p, /*require_partition=*/true);
  if (!check.ok) {
    throw PreconditionError("packing is not a partition into two rainbow spanning trees: " +
                            check.reason);
  }
  std::vector<char> in_first(map.reduced.edges.size(), 0);
  for (int e : p.trees[0]) in_first[e] = 1;
  Assignment a;
  a.values.resize(static_cast<std::size_t>(map.source.variable_count));
  for (int i = 0; i < map.source.variable_count; ++i) {
    const bool first = in_first[map.blocks[i][0].z_edge];
    for (int q = 1; q < 4; ++q) {
      if (static_cast<bool>(in_first[map.blocks[i][q].z_edge]) != first) {
        throw InternalError("variable " + std::to_string(i + 1) +
                            ": z-edges split across both trees, which contradicts the "
                            "structure of valid packings");
      }
    }
    a.values[i] = first;
  }
  if (!nae_satisfies(map.source, a)) {
    throw InternalError("extracted assignment fails a clause, which contradicts the "
                        "structure of valid packings");
  }
  return a;
}

Digraph orient_indegree_two(int vertex_count, const std::vector<Edge>& edges, int root) {
  if (vertex_count <= 0) throw InstanceError("orientation: vertex count must be positive");
  if (root < 0 || root >= vertex_count) throw InstanceError("orientation: root out of range");
  if (static_cast<int>(edges.size()) != 2 * (vertex_count - 1)) {
    throw InstanceError("orientation: need |E| = 2(|V|-1), got " + std::to_string(edges.size()));
  }
  Digraph d;
  d.vertex_count = vertex_count;
  d.root = root;
  if (vertex_count == 1) return d;

  const Matroid graphic = Matroid::graphic(vertex_count, edges);
  const std::optional<int> packing = packing_number(graphic);
  if (!packing.has_value() || *packing < 2) {
    throw InstanceError("orientation: edge set is not a union of two spanning trees");
  }
  std::vector<int> all(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) all[e] = static_cast<int>(e);
  const std::vector<Matroid> copies{graphic, graphic};
  const auto trees = matroid_union_partition(copies, all);

  d.arcs.resize(edges.size());
  for (const std::vector<int>& tree : trees) {
    std::vector<std::vector<std::pair<int, int>>> adjacency(
        static_cast<std::size_t>(vertex_count));
    for (int e : tree) {
      adjacency[edges[e].u].push_back({edges[e].v, e});
      adjacency[edges[e].v].push_back({edges[e].u, e});
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const auto& [y, e] : adjacency[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          d.arcs[e] = {x, y};
          queue.push_back(y);
        }
      }
    }
  }
  return d;
}

std::pair<Digraph, Rst2DigMap> reduce_rst_to_digraph(const EdgeColoredGraph& g, int root) {
  require_paper_normal_form(g, "reduce rst2dig");
  if (root < 0 || root >= g.vertex_count) {
    throw InstanceError("reduce rst2dig: root out of range");
  }
  Rst2DigMap map;
  map.source = g;
  map.source_root = root;
  map.orientation = orient_indegree_two(g.vertex_count, g.edges, root);

  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());
  const auto classes = class_pairs(g);

  // New vertex ids: the root keeps 0; every other vertex v expands to
  // (v_in1, v_in2, v_out); one gadget vertex per color class.
  map.vertex_in1.assign(static_cast<std::size_t>(n), -1);
  map.vertex_in2.assign(static_cast<std::size_t>(n), -1);
  map.vertex_out.assign(static_cast<std::size_t>(n), -1);
  int next_id = 1;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    map.vertex_in1[v] = next_id++;
    map.vertex_in2[v] = next_id++;
    map.vertex_out[v] = next_id++;
  }
  Digraph d;
  d.root = 0;
  d.vertex_count = next_id + static_cast<int>(classes.size());

  // Image arcs first, so arc e is the image of edge e. Of the two oriented
  // edges entering v, the one leaving the root takes the first slot (both
  // may, giving two arcs from the root); otherwise slots follow edge ids.
  std::vector<std::array<int, 2>> entering(static_cast<std::size_t>(n), {-1, -1});
  for (int e = 0; e < m; ++e) {
    const int head = map.orientation.arcs[e].head;
    if (entering[head][0] < 0) {
      entering[head][0] = e;
    } else {
      entering[head][1] = e;
    }
  }
  d.arcs.resize(static_cast<std::size_t>(m));
  std::vector<int> image_head(static_cast<std::size_t>(m));
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    int first = entering[v][0];
    int second = entering[v][1];
    if (map.orientation.arcs[second].tail == root && map.orientation.arcs[first].tail != root) {
      std::swap(first, second);
    }
    const std::array<int, 2> slots = {first, second};
    for (int s = 0; s < 2; ++s) {
      const int e = slots[s];
      const int tail = map.orientation.arcs[e].tail;
      const int new_tail = (tail == root) ? 0 : map.vertex_out[tail];
      const int new_head = (s == 0) ? map.vertex_in1[v] : map.vertex_in2[v];
      d.arcs[e] = {new_tail, new_head};
      image_head[e] = new_head;
    }
  }
  // Two parallel arcs from each v_in slot to v_out.
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    d.arcs.push_back({map.vertex_in1[v], map.vertex_out[v]});
    d.arcs.push_back({map.vertex_in1[v], map.vertex_out[v]});
    d.arcs.push_back({map.vertex_in2[v], map.vertex_out[v]});
    d.arcs.push_back({map.vertex_in2[v], map.vertex_out[v]});
  }
  // Per color class: a gadget vertex with one arc toward each image head and
  // two loops.
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Rst2DigMap::ClassGadget gadget;
    gadget.w = next_id + static_cast<int>(c);
    gadget.out1 = static_cast<int>(d.arcs.size());
    d.arcs.push_back({gadget.w, image_head[classes[c][0]]});
    gadget.out2 = static_cast<int>(d.arcs.size());
    d.arcs.push_back({gadget.w, image_head[classes[c][1]]});
    gadget.loop1 = static_cast<int>(d.arcs.size());
    d.arcs.push_back({gadget.w, gadget.w});
    gadget.loop2 = static_cast<int>(d.arcs.size());
    d.arcs.push_back({gadget.w, gadget.w});
    map.gadgets.push_back(gadget);
  }
  validate(d);
  map.reduced = d;
  return {std::move(d), std::move(map)};
}

ArcPartition packing_to_arc_partition(const Rst2DigMap& map, const TreePacking& p) {
  if (p.trees.size() != 2) {
    throw PreconditionError("packing must consist of exactly two trees");
  }
  const VerifyResult check = verify_rainbow_packing(map.source, p, /*require_partition=*/true);
  if (!check.ok) {
    throw PreconditionError("packing is not a partition into two rainbow spanning trees: " +
                            check.reason);
  }
  const int m = static_cast<int>(map.source.edges.size());
  std::vector<char> in_first(static_cast<std::size_t>(m), 0);
  for (int e : p.trees[0]) in_first[e] = 1;

  ArcPartition result;
  result.parts.assign(2, {});
  // Images follow their edges; each parallel pair and each loop pair splits
  // by id; the gadget arc toward a head goes opposite to that head's image.
  for (int e = 0; e < m; ++e) {
    result.parts[in_first[e] ? 0 : 1].push_back(e);
  }
  const int parallel_base = m;
  int offset = 0;
  for (int v = 0; v < map.source.vertex_count; ++v) {
    if (v == map.source_root) continue;
    result.parts[0].push_back(parallel_base + offset);
    result.parts[1].push_back(parallel_base + offset + 1);
    result.parts[0].push_back(parallel_base + offset + 2);
    result.parts[1].push_back(parallel_base + offset + 3);
    offset += 4;
  }
  const auto classes = class_pairs(map.source);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& gadget = map.gadgets[c];
    result.parts[0].push_back(gadget.loop1);
    result.parts[1].push_back(gadget.loop2);
    if (in_first[classes[c][0]]) {
      // The first tree holds edge e, so its part still misses the head fed
      // by the second edge's image.
      result.parts[0].push_back(gadget.out2);
      result.parts[1].push_back(gadget.out1);
    } else {
      result.parts[0].push_back(gadget.out1);
      result.parts[1].push_back(gadget.out2);
    }
  }
  for (auto& part : result.parts) std::sort(part.begin(), part.end());
  const VerifyResult mapped = verify_digraph_decomposition(map.reduced, result);
  if (!mapped.ok) {
    throw InternalError("mapped arc partition is invalid: " + mapped.reason);
  }
  return result;
}

TreePacking arc_partition_to_packing(const Rst2DigMap& map, const ArcPartition& ap) {
  if (ap.parts.size() != 2) {
    throw PreconditionError("arc partition must consist of exactly two parts");
  }
  const VerifyResult check = verify_digraph_decomposition(map.reduced, ap);
  if (!check.ok) {
    throw PreconditionError("arc partition is not a valid decomposition: " + check.reason);
  }
  // Images carry the edge ids, so the trees are the low arc ids of the parts.
  const int m = static_cast<int>(map.source.edges.size());
  TreePacking result;
  result.trees.assign(2, {});
  for (int t = 0; t < 2; ++t) {
    for (int a : ap.parts[t]) {
      if (a < m) result.trees[t].push_back(a);
    }
    std::sort(result.trees[t].begin(), result.trees[t].end());
  }
  const VerifyResult mapped = verify_rainbow_packing(map.source, result, /*require_partition=*/true);
  if (!mapped.ok) {
    throw InternalError("recovered rainbow packing is invalid: " + mapped.reason);
  }
  return result;
}

std::pair<PairedGraph, Rst2ParityMap> reduce_rst_to_parity(const EdgeColoredGraph& g) {
  require_paper_normal_form(g, "reduce rst2parity");
  Rst2ParityMap map;
  map.source = g;
  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());
  const auto classes = class_pairs(g);

  PairedGraph out;
  out.vertex_count = n + static_cast<int>(classes.size());
  out.pair_count = m;
  out.edges = g.edges;
  out.pair_ids.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) out.pair_ids[e] = e;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Rst2ParityMap::ClassGadget gadget;
    gadget.w = n + static_cast<int>(c);
    gadget.e = classes[c][0];
    gadget.f = classes[c][1];
    const Edge e = g.edges[gadget.e];
    const Edge f = g.edges[gadget.f];
    gadget.e_mate = static_cast<int>(out.edges.size());
    out.edges.push_back({std::min(e.u, e.v), gadget.w});
    out.pair_ids.push_back(gadget.e);
    gadget.f_mate = static_cast<int>(out.edges.size());
    out.edges.push_back({std::min(f.u, f.v), gadget.w});
    out.pair_ids.push_back(gadget.f);
    map.gadgets.push_back(gadget);
  }
  validate(out);
  map.reduced = out;
  return {std::move(out), std::move(map)};
}

TreePacking parity_extend(const Rst2ParityMap& map, const TreePacking& p) {
  if (p.trees.size() != 2) {
    throw PreconditionError("packing must consist of exactly two trees");
  }
  const VerifyResult check = verify_rainbow_packing(map.source, p, /*require_partition=*/true);
  if (!check.ok) {
    throw PreconditionError("packing is not a partition into two rainbow spanning trees: " +
                            check.reason);
  }
  std::vector<int> mate(map.source.edges.size());
  for (const auto& gadget : map.gadgets) {
    mate[gadget.e] = gadget.e_mate;
    mate[gadget.f] = gadget.f_mate;
  }
  TreePacking result;
  result.trees.assign(2, {});
  for (int t = 0; t < 2; ++t) {
    for (int e : p.trees[t]) {
      result.trees[t].push_back(e);
      result.trees[t].push_back(mate[e]);
    }
    std::sort(result.trees[t].begin(), result.trees[t].end());
  }
  const VerifyResult mapped = verify_parity_packing(map.reduced, result);
  if (!mapped.ok) {
    throw InternalError("extended parity packing is invalid: " + mapped.reason);
  }
  return result;
}

TreePacking parity_restrict(const Rst2ParityMap& map, const TreePacking& p) {
  if (p.trees.size() != 2) {
    throw PreconditionError("packing must consist of exactly two trees");
  }
  const VerifyResult check = verify_parity_packing(map.reduced, p);
  if (!check.ok) {
    throw PreconditionError("certificate is not a valid parity packing: " + check.reason);
  }
  const int m = static_cast<int>(map.source.edges.size());
  TreePacking result;
  result.trees.assign(2, {});
  for (int t = 0; t < 2; ++t) {
    for (int e : p.trees[t]) {
      if (e < m) result.trees[t].push_back(e);
    }
    std::sort(result.trees[t].begin(), result.trees[t].end());
  }
  const VerifyResult mapped = verify_rainbow_packing(map.source, result, /*require_partition=*/true);
  if (!mapped.ok) {
    throw InternalError("restricted rainbow packing is invalid: " + mapped.reason);
  }
  return result;
}

std::optional<Assignment> nae_bruteforce(const NaeFormula& f, int variable_cap) {
  validate(f);
  if (f.variable_count > variable_cap) {
    throw SizeError("nae brute force: " + std::to_string(f.variable_count) +
                    " variables exceed the cap " + std::to_string(variable_cap));
  }
  const std::uint64_t total = std::uint64_t{1} << f.variable_count;
  Assignment a;
  a.values.resize(static_cast<std::size_t>(f.variable_count));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 0; v < f.variable_count; ++v) a.values[v] = (mask >> v) & 1;
    if (nae_satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace rainbow
