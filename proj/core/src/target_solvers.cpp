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

#include "rainbow/target_solvers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "rainbow/dsu.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

ArcPartition empty_partition(int k) {
  ArcPartition p;
  p.parts.assign(static_cast<std::size_t>(k), {});
  return p;
}

TreePacking empty_packing(int k) {
  TreePacking p;
  p.trees.assign(static_cast<std::size_t>(k), {});
  return p;
}

// Exact search for the digraph decomposition. Mutually parallel arcs are
// interchangeable in every constraint, so the unit of branching is a
// parallel group together with a sorted multiset of parts; this visits one
// representative per renaming of parallel arcs. Pruning is by necessary
// conditions only: every non-root vertex needs an in-arc per part, every
// vertex needs a non-loop incident arc per part (when |U| > 1), and each
// part plus all unassigned arcs must still connect the vertex set.
class DigraphDecomposition {
 public:
  DigraphDecomposition(const Digraph& d, int k, std::uint64_t budget)
      : digraph_(d), k_(k), budget_(budget) {
    const int n = d.vertex_count;
    // Group arcs by (tail, head).
    std::vector<int> by_endpoints(d.arcs.size());
    std::iota(by_endpoints.begin(), by_endpoints.end(), 0);
    std::sort(by_endpoints.begin(), by_endpoints.end(), [&](int a, int b) {
      const Arc& x = d.arcs[a];
      const Arc& y = d.arcs[b];
      if (x.tail != y.tail) return x.tail < y.tail;
      if (x.head != y.head) return x.head < y.head;
      return a < b;
    });
    for (std::size_t i = 0; i < by_endpoints.size();) {
      std::size_t j = i;
      Group group;
      group.tail = d.arcs[by_endpoints[i]].tail;
      group.head = d.arcs[by_endpoints[i]].head;
      while (j < by_endpoints.size() && d.arcs[by_endpoints[j]].tail == group.tail &&
             d.arcs[by_endpoints[j]].head == group.head) {
        group.arcs.push_back(by_endpoints[j]);
        ++j;
      }
      std::sort(group.arcs.begin(), group.arcs.end());
      groups_.push_back(std::move(group));
      i = j;
    }
    group_choice_.assign(groups_.size(), -1);

    assigned_in_.assign(static_cast<std::size_t>(n) * k_, 0);
    assigned_inc_.assign(static_cast<std::size_t>(n) * k_, 0);
    unassigned_in_.assign(static_cast<std::size_t>(n), 0);
    unassigned_inc_.assign(static_cast<std::size_t>(n), 0);
    for (const Group& g : groups_) {
      const int size = static_cast<int>(g.arcs.size());
      unassigned_in_[g.head] += size;
      if (g.tail != g.head) {
        unassigned_inc_[g.tail] += size;
        unassigned_inc_[g.head] += size;
      }
    }

    // All sorted multisets of a given size over parts 0..k-1, sorted lists.
    int max_group = 0;
    for (const Group& g : groups_) max_group = std::max(max_group, static_cast<int>(g.arcs.size()));
    multisets_.resize(static_cast<std::size_t>(max_group) + 1);
    std::vector<int> current;
    auto build = [&](auto&& self, int size, int min_part) -> void {
      if (static_cast<int>(current.size()) == size) {
        multisets_[size].push_back(current);
        return;
      }
      for (int p = min_part; p < k_; ++p) {
        current.push_back(p);
        self(self, size, p);
        current.pop_back();
      }
    };
    for (int size = 0; size <= max_group; ++size) {
      current.clear();
      build(build, size, 0);
    }
  }

  std::optional<ArcPartition> run() {
    if (!dfs()) return std::nullopt;
    ArcPartition result = empty_partition(k_);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      const auto& multiset = multisets_[groups_[g].arcs.size()][group_choice_[g]];
      for (std::size_t i = 0; i < multiset.size(); ++i) {
        result.parts[multiset[i]].push_back(groups_[g].arcs[i]);
      }
    }
    for (auto& part : result.parts) std::sort(part.begin(), part.end());
    return result;
  }

 private:
  struct Group {
    int tail = 0;
    int head = 0;
    std::vector<int> arcs;
  };

  int idx(int vertex, int part) const { return vertex * k_ + part; }

  void apply(int g, int choice) {
    group_choice_[g] = choice;
    const Group& group = groups_[g];
    const auto& multiset = multisets_[group.arcs.size()][choice];
    const int size = static_cast<int>(group.arcs.size());
    unassigned_in_[group.head] -= size;
    if (group.tail != group.head) {
      unassigned_inc_[group.tail] -= size;
      unassigned_inc_[group.head] -= size;
    }
    for (int p : multiset) {
      ++assigned_in_[idx(group.head, p)];
      if (group.tail != group.head) {
        ++assigned_inc_[idx(group.tail, p)];
        ++assigned_inc_[idx(group.head, p)];
      }
    }
  }

  void undo(int g) {
    const Group& group = groups_[g];
    const auto& multiset = multisets_[group.arcs.size()][group_choice_[g]];
    const int size = static_cast<int>(group.arcs.size());
    unassigned_in_[group.head] += size;
    if (group.tail != group.head) {
      unassigned_inc_[group.tail] += size;
      unassigned_inc_[group.head] += size;
    }
    for (int p : multiset) {
      --assigned_in_[idx(group.head, p)];
      if (group.tail != group.head) {
        --assigned_inc_[idx(group.tail, p)];
        --assigned_inc_[idx(group.head, p)];
      }
    }
    group_choice_[g] = -1;
  }

  // Counting feasibility at every vertex.
  bool counts_feasible() const {
    const int n = digraph_.vertex_count;
    for (int v = 0; v < n; ++v) {
      if (v != digraph_.root) {
        int lacking = 0;
        for (int p = 0; p < k_; ++p) {
          if (assigned_in_[idx(v, p)] == 0) ++lacking;
        }
        if (lacking > unassigned_in_[v]) return false;
      }
      if (n > 1) {
        int lacking = 0;
        for (int p = 0; p < k_; ++p) {
          if (assigned_inc_[idx(v, p)] == 0) ++lacking;
        }
        if (lacking > unassigned_inc_[v]) return false;
      }
    }
    return true;
  }

  bool connectivity_feasible() const {
    const int n = digraph_.vertex_count;
    if (n <= 1) return true;
    for (int p = 0; p < k_; ++p) {
      DisjointSets dsu(n);
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        const Group& group = groups_[g];
        if (group.tail == group.head) continue;
        if (group_choice_[g] < 0) {
          dsu.unite(group.tail, group.head);
        } else {
          for (int q : multisets_[group.arcs.size()][group_choice_[g]]) {
            if (q == p) {
              dsu.unite(group.tail, group.head);
              break;
            }
          }
        }
      }
      if (dsu.component_count() != 1) return false;
    }
    return true;
  }

  // Fail-first: the unassigned group touching the tightest vertex.
  int pick_group() const {
    int best = -1;
    int best_slack = 1 << 30;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (group_choice_[g] >= 0) continue;
      const Group& group = groups_[g];
      int slack = 1 << 30;
      const int head = group.head;
      if (head != digraph_.root) {
        int lacking = 0;
        for (int p = 0; p < k_; ++p) {
          if (assigned_in_[idx(head, p)] == 0) ++lacking;
        }
        if (lacking > 0) slack = std::min(slack, unassigned_in_[head] - lacking);
      }
      for (int v : {group.tail, group.head}) {
        if (group.tail == group.head) break;  // loops give no incidence
        int lacking = 0;
        for (int p = 0; p < k_; ++p) {
          if (assigned_inc_[idx(v, p)] == 0) ++lacking;
        }
        if (lacking > 0) slack = std::min(slack, unassigned_inc_[v] - lacking);
      }
      if (slack < best_slack) {
        best_slack = slack;
        best = static_cast<int>(g);
        if (best_slack <= 0) break;
      }
    }
    return best;
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      throw ResourceError("digraph decomposition: search budget exhausted after " +
                          std::to_string(nodes_ - 1) + " nodes");
    }
    if (!counts_feasible()) return false;
    if (!connectivity_feasible()) return false;
    const int g = pick_group();
    if (g < 0) return true;
    const auto& options = multisets_[groups_[g].arcs.size()];
    for (std::size_t choice = 0; choice < options.size(); ++choice) {
      apply(g, static_cast<int>(choice));
      if (dfs()) return true;
      undo(g);
    }
    return false;
  }

  const Digraph& digraph_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Group> groups_;
  std::vector<int> group_choice_;                // index into multisets_[size]
  std::vector<std::vector<std::vector<int>>> multisets_;
  std::vector<int> assigned_in_;                 // vertex x part
  std::vector<int> assigned_inc_;                // vertex x part, loops excluded
  std::vector<int> unassigned_in_;
  std::vector<int> unassigned_inc_;
};

// Exact search for parity tree packing: each pair goes wholly into one tree
// or stays unused.
class ParityPackSearch {
 public:
  ParityPackSearch(const PairedGraph& g, int k, std::uint64_t budget)
      : graph_(g), k_(k), budget_(budget), pair_edges_(static_cast<std::size_t>(g.pair_count)) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      pair_edges_[g.pair_ids[e]].push_back(e);
    }
    for (int t = 0; t < k; ++t) forests_.emplace_back(g.vertex_count);
    sizes_.assign(static_cast<std::size_t>(k), 0);
    choice_.assign(static_cast<std::size_t>(g.pair_count), -2);  // -2 undecided, -1 unused
  }

  std::optional<TreePacking> run() {
    if (!dfs(0)) return std::nullopt;
    TreePacking p = empty_packing(k_);
    for (int q = 0; q < graph_.pair_count; ++q) {
      if (choice_[q] >= 0) {
        for (int e : pair_edges_[q]) p.trees[choice_[q]].push_back(e);
      }
    }
    for (auto& tree : p.trees) std::sort(tree.begin(), tree.end());
    return p;
  }

 private:
  int tree_target() const { return graph_.vertex_count - 1; }

  bool deficits_coverable(int position) const {
    int deficit = 0;
    for (int t = 0; t < k_; ++t) deficit += tree_target() - sizes_[t];
    return deficit <= 2 * (graph_.pair_count - position);
  }

  bool connectivity_possible(int position) const {
    for (int t = 0; t < k_; ++t) {
      DisjointSets dsu(graph_.vertex_count);
      for (int q = 0; q < graph_.pair_count; ++q) {
        const bool contributes = (q >= position) ? true : (choice_[q] == t);
        if (!contributes) continue;
        for (int e : pair_edges_[q]) dsu.unite(graph_.edges[e].u, graph_.edges[e].v);
      }
      if (dsu.component_count() != 1) return false;
    }
    return true;
  }

  bool dfs(int position) {
    if (++nodes_ > budget_) {
      throw ResourceError("parity packing: search budget exhausted after " +
                          std::to_string(nodes_ - 1) + " nodes");
    }
    if (!deficits_coverable(position)) return false;
    if (position == graph_.pair_count) {
      for (int t = 0; t < k_; ++t) {
        if (sizes_[t] != tree_target()) return false;
      }
      return true;
    }
    if (!connectivity_possible(position)) return false;
    const auto& edges = pair_edges_[position];
    const Edge first = graph_.edges[edges[0]];
    const Edge second = graph_.edges[edges[1]];
    for (int t = 0; t < k_; ++t) {
      if (t > opened_) break;  // tree labels are interchangeable
      if (sizes_[t] + 2 > tree_target()) continue;
      auto& forest = forests_[t];
      const int mark = forest.checkpoint();
      if (!forest.unite(first.u, first.v)) continue;
      if (!forest.unite(second.u, second.v)) {
        forest.rollback(mark);
        continue;
      }
      sizes_[t] += 2;
      choice_[position] = t;
      const bool newly_opened = (t == opened_);
      if (newly_opened) ++opened_;
      if (dfs(position + 1)) return true;
      if (newly_opened) --opened_;
      choice_[position] = -2;
      sizes_[t] -= 2;
      forest.rollback(mark);
    }
    choice_[position] = -1;  // unused
    if (dfs(position + 1)) return true;
    choice_[position] = -2;
    return false;
  }

  const PairedGraph& graph_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int opened_ = 0;
  std::vector<std::vector<int>> pair_edges_;
  std::vector<RollbackDisjointSets> forests_;
  std::vector<int> sizes_;
  std::vector<int> choice_;
};

}  // namespace

std::optional<ArcPartition> decompose_digraph(const Digraph& d, int k,
                                              std::uint64_t node_budget) {
  validate(d);
  if (k < 0) throw InstanceError("digraph decomposition: negative k");
  if (k == 0) return empty_partition(0);
  if (!satisfies_indegree_conditions(d, k)) {
    throw InstanceError("digraph decomposition: instance violates the in-degree conditions "
                        "(root in-degree 0, all others at least " + std::to_string(k) + ")");
  }
  if (k == 1) {
    ArcPartition all = empty_partition(1);
    all.parts[0].resize(d.arcs.size());
    std::iota(all.parts[0].begin(), all.parts[0].end(), 0);
    if (verify_digraph_decomposition(d, all).ok) return all;
    return std::nullopt;
  }
  std::optional<ArcPartition> result = DigraphDecomposition(d, k, node_budget).run();
  if (result && !verify_digraph_decomposition(d, *result).ok) {
    throw InternalError("digraph decomposition produced an invalid certificate");
  }
  return result;
}

std::optional<TreePacking> pack_parity_trees(const PairedGraph& g, int k,
                                             std::uint64_t node_budget) {
  validate(g);
  if (k < 0) throw InstanceError("parity packing: negative k");
  if (k == 0) return empty_packing(0);
  if (g.vertex_count <= 1) return empty_packing(k);
  if ((g.vertex_count - 1) % 2 != 0) return std::nullopt;  // a parity tree has even size
  if (static_cast<int>(g.edges.size()) < k * (g.vertex_count - 1)) return std::nullopt;
  if (!is_connected(g.vertex_count, g.edges)) return std::nullopt;
  std::optional<TreePacking> result = ParityPackSearch(g, k, node_budget).run();
  if (result && !verify_parity_packing(g, *result).ok) {
    throw InternalError("parity packing produced an invalid certificate");
  }
  return result;
}

std::optional<ArcPartition> decompose_digraph_bf(const Digraph& d, int k, int arc_cap) {
  validate(d);
  if (k < 0) throw InstanceError("digraph decomposition: negative k");
  if (static_cast<int>(d.arcs.size()) > arc_cap) {
    throw SizeError("brute-force decomposition: " + std::to_string(d.arcs.size()) +
                    " arcs exceed the cap " + std::to_string(arc_cap));
  }
  if (k == 0) return empty_partition(0);
  const int m = static_cast<int>(d.arcs.size());
  std::vector<int> assignment(static_cast<std::size_t>(m), 0);
  std::optional<ArcPartition> found;
  auto recurse = [&](auto&& self, int arc) -> bool {
    if (arc == m) {
      ArcPartition p = empty_partition(k);
      for (int a = 0; a < m; ++a) p.parts[assignment[a]].push_back(a);
      if (verify_digraph_decomposition(d, p).ok) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (int part = 0; part < k; ++part) {
      assignment[arc] = part;
      if (self(self, arc + 1)) return true;
    }
    return false;
  };
  recurse(recurse, 0);
  return found;
}

std::optional<TreePacking> pack_parity_trees_bf(const PairedGraph& g, int k, int edge_cap) {
  validate(g);
  if (k < 0) throw InstanceError("parity packing: negative k");
  if (static_cast<int>(g.edges.size()) > edge_cap) {
    throw SizeError("brute-force parity packing: " + std::to_string(g.edges.size()) +
                    " edges exceed the cap " + std::to_string(edge_cap));
  }
  if (k == 0) return empty_packing(0);
  std::vector<std::vector<int>> pair_edges(static_cast<std::size_t>(g.pair_count));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    pair_edges[g.pair_ids[e]].push_back(e);
  }
  std::vector<int> choice(static_cast<std::size_t>(g.pair_count), -1);
  std::optional<TreePacking> found;
  auto recurse = [&](auto&& self, int pair) -> bool {
    if (pair == g.pair_count) {
      TreePacking p = empty_packing(k);
      for (int q = 0; q < g.pair_count; ++q) {
        if (choice[q] >= 0) {
          for (int e : pair_edges[q]) p.trees[choice[q]].push_back(e);
        }
      }
      for (auto& tree : p.trees) std::sort(tree.begin(), tree.end());
      if (verify_parity_packing(g, p).ok) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (int t = -1; t < k; ++t) {
      choice[pair] = t;
      if (self(self, pair + 1)) return true;
    }
    choice[pair] = -1;
    return false;
  };
  recurse(recurse, 0);
  return found;
}

bool is_rooted_k_edge_connected(const Digraph& d, int k) {
  validate(d);
  if (k < 0) throw InstanceError("rooted connectivity: negative k");
  if (k == 0) return true;
  const int n = d.vertex_count;
  // Unit-capacity max-flow per sink; stop early once k paths are found.
  struct Residual {
    int to;
    int reverse_index;
    int capacity;
  };
  std::vector<std::vector<Residual>> base(static_cast<std::size_t>(n));
  for (const Arc& a : d.arcs) {
    if (a.tail == a.head) continue;
    base[a.tail].push_back({a.head, static_cast<int>(base[a.head].size()), 1});
    base[a.head].push_back({a.tail, static_cast<int>(base[a.tail].size()) - 1, 0});
  }
  for (int sink = 0; sink < n; ++sink) {
    if (sink == d.root) continue;
    std::vector<std::vector<Residual>> graph = base;
    int flow = 0;
    while (flow < k) {
      std::vector<int> parent_vertex(static_cast<std::size_t>(n), -1);
      std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
      std::deque<int> queue{d.root};
      parent_vertex[d.root] = d.root;
      while (!queue.empty() && parent_vertex[sink] < 0) {
        const int v = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < graph[v].size(); ++i) {
          const Residual& r = graph[v][i];
          if (r.capacity > 0 && parent_vertex[r.to] < 0) {
            parent_vertex[r.to] = v;
            parent_edge[r.to] = static_cast<int>(i);
            queue.push_back(r.to);
          }
        }
      }
      if (parent_vertex[sink] < 0) break;
      for (int v = sink; v != d.root; v = parent_vertex[v]) {
        Residual& forward = graph[parent_vertex[v]][parent_edge[v]];
        --forward.capacity;
        ++graph[v][forward.reverse_index].capacity;
      }
      ++flow;
    }
    if (flow < k) return false;
  }
  return true;
}

}  // namespace rainbow
