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

#include "rainbow/rainbow_solver.hpp"

#include <algorithm>
#include <string>

#include "rainbow/dsu.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

TreePacking empty_packing(int k) {
  TreePacking p;
  p.trees.assign(static_cast<std::size_t>(k), {});
  return p;
}

// Binary search per color class for the forced-partition case: every class
// holds one or two edges, each tree takes exactly one edge of every size-2
// class, and a size-1 class's edge goes to one of the two trees.
class ClassSplitSearch {
 public:
  ClassSplitSearch(const EdgeColoredGraph& g, std::uint64_t budget)
      : graph_(g),
        budget_(budget),
        tree1_(g.vertex_count),
        tree2_(g.vertex_count),
        class_edges_(static_cast<std::size_t>(g.color_count)) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      class_edges_[g.colors[e]].push_back(e);
    }
    choice_.assign(class_edges_.size(), -1);
    // Fail-first branch order: classes whose edges share an endpoint first,
    // ties by class id.
    order_.resize(class_edges_.size());
    for (std::size_t c = 0; c < order_.size(); ++c) order_[c] = static_cast<int>(c);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const bool sa = edges_share_endpoint(a);
      const bool sb = edges_share_endpoint(b);
      if (sa != sb) return sa;
      return a < b;
    });
  }

  std::optional<TreePacking> run() {
    if (dfs(/*first_branch=*/true)) {
      TreePacking p = empty_packing(2);
      for (std::size_t c = 0; c < class_edges_.size(); ++c) {
        const auto& edges = class_edges_[c];
        if (edges.size() == 1) {
          p.trees[choice_[c]].push_back(edges[0]);
        } else {
          p.trees[choice_[c]].push_back(edges[choice_[c] == 0 ? 0 : 1]);
          // For a split class, choice 0 sends the first edge to tree 0.
        }
      }
      // Rebuild cleanly from choices: choice c==0 means first edge in tree 0.
      p = empty_packing(2);
      for (std::size_t c = 0; c < class_edges_.size(); ++c) {
        const auto& edges = class_edges_[c];
        if (edges.size() == 1) {
          p.trees[choice_[c] == 0 ? 0 : 1].push_back(edges[0]);
        } else {
          p.trees[choice_[c] == 0 ? 0 : 1].push_back(edges[0]);
          p.trees[choice_[c] == 0 ? 1 : 0].push_back(edges[1]);
        }
      }
      for (auto& tree : p.trees) std::sort(tree.begin(), tree.end());
      return p;
    }
    return std::nullopt;
  }

 private:
  bool edges_share_endpoint(int c) const {
    const auto& edges = class_edges_[c];
    if (edges.size() != 2) return false;
    const Edge a = graph_.edges[edges[0]];
    const Edge b = graph_.edges[edges[1]];
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  }

  // choice 0: first edge to tree 0 (and for size-2 classes, second to tree
  // 1); choice 1: the other way round.
  bool can_take(int c, int which) const {
    const auto& edges = class_edges_[c];
    if (edges.size() == 1) {
      const Edge e = graph_.edges[edges[0]];
      const auto& tree = (which == 0) ? tree1_ : tree2_;
      return !tree.connected(e.u, e.v);
    }
    const Edge first = graph_.edges[edges[0]];
    const Edge second = graph_.edges[edges[1]];
    const auto& tree_of_first = (which == 0) ? tree1_ : tree2_;
    const auto& tree_of_second = (which == 0) ? tree2_ : tree1_;
    return !tree_of_first.connected(first.u, first.v) &&
           !tree_of_second.connected(second.u, second.v);
  }

  void apply(int c, int which) {
    const auto& edges = class_edges_[c];
    choice_[c] = which;
    assigned_.push_back(c);
    if (edges.size() == 1) {
      const Edge e = graph_.edges[edges[0]];
      ((which == 0) ? tree1_ : tree2_).unite(e.u, e.v);
    } else {
      const Edge first = graph_.edges[edges[0]];
      const Edge second = graph_.edges[edges[1]];
      ((which == 0) ? tree1_ : tree2_).unite(first.u, first.v);
      ((which == 0) ? tree2_ : tree1_).unite(second.u, second.v);
    }
  }

  struct Snapshot {
    int t1;
    int t2;
    std::size_t assigned;
  };

  Snapshot snapshot() const {
    return {tree1_.checkpoint(), tree2_.checkpoint(), assigned_.size()};
  }

  void restore(const Snapshot& snap) {
    tree1_.rollback(snap.t1);
    tree2_.rollback(snap.t2);
    while (assigned_.size() > snap.assigned) {
      choice_[assigned_.back()] = -1;
      assigned_.pop_back();
    }
  }

  // Assigns every class whose two options collapsed to one; returns false on
  // a class with no options left.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < class_edges_.size(); ++c) {
        if (choice_[c] >= 0) continue;
        const bool can0 = can_take(static_cast<int>(c), 0);
        const bool can1 = can_take(static_cast<int>(c), 1);
        if (!can0 && !can1) return false;
        if (can0 != can1) {
          apply(static_cast<int>(c), can0 ? 0 : 1);
          changed = true;
        }
      }
    }
    return true;
  }

  // Both trees must still be completable: tree edges plus every edge of an
  // undecided class have to connect the whole vertex set.
  bool connectivity_possible() const {
    for (int which = 0; which < 2; ++which) {
      DisjointSets dsu(graph_.vertex_count);
      for (std::size_t c = 0; c < class_edges_.size(); ++c) {
        const auto& edges = class_edges_[c];
        if (choice_[c] < 0) {
          for (int e : edges) dsu.unite(graph_.edges[e].u, graph_.edges[e].v);
        } else if (edges.size() == 1) {
          if ((choice_[c] == 0) == (which == 0)) {
            dsu.unite(graph_.edges[edges[0]].u, graph_.edges[edges[0]].v);
          }
        } else {
          const int mine = (choice_[c] == which) ? edges[0] : edges[1];
          dsu.unite(graph_.edges[mine].u, graph_.edges[mine].v);
        }
      }
      if (dsu.component_count() != 1) return false;
    }
    return true;
  }

  bool dfs(bool first_branch) {
    if (++nodes_ > budget_) {
      throw ResourceError("rainbow packing: search budget exhausted after " +
                          std::to_string(nodes_ - 1) + " nodes");
    }
    const Snapshot snap = snapshot();
    if (!propagate()) {
      restore(snap);
      return false;
    }
    if (!connectivity_possible()) {
      restore(snap);
      return false;
    }
    int branch_class = -1;
    for (int c : order_) {
      if (choice_[c] < 0) {
        branch_class = c;
        break;
      }
    }
    if (branch_class < 0) return true;  // everything assigned, both trees acyclic and complete
    // Swapping the two trees maps choice 0 to choice 1 everywhere, so the
    // first branched class only needs one side.
    const int last_choice = first_branch ? 0 : 1;
    for (int which = 0; which <= last_choice; ++which) {
      if (!can_take(branch_class, which)) continue;
      const Snapshot inner = snapshot();
      apply(branch_class, which);
      if (dfs(false)) return true;
      restore(inner);
    }
    restore(snap);
    return false;
  }

  const EdgeColoredGraph& graph_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  RollbackDisjointSets tree1_;
  RollbackDisjointSets tree2_;
  std::vector<std::vector<int>> class_edges_;
  std::vector<int> choice_;
  std::vector<int> assigned_;
  std::vector<int> order_;
};

// Generic exact search: assigns every edge to one of the k trees or leaves
// it unused. Trees stay forests with distinct colors throughout; a tree may
// only be opened in index order (tree labels are interchangeable).
class GenericPackSearch {
 public:
  GenericPackSearch(const EdgeColoredGraph& g, int k, std::uint64_t budget)
      : graph_(g), k_(k), budget_(budget) {
    for (int t = 0; t < k; ++t) {
      forests_.emplace_back(g.vertex_count);
      color_used_.emplace_back(static_cast<std::size_t>(g.color_count), 0);
    }
    sizes_.assign(static_cast<std::size_t>(k), 0);
    order_.resize(g.edges.size());
    for (std::size_t e = 0; e < order_.size(); ++e) order_[e] = static_cast<int>(e);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.colors[a] < g.colors[b]; });
    assignment_.assign(g.edges.size(), -1);
  }

  std::optional<TreePacking> run() {
    if (dfs(0)) {
      TreePacking p = empty_packing(k_);
      for (std::size_t e = 0; e < assignment_.size(); ++e) {
        if (assignment_[e] > 0) p.trees[assignment_[e] - 1].push_back(static_cast<int>(e));
      }
      for (auto& tree : p.trees) std::sort(tree.begin(), tree.end());
      return p;
    }
    return std::nullopt;
  }

 private:
  int tree_target() const { return graph_.vertex_count - 1; }

  bool deficits_coverable(int position) const {
    int deficit = 0;
    for (int t = 0; t < k_; ++t) deficit += tree_target() - sizes_[t];
    return deficit <= static_cast<int>(order_.size()) - position;
  }

  bool connectivity_possible(int position) const {
    for (int t = 0; t < k_; ++t) {
      DisjointSets dsu(graph_.vertex_count);
      for (std::size_t e = 0; e < assignment_.size(); ++e) {
        const int a = assignment_[e];
        if (a == t + 1) dsu.unite(graph_.edges[e].u, graph_.edges[e].v);
      }
      for (int i = position; i < static_cast<int>(order_.size()); ++i) {
        const Edge e = graph_.edges[order_[i]];
        dsu.unite(e.u, e.v);
      }
      if (dsu.component_count() != 1) return false;
    }
    return true;
  }

  bool dfs(int position) {
    if (++nodes_ > budget_) {
      throw ResourceError("rainbow packing: search budget exhausted after " +
                          std::to_string(nodes_ - 1) + " nodes");
    }
    if (!deficits_coverable(position)) return false;
    if (position == static_cast<int>(order_.size())) {
      for (int t = 0; t < k_; ++t) {
        if (sizes_[t] != tree_target()) return false;
      }
      return true;  // every tree is an acyclic spanning set of size |V|-1
    }
    if (!connectivity_possible(position)) return false;
    const int e = order_[position];
    const Edge edge = graph_.edges[e];
    const int color = graph_.colors[e];
    for (int t = 0; t < k_; ++t) {
      if (t > opened_) break;  // trees open in index order
      if (color_used_[t][color]) continue;
      if (sizes_[t] == tree_target()) continue;
      if (forests_[t].connected(edge.u, edge.v)) continue;
      forests_[t].unite(edge.u, edge.v);
      color_used_[t][color] = 1;
      ++sizes_[t];
      assignment_[e] = t + 1;
      const bool was_newly_opened = (t == opened_);
      if (was_newly_opened) ++opened_;
      if (dfs(position + 1)) return true;
      if (was_newly_opened) --opened_;
      assignment_[e] = -1;
      --sizes_[t];
      color_used_[t][color] = 0;
      forests_[t].rollback(forests_[t].checkpoint() - 1);
    }
    assignment_[e] = 0;  // unused
    if (dfs(position + 1)) return true;
    assignment_[e] = -1;
    return false;
  }

  const EdgeColoredGraph& graph_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int opened_ = 0;
  std::vector<RollbackDisjointSets> forests_;
  std::vector<std::vector<char>> color_used_;
  std::vector<int> sizes_;
  std::vector<int> order_;
  std::vector<int> assignment_;
};

}  // namespace

std::optional<TreePacking> find_rainbow_spanning_tree(const EdgeColoredGraph& g) {
  validate(g);
  if (g.vertex_count <= 1) return empty_packing(1);
  if (!is_connected(g.vertex_count, g.edges)) return std::nullopt;
  const Matroid graphic = Matroid::graphic(g.vertex_count, g.edges);
  const Matroid by_color = Matroid::partition(g.colors);
  std::vector<int> best = max_common_independent(graphic, by_color);
  if (static_cast<int>(best.size()) != g.vertex_count - 1) return std::nullopt;
  std::sort(best.begin(), best.end());
  TreePacking p;
  p.trees.push_back(std::move(best));
  return p;
}

std::optional<PartitionWitness> partition_criterion_witness(const EdgeColoredGraph& g,
                                                            int vertex_cap) {
  validate(g);
  const int n = g.vertex_count;
  if (n > vertex_cap) {
    throw SizeError("partition criterion: " + std::to_string(n) +
                    " vertices exceed the enumeration cap " + std::to_string(vertex_cap));
  }
  if (n <= 1) return std::nullopt;
  // Restricted-growth strings enumerate all vertex partitions.
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  std::vector<char> color_seen(static_cast<std::size_t>(g.color_count), 0);
  std::optional<PartitionWitness> found;

  auto evaluate = [&]() -> bool {
    int blocks = 0;
    for (int v = 0; v < n; ++v) blocks = std::max(blocks, block_of[v] + 1);
    if (blocks == 1) return false;
    std::fill(color_seen.begin(), color_seen.end(), 0);
    int crossing = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (block_of[g.edges[e].u] != block_of[g.edges[e].v] && !color_seen[g.colors[e]]) {
        color_seen[g.colors[e]] = 1;
        ++crossing;
      }
    }
    if (crossing < blocks - 1) {
      found = PartitionWitness{block_of, blocks, crossing};
      return true;
    }
    return false;
  };

  auto enumerate = [&](auto&& self, int vertex, int max_block) -> bool {
    if (vertex == n) return evaluate();
    for (int b = 0; b <= max_block + 1; ++b) {
      block_of[vertex] = b;
      if (self(self, vertex + 1, std::max(max_block, b))) return true;
    }
    return false;
  };
  enumerate(enumerate, 1, 0);  // vertex 0 is always in block 0
  return found;
}

std::optional<TreePacking> pack_rainbow_trees(const EdgeColoredGraph& g, int k,
                                              std::uint64_t node_budget) {
  validate(g);
  if (k < 0) throw InstanceError("rainbow packing: negative k");
  if (k == 0) return empty_packing(0);
  if (g.vertex_count <= 1) return empty_packing(k);
  const int tree_size = g.vertex_count - 1;
  if (static_cast<int>(g.edges.size()) < k * tree_size) return std::nullopt;
  if (!is_connected(g.vertex_count, g.edges)) return std::nullopt;
  if (k == 1) return find_rainbow_spanning_tree(g);

  if (k == 2 && static_cast<int>(g.edges.size()) == 2 * tree_size) {
    // Disjointness forces a partition here, so a color class of size three
    // or more would repeat a color inside one of the trees.
    std::vector<int> class_size(static_cast<std::size_t>(g.color_count), 0);
    for (int c : g.colors) ++class_size[c];
    if (std::any_of(class_size.begin(), class_size.end(), [](int s) { return s > 2; })) {
      return std::nullopt;
    }
    return ClassSplitSearch(g, node_budget).run();
  }
  return GenericPackSearch(g, k, node_budget).run();
}

std::optional<TreePacking> brute_force_pack(const EdgeColoredGraph& g, int k, int edge_cap) {
  validate(g);
  if (k < 0) throw InstanceError("rainbow packing: negative k");
  if (static_cast<int>(g.edges.size()) > edge_cap) {
    throw SizeError("brute-force packing: " + std::to_string(g.edges.size()) +
                    " edges exceed the cap " + std::to_string(edge_cap));
  }
  if (k == 0) return empty_packing(0);

  const int m = static_cast<int>(g.edges.size());
  std::vector<int> assignment(static_cast<std::size_t>(m), 0);
  std::vector<DisjointSets> forests(static_cast<std::size_t>(k),
                                    DisjointSets(std::max(1, g.vertex_count)));
  std::optional<TreePacking> found;

  // Plain exhaustive assignment; prefixes violating a hereditary condition
  // (cycle or repeated color inside a tree) cannot extend to a valid
  // certificate and are skipped. Acceptance is decided by the verifier.
  auto recurse = [&](auto&& self, int edge) -> bool {
    if (edge == m) {
      TreePacking p = empty_packing(k);
      for (int e = 0; e < m; ++e) {
        if (assignment[e] > 0) p.trees[assignment[e] - 1].push_back(e);
      }
      if (verify_rainbow_packing(g, p, false).ok) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (int choice = 0; choice <= k; ++choice) {
      assignment[edge] = choice;
      if (choice == 0) {
        if (self(self, edge + 1)) return true;
        continue;
      }
      const int t = choice - 1;
      bool color_clash = false;
      for (int prev = 0; prev < edge && !color_clash; ++prev) {
        color_clash = (assignment[prev] == choice && g.colors[prev] == g.colors[edge]);
      }
      if (color_clash) continue;
      DisjointSets rebuilt(std::max(1, g.vertex_count));
      bool cycle = false;
      for (int prev = 0; prev <= edge && !cycle; ++prev) {
        if (assignment[prev] == choice) {
          cycle = !rebuilt.unite(g.edges[prev].u, g.edges[prev].v);
        }
      }
      if (cycle) continue;
      (void)t;
      if (self(self, edge + 1)) return true;
    }
    assignment[edge] = 0;
    return false;
  };
  recurse(recurse, 0);
  return found;
}

}  // namespace rainbow
