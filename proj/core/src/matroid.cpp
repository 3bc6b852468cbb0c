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

#include "rainbow/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

int popcount(std::uint32_t mask) { return __builtin_popcount(mask); }

// Scratch space for rank queries: stamped arrays avoid clearing between
// calls. One workspace per thread keeps rank() safe for concurrent callers.
struct RankScratch {
  std::vector<int> parent;
  std::vector<int> stamp;
  int epoch = 0;

  void begin(int n) {
    if (static_cast<int>(parent.size()) < n) {
      parent.resize(n);
      stamp.resize(n, 0);
    }
    ++epoch;
  }

  int find(int v) {
    if (stamp[v] != epoch) {
      stamp[v] = epoch;
      parent[v] = v;
    }
    while (parent[v] != v) {
      if (stamp[parent[v]] != epoch) {
        stamp[parent[v]] = epoch;
        parent[parent[v]] = parent[v];
      }
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  // Returns true if the union joined two components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

thread_local RankScratch g_graphic_scratch;
thread_local RankScratch g_partition_scratch;

}  // namespace

Matroid Matroid::graphic(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw InstanceError("graphic matroid: negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InstanceError("graphic matroid: edge endpoint out of range");
    }
  }
  Matroid m;
  m.kind_ = Kind::kGraphic;
  m.ground_size_ = static_cast<int>(edges.size());
  m.vertex_count_ = vertex_count;
  m.edges_ = std::move(edges);
  std::vector<int> all(m.ground_size_);
  for (int i = 0; i < m.ground_size_; ++i) all[i] = i;
  m.full_rank_ = m.rank(all);
  return m;
}

Matroid Matroid::partition(std::vector<int> element_class) {
  int classes = 0;
  for (int c : element_class) {
    if (c < 0) throw InstanceError("partition matroid: negative class id");
    classes = std::max(classes, c + 1);
  }
  Matroid m;
  m.kind_ = Kind::kPartition;
  m.ground_size_ = static_cast<int>(element_class.size());
  m.element_class_ = std::move(element_class);
  m.class_count_ = classes;
  std::vector<char> seen(static_cast<std::size_t>(classes), 0);
  int r = 0;
  for (int c : m.element_class_) {
    if (!seen[c]) {
      seen[c] = 1;
      ++r;
    }
  }
  m.full_rank_ = r;
  return m;
}

Matroid Matroid::explicit_table(int ground_size, const std::vector<bool>& independent) {
  if (ground_size < 0 || ground_size > kMaxExplicitGround) {
    throw InstanceError("explicit matroid: ground size out of range");
  }
  const std::size_t masks = std::size_t{1} << ground_size;
  if (independent.size() != masks) {
    throw InstanceError("explicit matroid: table size must be 2^ground_size");
  }
  if (!independent[0]) throw InstanceError("explicit matroid: empty set must be independent");
  // Downward closure; the exchange axiom is left to the property tests.
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if (!independent[mask]) continue;
    for (int e = 0; e < ground_size; ++e) {
      if ((mask >> e) & 1u) {
        if (!independent[mask ^ (1u << e)]) {
          throw InstanceError("explicit matroid: table is not downward closed");
        }
      }
    }
  }
  Matroid m;
  m.kind_ = Kind::kExplicit;
  m.ground_size_ = ground_size;
  m.rank_table_.resize(masks);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (independent[mask]) {
      m.rank_table_[mask] = static_cast<std::uint8_t>(popcount(mask));
    } else {
      int best = 0;
      for (int e = 0; e < ground_size; ++e) {
        if ((mask >> e) & 1u) best = std::max(best, static_cast<int>(m.rank_table_[mask ^ (1u << e)]));
      }
      m.rank_table_[mask] = static_cast<std::uint8_t>(best);
    }
  }
  m.full_rank_ = m.rank_table_[masks - 1];
  return m;
}

Matroid Matroid::free(int ground_size) {
  std::vector<int> classes(static_cast<std::size_t>(ground_size));
  for (int i = 0; i < ground_size; ++i) classes[i] = i;
  return partition(std::move(classes));
}

int Matroid::rank(std::span<const int> subset) const {
  for (int e : subset) {
    if (e < 0 || e >= ground_size_) throw InstanceError("rank: element index out of range");
  }
  switch (kind_) {
    case Kind::kGraphic: {
      g_graphic_scratch.begin(vertex_count_);
      int r = 0;
      for (int e : subset) {
        if (g_graphic_scratch.unite(edges_[e].u, edges_[e].v)) ++r;
      }
      return r;
    }
    case Kind::kPartition: {
      auto& ws = g_partition_scratch;
      ws.begin(class_count_);
      int r = 0;
      for (int e : subset) {
        const int c = element_class_[e];
        if (ws.stamp[c] != ws.epoch) {
          ws.stamp[c] = ws.epoch;
          ++r;
        }
      }
      return r;
    }
    case Kind::kExplicit: {
      std::uint32_t mask = 0;
      for (int e : subset) mask |= 1u << e;
      return rank_table_[mask];
    }
  }
  return 0;
}

int Matroid::rank_mask(std::uint32_t mask) const {
  if (ground_size_ > 32) throw InstanceError("rank_mask: ground size exceeds 32");
  if (ground_size_ < 32 && (mask >> ground_size_) != 0) {
    throw InstanceError("rank_mask: element index out of range");
  }
  if (kind_ == Kind::kExplicit) return rank_table_[mask];
  int ids[32];
  int n = 0;
  for (int e = 0; e < ground_size_; ++e) {
    if ((mask >> e) & 1u) ids[n++] = e;
  }
  return rank(std::span<const int>(ids, static_cast<std::size_t>(n)));
}

bool Matroid::is_loopless() const {
  for (int e = 0; e < ground_size_; ++e) {
    const int one[] = {e};
    if (rank(one) != 1) return false;
  }
  return true;
}

namespace {

// Exchange-graph augmentation for matroid union, one element at a time.
// Each element of the current union set is owned by exactly one matroid.
// An augmenting path e -> y1 -> ... -> yk means: yk moves into the matroid
// that can absorb it directly, y_{k-1} takes yk's vacated slot, and so on
// until e takes y1's slot. Shortest (BFS) paths keep the exchanges valid.
struct UnionSearch {
  std::span<const Matroid* const> ms;
  int ground;
  std::vector<int> owner;                // element -> matroid index or -1
  std::vector<std::vector<int>> parts;   // current independent sets
  std::vector<int> scratch;

  explicit UnionSearch(std::span<const Matroid* const> matroids)
      : ms(matroids),
        ground(matroids.front()->ground_size()),
        owner(static_cast<std::size_t>(ground), -1),
        parts(matroids.size()) {}

  bool part_plus_is_independent(int j, int x) {
    scratch.assign(parts[j].begin(), parts[j].end());
    scratch.push_back(x);
    return ms[j]->rank(scratch) == static_cast<int>(scratch.size());
  }

  // Elements y of parts[j] such that parts[j] + x - y is independent; only
  // meaningful when parts[j] + x is dependent.
  void circuit_members(int j, int x, std::vector<int>& out) {
    out.clear();
    const auto& part = parts[j];
    const int size = static_cast<int>(part.size());
    for (int drop = 0; drop < size; ++drop) {
      scratch.clear();
      for (int i = 0; i < size; ++i) {
        if (i != drop) scratch.push_back(part[i]);
      }
      scratch.push_back(x);
      if (ms[j]->rank(scratch) == size) out.push_back(part[drop]);
    }
  }

  void move_element(int element, int to) {
    const int from = owner[element];
    if (from >= 0) {
      auto& part = parts[from];
      part.erase(std::find(part.begin(), part.end(), element));
    }
    owner[element] = to;
    parts[to].push_back(element);
  }

  // Tries to extend the union set with `element`; returns true on success.
  bool augment(int element) {
    // Fast path: some matroid absorbs it directly.
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (part_plus_is_independent(static_cast<int>(j), element)) {
        move_element(element, static_cast<int>(j));
        return true;
      }
    }
    std::vector<int> parent(static_cast<std::size_t>(ground), -2);  // -2 = unvisited
    std::deque<int> queue;
    parent[element] = -1;
    queue.push_back(element);
    std::vector<int> circuit;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < ms.size(); ++j) {
        const int jj = static_cast<int>(j);
        if (owner[x] == jj) continue;
        if (part_plus_is_independent(jj, x)) {
          // Unwind: x enters part jj, freeing its old slot for its parent.
          int target = jj;
          int cur = x;
          while (true) {
            const int prev_owner = owner[cur];
            move_element(cur, target);
            if (parent[cur] == -1) return true;
            cur = parent[cur];
            target = prev_owner;
          }
        }
        circuit_members(jj, x, circuit);
        for (int y : circuit) {
          if (parent[y] == -2) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
    }
    return false;
  }
};

std::vector<std::vector<int>> union_partition_impl(std::span<const Matroid* const> ms,
                                                   std::span<const int> subset) {
  if (ms.empty()) throw InstanceError("matroid union: empty matroid list");
  const int ground = ms.front()->ground_size();
  for (const Matroid* m : ms) {
    if (m->ground_size() != ground) {
      throw InstanceError("matroid union: mismatched ground sizes");
    }
  }
  std::vector<int> elements(subset.begin(), subset.end());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements) {
    if (e < 0 || e >= ground) throw InstanceError("matroid union: element index out of range");
  }
  UnionSearch search(ms);
  for (int e : elements) search.augment(e);
  for (auto& part : search.parts) std::sort(part.begin(), part.end());
  return std::move(search.parts);
}

}  // namespace

int matroid_union_rank(std::span<const Matroid* const> ms, std::span<const int> subset) {
  int total = 0;
  for (const auto& part : union_partition_impl(ms, subset)) {
    total += static_cast<int>(part.size());
  }
  return total;
}

std::vector<std::vector<int>> matroid_union_partition(std::span<const Matroid* const> ms,
                                                      std::span<const int> subset) {
  return union_partition_impl(ms, subset);
}

int matroid_union_rank(const std::vector<Matroid>& ms, std::span<const int> subset) {
  std::vector<const Matroid*> ptrs;
  ptrs.reserve(ms.size());
  for (const Matroid& m : ms) ptrs.push_back(&m);
  return matroid_union_rank(std::span<const Matroid* const>(ptrs), subset);
}

std::vector<std::vector<int>> matroid_union_partition(const std::vector<Matroid>& ms,
                                                      std::span<const int> subset) {
  std::vector<const Matroid*> ptrs;
  ptrs.reserve(ms.size());
  for (const Matroid& m : ms) ptrs.push_back(&m);
  return matroid_union_partition(std::span<const Matroid* const>(ptrs), subset);
}

namespace {

std::vector<int> all_elements(const Matroid& m) {
  std::vector<int> all(static_cast<std::size_t>(m.ground_size()));
  for (int i = 0; i < m.ground_size(); ++i) all[i] = i;
  return all;
}

int union_rank_of_copies(const Matroid& m, int copies) {
  std::vector<const Matroid*> ptrs(static_cast<std::size_t>(copies), &m);
  const std::vector<int> all = all_elements(m);
  return matroid_union_rank(std::span<const Matroid* const>(ptrs), all);
}

}  // namespace

int covering_number(const Matroid& m) {
  if (!m.is_loopless()) {
    throw InstanceError("covering number is infinite: matroid has a loop");
  }
  const int n = m.ground_size();
  if (n == 0) return 0;
  const int r = m.full_rank();
  int k = (n + r - 1) / r;  // ceil(n/r); r >= 1 because the matroid is loopless
  while (union_rank_of_copies(m, k) < n) ++k;
  return k;
}

std::optional<int> packing_number(const Matroid& m) {
  const int r = m.full_rank();
  if (r == 0) return std::nullopt;  // empty bases pack without bound
  const int n = m.ground_size();
  int k = 1;  // one basis always exists
  while ((k + 1) * r <= n && union_rank_of_copies(m, k + 1) == (k + 1) * r) ++k;
  return k;
}

std::vector<int> max_common_independent(const Matroid& m1, const Matroid& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw InstanceError("matroid intersection: mismatched ground sizes");
  }
  const int n = m1.ground_size();
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  std::vector<int> current;

  std::vector<int> scratch;
  auto set_plus_is_independent = [&](const Matroid& m, int add) {
    scratch.assign(current.begin(), current.end());
    scratch.push_back(add);
    return m.rank(scratch) == static_cast<int>(scratch.size());
  };
  auto swap_is_independent = [&](const Matroid& m, int drop, int add) {
    scratch.clear();
    for (int e : current) {
      if (e != drop) scratch.push_back(e);
    }
    scratch.push_back(add);
    return m.rank(scratch) == static_cast<int>(scratch.size());
  };

  while (true) {
    // Sources: addable in M1. Sinks: addable in M2. Arcs alternate
    // M2-exchanges (out -> in) and M1-exchanges (in -> out). The symmetric
    // difference along a shortest source-sink path augments the set.
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::deque<int> queue;
    for (int x = 0; x < n; ++x) {
      if (!in_set[x] && set_plus_is_independent(m1, x)) {
        parent[x] = -1;
        queue.push_back(x);
      }
    }
    int reached_sink = -1;
    while (!queue.empty() && reached_sink < 0) {
      const int x = queue.front();
      queue.pop_front();
      if (!in_set[x]) {
        if (set_plus_is_independent(m2, x)) {
          reached_sink = x;
          break;
        }
        for (int y = 0; y < n; ++y) {
          if (in_set[y] && parent[y] == -2 && swap_is_independent(m2, y, x)) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      } else {
        for (int y = 0; y < n; ++y) {
          if (!in_set[y] && parent[y] == -2 && swap_is_independent(m1, x, y)) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
    }
    if (reached_sink < 0) break;
    for (int x = reached_sink; x != -1; x = parent[x]) {
      in_set[x] = !in_set[x];
    }
    current.clear();
    for (int x = 0; x < n; ++x) {
      if (in_set[x]) current.push_back(x);
    }
  }
  return current;
}

namespace {

void require_subset_cap(const Matroid& m1, const Matroid& m2, int cap, const char* what) {
  if (m1.ground_size() != m2.ground_size()) {
    throw InstanceError(std::string(what) + ": mismatched ground sizes");
  }
  if (m1.ground_size() > cap) {
    throw SizeError(std::string(what) + ": ground size " + std::to_string(m1.ground_size()) +
                    " exceeds brute-force cap " + std::to_string(cap));
  }
}

}  // namespace

int common_cover_number_bf(const Matroid& m1, const Matroid& m2, int cap) {
  require_subset_cap(m1, m2, cap, "common cover number");
  if (!m1.is_loopless() || !m2.is_loopless()) {
    throw InstanceError("common cover number is infinite: a matroid has a loop");
  }
  const int n = m1.ground_size();
  if (n == 0) return 0;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<char> common(full + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int pc = popcount(mask);
    common[mask] = (m1.rank_mask(mask) == pc && m2.rank_mask(mask) == pc);
  }
  // Common independent sets are downward closed, so covering sets may be
  // assumed disjoint from already-covered ground: plain submask DP.
  constexpr int kInf = 1 << 29;
  std::vector<int> best(full + 1, kInf);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Submasks of `mask` containing the lowest set bit.
    std::uint32_t sub = rest;
    while (true) {
      const std::uint32_t candidate = sub | low;
      if (common[candidate] && best[mask ^ candidate] + 1 < best[mask]) {
        best[mask] = best[mask ^ candidate] + 1;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  return best[full];
}

std::optional<int> common_packing_number_bf(const Matroid& m1, const Matroid& m2, int cap) {
  require_subset_cap(m1, m2, cap, "common packing number");
  const int r1 = m1.full_rank();
  const int r2 = m2.full_rank();
  if (r1 == 0 && r2 == 0) return std::nullopt;  // empty common bases, unbounded
  if (r1 != r2) return 0;
  const int n = m1.ground_size();
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> bases;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (popcount(mask) == r1 && m1.rank_mask(mask) == r1 && m2.rank_mask(mask) == r1) {
      bases.push_back(mask);
    }
  }
  std::vector<int> best(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t b : bases) {
      if ((b & mask) == b) best[mask] = std::max(best[mask], best[mask ^ b] + 1);
    }
  }
  return best[full];
}

}  // namespace rainbow
