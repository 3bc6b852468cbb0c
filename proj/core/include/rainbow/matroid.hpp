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
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Default ground-size cap for the exhaustive (subset-enumeration) routines.
inline constexpr int kDefaultSubsetCap = 12;

// Largest ground size for which explicit independence tables are accepted.
inline constexpr int kMaxExplicitGround = 20;

// Rank oracle over one of three representations: the graphic matroid of a
// multigraph (independent = forest), a partition matroid with all-ones class
// bounds (independent = at most one element per class), or an explicit
// independence table over a tiny ground set. Elements are 0..ground_size-1.
// Values are immutable after construction; rank() is pure and safe to call
// concurrently.
class Matroid {
 public:
  enum class Kind { kGraphic, kPartition, kExplicit };

  static Matroid graphic(int vertex_count, std::vector<Edge> edges);
  static Matroid partition(std::vector<int> element_class);
  // `independent` is indexed by element bitmask and must be downward closed
  // and contain the empty set; checked at construction.
  static Matroid explicit_table(int ground_size, const std::vector<bool>& independent);
  // Every element its own class: everything is independent.
  static Matroid free(int ground_size);

  int ground_size() const { return ground_size_; }
  Kind kind() const { return kind_; }

  // Rank of a subset given as element ids (duplicates allowed, ignored).
  int rank(std::span<const int> subset) const;
  int rank(std::initializer_list<int> subset) const {
    return rank(std::span<const int>(subset.begin(), subset.size()));
  }
  // Rank of a subset given as a bitmask; requires ground_size <= 32.
  int rank_mask(std::uint32_t mask) const;

  bool is_independent(std::span<const int> subset) const {
    return rank(subset) == static_cast<int>(subset.size());
  }

  // Cached rank of the full ground set.
  int full_rank() const { return full_rank_; }
  // True iff every singleton has rank 1.
  bool is_loopless() const;

 private:
  Matroid() = default;

  Kind kind_ = Kind::kExplicit;
  int ground_size_ = 0;
  int full_rank_ = 0;

  // kGraphic
  int vertex_count_ = 0;
  std::vector<Edge> edges_;

  // kPartition
  std::vector<int> element_class_;
  int class_count_ = 0;

  // kExplicit: rank per bitmask, precomputed.
  std::vector<std::uint8_t> rank_table_;
};

// Maximum, over partitions of `subset` into |ms| parts, of the sum of
// per-matroid ranks of the parts. Computed by exchange-graph augmentation.
// All matroids must share the ground size; the list must be non-empty.
int matroid_union_rank(const std::vector<Matroid>& ms, std::span<const int> subset);

// The partition behind matroid_union_rank: returns one element-id set per
// matroid, pairwise disjoint, part i independent in ms[i], total size equal
// to the union rank. Deterministic in the input order.
std::vector<std::vector<int>> matroid_union_partition(const std::vector<Matroid>& ms,
                                                      std::span<const int> subset);

// Pointer-based variants; used internally to run k copies of one matroid
// without copying it.
int matroid_union_rank(std::span<const Matroid* const> ms, std::span<const int> subset);
std::vector<std::vector<int>> matroid_union_partition(std::span<const Matroid* const> ms,
                                                      std::span<const int> subset);

// Covering number beta(M): the least k such that k independent sets cover
// the ground set. Throws InstanceError if the matroid has a loop (a loop
// lies in no independent set, so no finite cover exists).
int covering_number(const Matroid& m);

// Packing number gamma(M): the greatest k such that k pairwise disjoint
// bases exist. Returns nullopt when rank(E) = 0: the empty basis packs any
// number of times, so the value is unbounded rather than numeric.
std::optional<int> packing_number(const Matroid& m);

// A maximum-cardinality set independent in both matroids, found by
// augmenting paths in the exchange graph. Deterministic.
std::vector<int> max_common_independent(const Matroid& m1, const Matroid& m2);

// Exact covering number of the intersection, beta(M1,M2): the least number
// of common independent sets covering the ground set. Exhaustive over
// subsets; refuses ground sets larger than `cap`. Both matroids must be
// loopless.
int common_cover_number_bf(const Matroid& m1, const Matroid& m2, int cap = kDefaultSubsetCap);

// Exact packing number of the intersection, gamma(M1,M2): the greatest
// number of pairwise disjoint common bases. Returns nullopt in the
// degenerate unbounded case (both full ranks zero). Exhaustive; refuses
// ground sets larger than `cap`.
std::optional<int> common_packing_number_bf(const Matroid& m1, const Matroid& m2,
                                            int cap = kDefaultSubsetCap);

}  // namespace rainbow
