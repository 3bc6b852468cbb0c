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

#include <cassert>
#include <numeric>
#include <vector>

namespace rainbow {

// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Returns false if a and b were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  bool connected(int a, int b) { return find(a) == find(b); }
  int component_count() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

// Union-find without path compression so that unions can be undone. Used by
// the backtracking solvers.
class RollbackDisjointSets {
 public:
  explicit RollbackDisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool connected(int a, int b) const { return find(a) == find(b); }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    trail_.push_back(b);
    return true;
  }

  // Number of successful unions so far; pass to rollback().
  int checkpoint() const { return static_cast<int>(trail_.size()); }

  void rollback(int checkpoint) {
    assert(checkpoint <= static_cast<int>(trail_.size()));
    while (static_cast<int>(trail_.size()) > checkpoint) {
      int child = trail_.back();
      trail_.pop_back();
      size_[parent_[child]] -= size_[child];
      parent_[child] = child;
      ++components_;
    }
  }

  int component_count() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
  int components_;
};

}  // namespace rainbow
