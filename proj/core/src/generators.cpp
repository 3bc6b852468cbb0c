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

#include "rainbow/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/random.hpp"

namespace rainbow {

namespace {

// Uniform random labeled tree: random Pruefer sequence, linear decode.
std::vector<Edge> random_spanning_tree(int n, RandomEngine& rng) {
  if (n == 1) return {};
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& s : code) s = rng.below(n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : code) ++degree[s];
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  int pointer = 0;
  while (degree[pointer] != 1) ++pointer;
  int leaf = pointer;
  for (int s : code) {
    edges.push_back({leaf, s});
    if (--degree[s] == 1 && s < pointer) {
      leaf = s;
    } else {
      ++pointer;
      while (degree[pointer] != 1) ++pointer;
      leaf = pointer;
    }
  }
  edges.push_back({leaf, n - 1});
  return edges;
}

}  // namespace

EdgeColoredGraph gen_two_tree_union(int vertex_count, std::uint64_t seed) {
  if (vertex_count < 2) {
    throw InstanceError("gen ecg: vertex count must be at least 2");
  }
  RandomEngine rng(seed);
  EdgeColoredGraph g;
  g.vertex_count = vertex_count;
  for (const Edge& e : random_spanning_tree(vertex_count, rng)) g.edges.push_back(e);
  for (const Edge& e : random_spanning_tree(vertex_count, rng)) g.edges.push_back(e);

  const int edge_count = 2 * (vertex_count - 1);
  std::vector<int> order(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < edge_count; ++i) order[i] = i;
  rng.shuffle(order);
  g.color_count = vertex_count - 1;
  g.colors.assign(static_cast<std::size_t>(edge_count), 0);
  for (int c = 0; c < g.color_count; ++c) {
    g.colors[order[2 * c]] = c;
    g.colors[order[2 * c + 1]] = c;
  }
  return g;
}

NaeFormula gen_nae_exactly4(int variable_count, std::uint64_t seed) {
  if (variable_count < 3) {
    throw InstanceError("gen nae: need at least 3 variables");
  }
  if ((4 * variable_count) % 3 != 0) {
    throw InstanceError("gen nae: 4n = " + std::to_string(4 * variable_count) +
                        " occurrences do not split into clauses of 3");
  }
  const int clause_count = 4 * variable_count / 3;
  RandomEngine rng(seed);
  std::vector<int> tokens;
  tokens.reserve(static_cast<std::size_t>(4 * variable_count));
  for (int v = 0; v < variable_count; ++v) {
    for (int i = 0; i < 4; ++i) tokens.push_back(v);
  }
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.shuffle(tokens);
    bool ok = true;
    for (int j = 0; ok && j < clause_count; ++j) {
      const int a = tokens[3 * j], b = tokens[3 * j + 1], c = tokens[3 * j + 2];
      ok = (a != b && a != c && b != c);
    }
    if (!ok) continue;
    NaeFormula f;
    f.variable_count = variable_count;
    for (int j = 0; j < clause_count; ++j) {
      std::array<int, 3> clause = {tokens[3 * j], tokens[3 * j + 1], tokens[3 * j + 2]};
      std::sort(clause.begin(), clause.end());
      f.clauses.push_back(clause);
    }
    return f;
  }
  throw InstanceError("gen nae: configuration sampling failed to produce distinct clauses");
}

}  // namespace rainbow
