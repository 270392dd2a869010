// Copyright 2026 The chainint Authors
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

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "chainint/frustration.hpp"

// Subset-enumeration oracles for induced claws and even holes.
namespace oracle {

inline std::vector<uint32_t> masks(const chainint::FrustrationGraph& g) {
  std::vector<uint32_t> adj(g.size(), 0);
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b)
      if (g.edge(a, b)) adj[a] |= 1u << b;
  return adj;
}

// Induced stars as sorted vertex sets paired with their center.
inline std::set<std::vector<size_t>> claws(const chainint::FrustrationGraph& g) {
  std::set<std::vector<size_t>> out;
  const size_t n = g.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          size_t v[4] = {a, b, c, d};
          for (int center = 0; center < 4; ++center) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
              for (int j = i + 1; j < 4 && ok; ++j) {
                bool want = (i == center || j == center);
                if (g.edge(v[i], v[j]) != want) ok = false;
              }
            if (ok) {
              std::vector<size_t> key = {v[center]};
              for (int i = 0; i < 4; ++i)
                if (i != center) key.push_back(v[i]);
              out.insert(key);
            }
          }
        }
  return out;
}

// Vertex sets of size 4..max_len, even, whose induced subgraph is one cycle.
inline std::set<std::vector<size_t>> even_holes(const chainint::FrustrationGraph& g, size_t max_len) {
  std::set<std::vector<size_t>> out;
  const size_t n = g.size();
  auto adj = masks(g);
  std::vector<size_t> pick;
  auto is_cycle = [&](uint32_t s) {
    for (size_t v : pick)
      if (__builtin_popcount(adj[v] & s) != 2) return false;
    uint32_t seen = 1u << pick[0], frontier = seen;
    while (frontier != 0) {
      uint32_t next = 0;
      for (size_t v = 0; v < n; ++v)
        if (frontier >> v & 1u) next |= adj[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == s;
  };
  auto rec = [&](auto&& self, size_t from, uint32_t s) -> void {
    if (pick.size() >= 4 && pick.size() % 2 == 0 && is_cycle(s)) out.insert(pick);
    if (pick.size() == max_len) return;
    for (size_t v = from; v < n; ++v) {
      // Prune: every chosen vertex needs at most two chosen neighbors.
      bool ok = __builtin_popcount(adj[v] & s) <= 2;
      for (size_t u : pick)
        if (ok && (adj[u] >> v & 1u) && __builtin_popcount(adj[u] & s) >= 2) ok = false;
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1, s | 1u << v);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline std::set<std::vector<size_t>> as_sets(const std::vector<chainint::Witness>& ws, bool sort_all) {
  std::set<std::vector<size_t>> out;
  for (auto w : ws) {
    if (sort_all) {
      std::sort(w.vertices.begin(), w.vertices.end());
    } else {
      std::sort(w.vertices.begin() + 1, w.vertices.end());
    }
    out.insert(w.vertices);
  }
  return out;
}

// Graph on n vertices with edges drawn from a seeded generator.
template <class Rng>
chainint::FrustrationGraph random_graph(size_t n, double p, Rng& rng) {
  chainint::FrustrationGraph g;
  g.vertices.resize(n);
  g.adjacency.assign(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(p);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.adjacency[a][b] = g.adjacency[b][a] = true;
  return g;
}

}  // namespace oracle
