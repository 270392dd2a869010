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
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainint/criteria.hpp"

namespace chainint {

class MixedCommutation : public std::invalid_argument {
 public:
  MixedCommutation(const std::string& a, const std::string& b)
      : std::invalid_argument("terms " + a + " and " + b + " neither commute nor anticommute"), a_(a), b_(b) {}
  const std::string& first() const { return a_; }
  const std::string& second() const { return b_; }

 private:
  std::string a_, b_;
};

struct GraphVertex {
  std::string label;  // term letter and 1-based effective site, e.g. "p3"
  LocalOperator term;
  uint64_t support = 0;
};

struct FrustrationGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<bool>> adjacency;
  Boundary boundary = Boundary::open;
  int n_sites = 0;  // physical sites
  int unit_cell = 1;
  size_t size() const { return vertices.size(); }
  bool edge(size_t a, size_t b) const { return adjacency[a][b]; }
  size_t edge_count() const {
    size_t n = 0;
    for (size_t a = 0; a < size(); ++a)
      for (size_t b = a + 1; b < size(); ++b) n += adjacency[a][b] ? 1 : 0;
    return n;
  }
};

enum class Relation { commute, anticommute, mixed };

// Relation between two operators A, B from AB - BA and AB + BA.
inline Relation relation(const LocalOperator& a, const LocalOperator& b) {
  LocalOperator ab = product(a, b);
  LocalOperator ba = product(b, a);
  LocalOperator diff = ab - ba;
  LocalOperator sum = ab + ba;
  if (diff.empty()) return Relation::commute;
  if (sum.empty()) return Relation::anticommute;
  return Relation::mixed;
}

// Graph on explicit vertices. Each vertex may group several strings.
inline FrustrationGraph graph_from_terms(std::vector<GraphVertex> vertices, int n_sites, Boundary boundary,
                                         int unit_cell = 1) {
  FrustrationGraph g;
  g.boundary = boundary;
  g.n_sites = n_sites;
  g.unit_cell = unit_cell;
  g.vertices = std::move(vertices);
  for (auto& v : g.vertices) {
    v.support = 0;
    for (const auto& [k, c] : v.term.terms()) v.support |= k.support();
  }
  const size_t n = g.vertices.size();
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      const auto& A = g.vertices[a].term;
      const auto& B = g.vertices[b].term;
      bool anti;
      if (A.size() == 1 && B.size() == 1) {
        anti = anticommutes(A.terms().begin()->first, B.terms().begin()->first);
      } else {
        Relation r = relation(A, B);
        if (r == Relation::mixed) throw MixedCommutation(g.vertices[a].label, g.vertices[b].label);
        anti = r == Relation::anticommute;
      }
      g.adjacency[a][b] = g.adjacency[b][a] = anti;
    }
  }
  return g;
}

// Term letters: "h" for a one-term density, otherwise p, q, r, ... in the
// coefficient-then-string order.
inline std::vector<std::pair<std::string, LocalOperator>> labelled_terms(const Model& model,
                                                                         const std::vector<LocalOperator>* groups) {
  std::vector<std::pair<std::string, LocalOperator>> out;
  std::vector<LocalOperator> ops;
  if (groups != nullptr) {
    ops = *groups;
  } else {
    for (const auto& [s, c] : ordered_terms(model_density(model))) ops.emplace_back(s, c);
  }
  for (size_t i = 0; i < ops.size(); ++i) {
    std::string name = ops.size() == 1 ? "h" : std::string(1, static_cast<char>('p' + i));
    out.emplace_back(name, ops[i]);
  }
  return out;
}

// One vertex per translate of each density term on a chain of n_sites
// physical sites. Equal strings from different terms are merged; zero
// terms dropped. groups, when given, replaces the term split of the density.
inline FrustrationGraph build_graph(const Model& model, int n_sites, Boundary boundary,
                                    const std::optional<ParamPoint>& point = std::nullopt,
                                    const std::vector<LocalOperator>* groups = nullptr) {
  const int uc = model_unit_cell(model);
  if (n_sites % uc != 0) throw LatticeError("n_sites must be a multiple of the unit cell");
  if (window_length(model_density(model), 1) > n_sites) throw LatticeError("chain shorter than the density support");
  auto terms = labelled_terms(model, groups);
  std::vector<GraphVertex> vs;
  std::map<PauliString, size_t, CanonicalLess> single;
  for (int m = 0; m * uc < n_sites; ++m) {
    for (const auto& [name, op] : terms) {
      LocalOperator t;
      bool fits = true;
      for (const auto& [k, c] : op.terms()) {
        if (boundary == Boundary::open && k.last_site() + m * uc >= n_sites) fits = false;
      }
      if (!fits) continue;
      for (const auto& [k, c] : op.terms()) {
        Coefficient v = point ? c.substitute(index_point(*point)) : c;
        t.add(translate(k, m * uc, n_sites, boundary), v);
      }
      if (t.empty()) continue;
      std::string label = name + std::to_string(m + 1);
      if (t.size() == 1) {
        const auto& [s, c] = *t.terms().begin();
        auto it = single.find(s);
        if (it != single.end()) {
          GraphVertex& old = vs[it->second];
          Coefficient sum = old.term.coefficient(s) + c;
          old.term = LocalOperator();
          if (!sum.is_zero()) old.term.add(s, sum);
          continue;
        }
        single.emplace(s, vs.size());
      }
      vs.push_back({label, t, 0});
    }
  }
  vs.erase(std::remove_if(vs.begin(), vs.end(), [](const GraphVertex& v) { return v.term.empty(); }), vs.end());
  return graph_from_terms(std::move(vs), n_sites, boundary, uc);
}

struct Witness {
  std::string type;              // "claw" or "even_hole"
  std::vector<size_t> vertices;  // claw: center first; hole: cycle order
  bool bulk = true;
};

// Bulk: the union support avoids the chain ends (open) or does not wrap
// around the whole ring (periodic).
inline bool is_bulk(const FrustrationGraph& g, const std::vector<size_t>& vs) {
  uint64_t m = 0;
  for (size_t v : vs) m |= g.vertices[v].support;
  if (g.boundary == Boundary::open) {
    return (m & 1ull) == 0 && (m & (1ull << (g.n_sites - 1))) == 0;
  }
  return ring_support_length(PauliString(m, 0), g.n_sites, 1) < g.n_sites;
}

// All induced K_{1,3}: center first, leaves ascending.
inline std::vector<Witness> find_claws(const FrustrationGraph& g) {
  std::vector<Witness> out;
  const size_t n = g.size();
  for (size_t c = 0; c < n; ++c) {
    std::vector<size_t> nb;
    for (size_t v = 0; v < n; ++v) {
      if (g.edge(c, v)) nb.push_back(v);
    }
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.edge(nb[i], nb[j])) continue;
        for (size_t k = j + 1; k < nb.size(); ++k) {
          if (g.edge(nb[i], nb[k]) || g.edge(nb[j], nb[k])) continue;
          Witness w{"claw", {c, nb[i], nb[j], nb[k]}, true};
          w.bulk = is_bulk(g, w.vertices);
          out.push_back(std::move(w));
        }
      }
  }
  return out;
}

namespace detail {

// Extends an induced path from start. Vertices below start are excluded;
// blocked counts path vertices and neighbors of interior path vertices.
inline void grow_holes(const FrustrationGraph& g, std::vector<size_t>& path, std::vector<int>& blocked, size_t max_len,
                       std::vector<Witness>& out) {
  const size_t n = g.size();
  const size_t start = path.front();
  const size_t last = path.back();
  for (size_t w = start + 1; w < n; ++w) {
    if (!g.edge(last, w) || blocked[w] != 0) continue;
    if (path.size() >= 2 && g.edge(w, start)) {
      // Each cycle is met in both directions; keep path[1] < w.
      if (path.size() >= 3 && (path.size() + 1) % 2 == 0 && path[1] < w) {
        Witness h{"even_hole", path, true};
        h.vertices.push_back(w);
        h.bulk = is_bulk(g, h.vertices);
        out.push_back(std::move(h));
      }
      continue;
    }
    if (path.size() + 2 > max_len) continue;
    auto mark = [&](int d) {
      if (last == start) return;
      for (size_t u = 0; u < n; ++u) {
        if (g.edge(last, u)) blocked[u] += d;
      }
    };
    mark(1);
    ++blocked[w];
    path.push_back(w);
    grow_holes(g, path, blocked, max_len, out);
    path.pop_back();
    --blocked[w];
    mark(-1);
  }
}

}  // namespace detail

// All chordless cycles of even length in [4, max_len]. Each cycle starts at
// its smallest vertex.
inline std::vector<Witness> find_even_holes(const FrustrationGraph& g, size_t max_len = 12) {
  if (max_len < 4) throw std::invalid_argument("max_len must be at least 4");
  std::vector<Witness> out;
  const size_t n = g.size();
  for (size_t s = 0; s < n; ++s) {
    std::vector<size_t> path = {s};
    std::vector<int> blocked(n, 0);
    blocked[s] = 1;
    for (size_t v = 0; v < s; ++v) blocked[v] = 1;
    detail::grow_holes(g, path, blocked, max_len, out);
  }
  return out;
}

enum class GraphImplication { free_fermion, integrable, none };

inline std::string implication_name(GraphImplication i) {
  switch (i) {
    case GraphImplication::free_fermion: return "free-fermion-by-graph";
    case GraphImplication::integrable: return "integrable-by-graph";
    default: return "no-graph-conclusion";
  }
}

struct GraphClassification {
  bool claw_free = true;
  bool even_hole_free = true;
  size_t even_hole_bound = 12;
  GraphImplication implication = GraphImplication::none;
  bool extrapolated = false;  // composite sites: theorem used beyond spin-1/2
  std::vector<Witness> claws;
  std::vector<Witness> even_holes;
};

inline GraphClassification classify(const FrustrationGraph& g, size_t max_len = 12) {
  GraphClassification c;
  c.even_hole_bound = max_len;
  c.claws = find_claws(g);
  c.even_holes = find_even_holes(g, max_len);
  c.claw_free = c.claws.empty();
  c.even_hole_free = c.even_holes.empty();
  if (c.claw_free && c.even_hole_free) {
    c.implication = GraphImplication::free_fermion;
  } else if (c.claw_free) {
    c.implication = GraphImplication::integrable;
  }
  c.extrapolated = g.unit_cell > 1;
  return c;
}

inline std::vector<std::string> witness_labels(const FrustrationGraph& g, const Witness& w) {
  std::vector<std::string> out;
  for (size_t v : w.vertices) out.push_back(g.vertices[v].label);
  return out;
}

// Deterministic DOT text; vertices of one term letter share a rank.
inline std::string export_dot(const FrustrationGraph& g) {
  std::string out = "graph frustration {\n";
  std::map<std::string, std::vector<size_t>> layers;
  for (size_t v = 0; v < g.size(); ++v) {
    const std::string& l = g.vertices[v].label;
    std::string letter = l.substr(0, l.find_first_of("0123456789"));
    layers[letter].push_back(v);
    out += "  \"" + l + "\" [tooltip=\"" + to_inline(g.vertices[v].term, g.unit_cell) + "\"];\n";
  }
  for (const auto& [letter, vs] : layers) {
    out += "  { rank=same;";
    for (size_t v : vs) out += " \"" + g.vertices[v].label + "\";";
    out += " }\n";
  }
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = a + 1; b < g.size(); ++b) {
      if (g.edge(a, b)) out += "  \"" + g.vertices[a].label + "\" -- \"" + g.vertices[b].label + "\";\n";
    }
  return out + "}\n";
}

inline nlohmann::json witness_json(const FrustrationGraph& g, const std::vector<Witness>& ws) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& w : ws) a.push_back({{"type", w.type}, {"vertices", witness_labels(g, w)}, {"bulk", w.bulk}});
  return a;
}

inline nlohmann::json classification_json(const FrustrationGraph& g, const GraphClassification& c,
                                          const std::string& model) {
  nlohmann::json j;
  j["model"] = model;
  j["n_sites"] = g.n_sites;
  j["boundary"] = boundary_name(g.boundary);
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["claw_free"] = c.claw_free;
  j["even_hole_free"] = c.even_hole_free;
  j["even_hole_bound"] = c.even_hole_bound;
  j["implication"] = implication_name(c.implication);
  j["extrapolated"] = c.extrapolated;
  j["claws"] = witness_json(g, c.claws);
  j["even_holes"] = witness_json(g, c.even_holes);
  return j;
}

}  // namespace chainint
