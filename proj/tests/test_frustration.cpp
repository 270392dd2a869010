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


#include <gtest/gtest.h>

#include <random>

#include "chainint/chainint.hpp"
#include "graph_oracle.hpp"

using namespace chainint;

namespace {

std::set<std::string> labels(const FrustrationGraph& g, const Witness& w) {
  auto ls = witness_labels(g, w);
  return {ls.begin(), ls.end()};
}

}  // namespace

TEST(Graph, FfdOpenIsClawAndEvenHoleFree) {
  auto g = build_graph(get_model("ffd").spec, 8, Boundary::open);
  EXPECT_EQ(g.size(), 6u);
  auto c = classify(g);
  EXPECT_TRUE(c.claw_free);
  EXPECT_TRUE(c.even_hole_free);
  EXPECT_EQ(c.implication, GraphImplication::free_fermion);
  EXPECT_FALSE(c.extrapolated);
}

TEST(Graph, FfdPeriodicHasEvenHole) {
  auto g = build_graph(get_model("ffd").spec, 8, Boundary::periodic);
  auto c = classify(g);
  ASSERT_FALSE(c.even_holes.empty());
  EXPECT_EQ(labels(g, c.even_holes[0]), (std::set<std::string>{"h1", "h3", "h5", "h7"}));
  EXPECT_FALSE(c.even_holes[0].bulk);
}

TEST(Graph, TildeTwoClaw) {
  auto g = build_graph(get_model("tilde:II").spec, 10, Boundary::open);
  bool found = false;
  for (const auto& w : find_claws(g)) found |= labels(g, w) == std::set<std::string>{"p1", "p3", "p5", "q5"};
  EXPECT_TRUE(found);
}

TEST(Graph, MinThreeAEdgesFollowAnticommutation) {
  auto g = build_graph(get_model("min:IIIa").spec, 16, Boundary::open);
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = 0; b < g.size(); ++b) {
      bool anti = !commutator(g.vertices[a].term, g.vertices[b].term, Convention::exact).empty();
      EXPECT_EQ(g.edge(a, b), anti) << g.vertices[a].label << " " << g.vertices[b].label;
    }
}

TEST(Graph, MixedCommutationRaises) {
  std::vector<GraphVertex> vs(2);
  vs[0].label = "a";
  vs[0].term = parse_operator("1 * XI");
  vs[1].label = "b";
  vs[1].term = parse_operator("1 * XX\n1 * ZZ");
  try {
    graph_from_terms(vs, 2, Boundary::open, 1);
    FAIL() << "expected MixedCommutation";
  } catch (const MixedCommutation& e) {
    EXPECT_EQ(e.first(), "a");
    EXPECT_EQ(e.second(), "b");
  }
}

TEST(Graph, ClawFinderMatchesEnumeration) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_graph(4 + rng() % 21, 0.1 + 0.05 * static_cast<double>(rng() % 8), rng);
    EXPECT_EQ(oracle::as_sets(find_claws(g), false), oracle::claws(g));
  }
}

TEST(Graph, HoleFinderMatchesEnumeration) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    auto g = oracle::random_graph(4 + rng() % 21, 0.08 + 0.04 * static_cast<double>(rng() % 6), rng);
    for (size_t len : {4u, 6u, 8u}) {
      EXPECT_EQ(oracle::as_sets(find_even_holes(g, len), true), oracle::even_holes(g, len));
    }
  }
}

TEST(Graph, KnownSmallGraphs) {
  auto cycle = [](size_t n) {
    FrustrationGraph g;
    g.vertices.resize(n);
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) g.adjacency[i][(i + 1) % n] = g.adjacency[(i + 1) % n][i] = true;
    return g;
  };
  EXPECT_EQ(find_even_holes(cycle(6)).size(), 1u);
  EXPECT_TRUE(find_even_holes(cycle(5)).empty());
  EXPECT_TRUE(find_even_holes(cycle(14), 12).empty());
  FrustrationGraph star;
  star.vertices.resize(4);
  star.adjacency.assign(4, std::vector<bool>(4, false));
  for (size_t i = 1; i < 4; ++i) star.adjacency[0][i] = star.adjacency[i][0] = true;
  auto cl = find_claws(star);
  ASSERT_EQ(cl.size(), 1u);
  EXPECT_EQ(cl[0].vertices, (std::vector<size_t>{0, 1, 2, 3}));
  EXPECT_THROW(find_even_holes(star, 3), std::invalid_argument);
}

TEST(Graph, DotExportIsDeterministic) {
  auto g = build_graph(get_model("tilde:II").spec, 8, Boundary::open);
  std::string a = export_dot(g), b = export_dot(build_graph(get_model("tilde:II").spec, 8, Boundary::open));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("graph", 0), 0u);
  EXPECT_NE(a.find("\"p1\" -- "), std::string::npos);
}
