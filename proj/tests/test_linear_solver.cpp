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

#include "chainint/charge_solver.hpp"
#include "chainint/linear_solver.hpp"

using namespace chainint;

namespace {

using Q = GaussRational;

Q rnd(std::mt19937_64& rng, int span = 5) {
  return Q(mpq_class(static_cast<long>(rng() % (2 * span + 1)) - span, static_cast<long>(rng() % 3) + 1));
}

// Rows of B * C with B m x r and C r x n.
LinearSystem<Q> planted(std::mt19937_64& rng, int m, int r, int n) {
  std::vector<std::vector<Q>> B(m, std::vector<Q>(r)), C(r, std::vector<Q>(n));
  for (auto& row : B)
    for (auto& x : row) x = rnd(rng);
  for (auto& row : C)
    for (auto& x : row) x = rnd(rng);
  LinearSystem<Q> sys;
  sys.n_unknowns = n;
  for (int i = 0; i < m; ++i) {
    LinearEquation<Q> e;
    for (int j = 0; j < n; ++j) {
      Q acc;
      for (int k = 0; k < r; ++k) acc = acc + B[i][k] * C[k][j];
      if (!acc.is_zero()) e.coeffs.emplace_back(j, acc);
    }
    sys.equations.push_back(e);
  }
  return sys;
}

std::vector<Q> dense(const SparseRow<Q>& v, int n) {
  std::vector<Q> d(static_cast<size_t>(n));
  for (const auto& [c, x] : v) d[static_cast<size_t>(c)] = x;
  return d;
}

bool same_span(const std::vector<SparseRow<Q>>& a, const std::vector<SparseRow<Q>>& b, int n) {
  if (a.size() != b.size()) return false;
  Echelon<Q> e(n);
  for (const auto& r : a) e.add_row(r);
  for (const auto& r : b) {
    if (!e.reduce(r).empty()) return false;
  }
  return true;
}

}  // namespace

TEST(LinearSolver, PlantedRank) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(rng() % 10), r = 1 + static_cast<int>(rng() % 5), m = r + static_cast<int>(rng() % 6);
    auto sys = planted(rng, m, r, n);
    auto s = solve_linear(sys);
    ASSERT_TRUE(s.consistent);
    // A random planted product has full rank r with overwhelming probability.
    EXPECT_EQ(s.dimension(), n - r);
    for (const auto& v : s.nullspace) {
      for (const auto& res : residuals(sys, dense(v, n))) EXPECT_TRUE(res.is_zero());
    }
  }
}

TEST(LinearSolver, PivotOrderStability) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto sys = planted(rng, 8, 4, 12);
    SolveOptions rev;
    rev.reverse_columns = true;
    auto a = solve_linear(sys), b = solve_linear(sys, rev);
    EXPECT_EQ(a.dimension(), b.dimension());
    EXPECT_TRUE(same_span(a.nullspace, b.nullspace, 12));
  }
}

TEST(LinearSolver, InconsistentSystem) {
  LinearSystem<Q> sys;
  sys.n_unknowns = 2;
  sys.equations.push_back({{{0, Q(1)}, {1, Q(1)}}, Q(1)});
  sys.equations.push_back({{{0, Q(2)}, {1, Q(2)}}, Q(3)});
  auto s = solve_linear(sys);
  EXPECT_FALSE(s.consistent);
  EXPECT_EQ(s.inconsistent_equation, 1);
}

TEST(LinearSolver, ParticularSolution) {
  LinearSystem<Q> sys;
  sys.n_unknowns = 3;
  sys.equations.push_back({{{0, Q(1)}, {1, Q(2)}}, Q(5)});
  sys.equations.push_back({{{1, Q(1)}, {2, Q(-1)}}, Q(1)});
  auto s = solve_linear(sys);
  ASSERT_TRUE(s.consistent);
  for (const auto& r : residuals(sys, s.particular)) EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(s.dimension(), 1);
}

TEST(LinearSolver, SingletonPeelingKeepsSolutionSpace) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 20;
    std::vector<SparseRow<Q>> rows;
    for (int e = 0; e < 24; ++e) {
      SparseRow<Q> r;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k) r.emplace_back(static_cast<int>(rng() % n), rnd(rng, 3));
      r = sorted_row(std::move(r));
      if (!r.empty()) rows.push_back(r);
    }
    auto to_sys = [&](const std::vector<SparseRow<Q>>& rs) {
      LinearSystem<Q> s;
      s.n_unknowns = n;
      for (const auto& r : rs) s.equations.push_back({r, Q()});
      return s;
    };
    auto plain = solve_linear(to_sys(rows));
    auto peeled_rows = rows;
    detail::peel_singletons(peeled_rows, n);
    auto peeled = solve_linear(to_sys(peeled_rows));
    EXPECT_EQ(plain.dimension(), peeled.dimension());
    EXPECT_TRUE(same_span(plain.nullspace, peeled.nullspace, n));
  }
}

TEST(SymbolicSolver, FindsDeterminantLocus) {
  Coefficient c1 = Coefficient::variable("c1"), c2 = Coefficient::variable("c2");
  LinearSystem<Coefficient> sys;
  sys.n_unknowns = 2;
  sys.equations.push_back({{{0, c1}, {1, -c2}}, Coefficient()});
  sys.equations.push_back({{{0, Coefficient(1)}, {1, Coefficient(-1)}}, Coefficient()});
  auto s = solve_symbolic(sys);
  EXPECT_EQ(s.generic.dimension(), 0);
  bool found = false;
  for (const auto& l : s.loci) {
    if (locus_text(l.polynomial) == locus_text((c1 - c2).numerator())) {
      found = true;
      EXPECT_TRUE(l.verified);
      EXPECT_TRUE(l.changes_solution);
      EXPECT_EQ(l.locus_dimension, 1);
    }
  }
  EXPECT_TRUE(found);
}
