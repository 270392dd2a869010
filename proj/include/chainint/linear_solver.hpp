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
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chainint/coefficient.hpp"

namespace chainint {

template <class F>
using SparseRow = std::vector<std::pair<int, F>>;

// sum_j coeffs[j].second * q[coeffs[j].first] = rhs
template <class F>
struct LinearEquation {
  SparseRow<F> coeffs;
  F rhs{};
};

template <class F>
struct LinearSystem {
  int n_unknowns = 0;
  std::vector<LinearEquation<F>> equations;
};

template <class F>
struct Solution {
  bool consistent = true;
  int n_unknowns = 0;
  int rank = 0;
  // Index of the first equation at which inconsistency appeared, or -1.
  int inconsistent_equation = -1;
  std::vector<F> particular;             // free variables set to zero
  std::vector<SparseRow<F>> nullspace;   // one vector per free column
  std::vector<int> pivot_columns;        // ascending
  std::vector<F> pivot_values;           // leading value when each pivot was created
  int dimension() const { return consistent ? n_unknowns - rank : -1; }
};

struct SolveOptions {
  // Eliminate columns in reverse index order.
  bool reverse_columns = false;
  // Stop at the first inconsistent equation.
  bool stop_on_inconsistent = false;
};

namespace detail {

// a - f * b for rows sorted by column.
template <class F>
SparseRow<F> axpy_row(const SparseRow<F>& a, const F& f, const SparseRow<F>& b) {
  SparseRow<F> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      F v = -(f * b[j].second);
      if (!is_zero(v)) r.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      F v = a[i].second - f * b[j].second;
      if (!is_zero(v)) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace detail

// Incremental sparse Gauss-Jordan elimination. Column n is the right-hand side.
template <class F>
class Echelon {
 public:
  explicit Echelon(int n_cols) : n_(n_cols) {}

  enum class Outcome { new_pivot, dependent, inconsistent };

  // Row sorted by column, may contain column n (rhs).
  Outcome add_row(SparseRow<F> row) {
    while (!row.empty()) {
      int c = row.front().first;
      if (c == n_) {
        consistent_ = false;
        return Outcome::inconsistent;
      }
      auto it = pivot_of_.find(c);
      if (it == pivot_of_.end()) {
        F lead = row.front().second;
        F inv = F(1) / lead;
        for (auto& e : row) e.second = e.second * inv;
        pivot_of_.emplace(c, rows_.size());
        rows_.push_back(std::move(row));
        pivot_values_.emplace(c, std::move(lead));
        return Outcome::new_pivot;
      }
      F f = row.front().second;
      row = detail::axpy_row(row, f, rows_[it->second]);
    }
    return Outcome::dependent;
  }

  bool consistent() const { return consistent_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Pivot rows in insertion order; fully reduced after finish().
  const std::vector<SparseRow<F>>& rows() const { return rows_; }

  // Reduces the row against current pivots without inserting it.
  SparseRow<F> reduce(SparseRow<F> row) const {
    size_t k = 0;
    while (k < row.size()) {
      auto it = pivot_of_.find(row[k].first);
      if (it == pivot_of_.end()) {
        ++k;
        continue;
      }
      F f = row[k].second;
      row = detail::axpy_row(row, f, rows_[it->second]);
    }
    return row;
  }

  // Brings pivot rows to reduced echelon form and extracts the solution.
  Solution<F> finish(int n_unknowns) {
    for (auto it = pivot_of_.rbegin(); it != pivot_of_.rend(); ++it) {
      SparseRow<F>& r = rows_[it->second];
      size_t k = 1;
      while (k < r.size()) {
        auto pv = pivot_of_.find(r[k].first);
        if (pv == pivot_of_.end()) {
          ++k;
          continue;
        }
        F f = r[k].second;
        r = detail::axpy_row(r, f, rows_[pv->second]);
      }
    }
    Solution<F> s;
    s.consistent = consistent_;
    s.n_unknowns = n_unknowns;
    s.rank = rank();
    for (const auto& [c, idx] : pivot_of_) {
      s.pivot_columns.push_back(c);
      s.pivot_values.push_back(pivot_values_.at(c));
    }
    if (!consistent_) return s;
    s.particular.assign(static_cast<size_t>(n_unknowns), F());
    for (const auto& [c, idx] : pivot_of_) {
      const auto& r = rows_[idx];
      if (!r.empty() && r.back().first == n_) s.particular[static_cast<size_t>(c)] = r.back().second;
    }
    std::map<int, std::vector<std::pair<int, F>>> by_free;
    for (const auto& [c, idx] : pivot_of_) {
      for (const auto& [col, v] : rows_[idx]) {
        if (col != c && col != n_) by_free[col].emplace_back(c, -v);
      }
    }
    for (int f = 0; f < n_unknowns; ++f) {
      if (pivot_of_.count(f) != 0) continue;
      SparseRow<F> v = by_free[f];
      v.emplace_back(f, F(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      s.nullspace.push_back(std::move(v));
    }
    return s;
  }

 private:
  int n_;
  bool consistent_ = true;
  std::map<int, size_t> pivot_of_;
  std::vector<SparseRow<F>> rows_;
  std::map<int, F> pivot_values_;
};

template <class F>
SparseRow<F> sorted_row(SparseRow<F> row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<F> out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second = out.back().second + e.second;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(e.second)) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

template <class F>
Solution<F> solve_linear(const LinearSystem<F>& sys, const SolveOptions& opt = {}) {
  const int n = sys.n_unknowns;
  auto map_col = [&](int c) { return opt.reverse_columns ? n - 1 - c : c; };
  Echelon<F> ech(n);
  int first_bad = -1;
  for (size_t e = 0; e < sys.equations.size(); ++e) {
    const auto& eq = sys.equations[e];
    SparseRow<F> row;
    row.reserve(eq.coeffs.size() + 1);
    for (const auto& [c, v] : eq.coeffs) {
      if (c < 0 || c >= n) throw std::out_of_range("unknown index out of range");
      row.emplace_back(map_col(c), v);
    }
    if (!is_zero(eq.rhs)) row.emplace_back(n, eq.rhs);
    auto outcome = ech.add_row(sorted_row(std::move(row)));
    if (outcome == Echelon<F>::Outcome::inconsistent && first_bad < 0) {
      first_bad = static_cast<int>(e);
      if (opt.stop_on_inconsistent) break;
    }
  }
  Solution<F> s = ech.finish(n);
  s.inconsistent_equation = first_bad;
  if (opt.reverse_columns) {
    Solution<F> t = s;
    for (auto& c : t.pivot_columns) c = map_col(c);
    if (s.consistent) {
      for (int c = 0; c < n; ++c) t.particular[static_cast<size_t>(map_col(c))] = s.particular[static_cast<size_t>(c)];
      for (auto& v : t.nullspace) {
        for (auto& e : v) e.first = map_col(e.first);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
    }
    return t;
  }
  return s;
}

// Residual of the system at a candidate solution (one entry per equation).
template <class F>
std::vector<F> residuals(const LinearSystem<F>& sys, const std::vector<F>& q) {
  std::vector<F> out;
  for (const auto& eq : sys.equations) {
    F acc = -eq.rhs;
    for (const auto& [c, v] : eq.coeffs) acc = acc + v * q[static_cast<size_t>(c)];
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic systems: special parameter loci.

// Substitutes variable v by a rational function.
inline Coefficient substitute_variable(const Polynomial& p, int v, const Coefficient& value) {
  Coefficient acc;
  auto coeffs = p.coefficients_in(v);
  int top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  for (int e = top; e >= 0; --e) {
    acc = acc * value;
    auto it = coeffs.find(e);
    if (it != coeffs.end()) acc = acc + Coefficient(it->second);
  }
  return acc;
}

inline Coefficient substitute_variable(const Coefficient& c, int v, const Coefficient& value) {
  Coefficient d = substitute_variable(c.denominator(), v, value);
  if (d.is_zero()) throw std::domain_error("pole on locus");
  return substitute_variable(c.numerator(), v, value) / d;
}

struct SpecialLocus {
  Polynomial polynomial;     // the locus is polynomial = 0
  bool verified = false;     // re-solved on the locus
  bool changes_solution = false;
  int locus_dimension = -1;  // -1 when inconsistent on the locus
};

struct SymbolicSolution {
  Solution<Coefficient> generic;
  std::vector<Polynomial> pivot_polynomials;
  std::vector<SpecialLocus> loci;
};

// For f linear in some variable with constant leading coefficient, returns
// (v, value) such that substituting v = value makes f vanish.
inline std::optional<std::pair<int, Coefficient>> solve_for_variable(const Polynomial& f) {
  for (int v = 0; v < kMaxVariables; ++v) {
    if (f.degree_in(v) != 1) continue;
    Polynomial a = f.coefficient_of(v, 1);
    if (!a.is_constant()) continue;
    Polynomial g = f.coefficient_of(v, 0);
    return std::make_pair(v, Coefficient(-g, Polynomial(1)) / Coefficient(a));
  }
  return std::nullopt;
}

inline LinearSystem<Coefficient> substitute_system(const LinearSystem<Coefficient>& sys, int v, const Coefficient& val) {
  LinearSystem<Coefficient> out;
  out.n_unknowns = sys.n_unknowns;
  for (const auto& eq : sys.equations) {
    LinearEquation<Coefficient> e;
    for (const auto& [c, x] : eq.coeffs) {
      Coefficient y = substitute_variable(x, v, val);
      if (!y.is_zero()) e.coeffs.emplace_back(c, std::move(y));
    }
    e.rhs = substitute_variable(eq.rhs, v, val);
    out.equations.push_back(std::move(e));
  }
  return out;
}

// Candidate factors from a set of field elements.
inline void collect_factors(const Coefficient& c, std::set<Polynomial>& out) {
  for (const auto& [f, m] : factor_polynomial(c.numerator())) out.insert(f);
  for (const auto& [f, m] : factor_polynomial(c.denominator())) out.insert(f);
}

// Generic solve plus the factors whose vanishing changes rank or consistency.
inline SymbolicSolution solve_symbolic(const LinearSystem<Coefficient>& sys, const SolveOptions& opt = {},
                                       bool verify_loci = true) {
  SymbolicSolution out;
  out.generic = solve_linear(sys, opt);
  std::set<Polynomial> cand;
  for (const auto& v : out.generic.pivot_values) collect_factors(v, cand);
  out.pivot_polynomials.assign(cand.begin(), cand.end());
  for (const auto& f : out.pivot_polynomials) {
    SpecialLocus loc;
    loc.polynomial = f;
    if (verify_loci) {
      auto sv = solve_for_variable(f);
      if (sv) {
        try {
          auto sub = substitute_system(sys, sv->first, sv->second);
          auto s = solve_linear(sub, opt);
          loc.verified = true;
          loc.locus_dimension = s.dimension();
          loc.changes_solution = s.consistent != out.generic.consistent || s.rank != out.generic.rank;
        } catch (const std::domain_error&) {
          loc.verified = false;
        }
      }
    }
    out.loci.push_back(std::move(loc));
  }
  return out;
}

inline std::string locus_text(const Polynomial& p) { return p.primitive_integer().to_string(); }

}  // namespace chainint
