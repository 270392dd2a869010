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
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "chainint/linear_solver.hpp"
#include "chainint/ti_algebra.hpp"

namespace chainint {

class ResourceCap : public std::runtime_error {
 public:
  ResourceCap(const std::string& what, long long requested, long long cap)
      : std::runtime_error(what + ": " + std::to_string(requested) + " exceeds the cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  long long requested() const { return requested_; }
  long long cap() const { return cap_; }

 private:
  long long requested_;
  long long cap_;
};

// CHAININT_MAX_BASIS overrides the default ansatz size cap.
inline long long default_basis_cap() {
  if (const char* s = std::getenv("CHAININT_MAX_BASIS")) {
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("CHAININT_MAX_BASIS must be an integer");
    }
  }
  return 200000;
}

struct ChargeOptions {
  std::optional<ParamPoint> point;  // numeric run at this point when set
  long long max_basis = default_basis_cap();
  bool reverse_pivots = false;
  bool verify_loci = false;  // symbolic runs: re-solve on each pivot factor
};

struct ChargeSpace {
  std::string model;
  int k = 0;
  int n_sites = 0;  // effective sites (blocks) on the ring
  int unit_cell = 1;
  std::optional<ParamPoint> point;
  long long basis_size = 0;
  int dimension = 0;           // conserved densities of support <= k
  int lower_dimension = 0;     // those of support <= k - 1
  int nontrivial_dimension = 0;  // modulo lower-k charges, H and local symmetries
  bool includes_hamiltonian = false;
  int local_symmetries = 0;  // support-k strings commuting with every term
  std::vector<LocalOperator> basis;     // reduced; longest strings lead
  std::vector<LocalOperator> quotient;  // representatives of the nontrivial part
  std::vector<Polynomial> loci;         // symbolic runs only
};

namespace detail {

template <class F>
struct RingCharges {
  int dimension = 0;
  std::vector<SparseRow<F>> rows;  // reduced basis in unknown coordinates
  std::vector<Polynomial> loci;
};

// Orbit representative of a string under block rotations of the ring.
class OrbitMap {
 public:
  OrbitMap(int n_sites, int unit_cell) : n_(n_sites), uc_(unit_cell) {}
  PauliString rep(const PauliString& s) {
    auto key = std::make_pair(s.x, s.z);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    PauliString best = s.key();
    for (int r = uc_; r < n_; r += uc_) {
      PauliString t = translate(s.key(), r, n_, Boundary::periodic);
      if (canonical_less(t, best)) best = t;
    }
    cache_.emplace(key, best);
    return best;
  }

 private:
  struct Hash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      return std::hash<uint64_t>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
    }
  };
  int n_, uc_;
  std::unordered_map<std::pair<uint64_t, uint64_t>, PauliString, Hash> cache_;
};

// Reduced row basis with the given column priority: lower rank() leads.
template <class F>
std::vector<SparseRow<F>> reduce_basis(std::vector<SparseRow<F>> vecs, const std::vector<int>& rank_of_col) {
  const int n = static_cast<int>(rank_of_col.size());
  std::vector<int> col_of_rank(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) col_of_rank[static_cast<size_t>(rank_of_col[static_cast<size_t>(c)])] = c;
  Echelon<F> ech(n);
  for (auto& v : vecs) {
    SparseRow<F> r;
    for (auto& [c, x] : v) r.emplace_back(rank_of_col[static_cast<size_t>(c)], x);
    ech.add_row(sorted_row(std::move(r)));
  }
  ech.finish(n);
  std::vector<SparseRow<F>> ranked = ech.rows();
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  std::vector<SparseRow<F>> out;
  for (const auto& r : ranked) {
    SparseRow<F> v;
    for (const auto& [c, x] : r) v.emplace_back(col_of_rank[static_cast<size_t>(c)], x);
    out.push_back(sorted_row(std::move(v)));
  }
  return out;
}

// Homogeneous rows: an unknown alone in a row vanishes. Such unknowns are
// removed from every row and kept as rows {u: 1}; repeats to a fixed point.
template <class F>
void peel_singletons(std::vector<SparseRow<F>>& rows, int n_unknowns) {
  std::vector<std::vector<size_t>> rows_of(static_cast<size_t>(n_unknowns));
  std::vector<size_t> live(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    live[r] = rows[r].size();
    for (const auto& [c, v] : rows[r]) rows_of[static_cast<size_t>(c)].push_back(r);
  }
  std::vector<char> zero(static_cast<size_t>(n_unknowns), 0);
  std::vector<size_t> queue;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (live[r] == 1) queue.push_back(r);
  }
  while (!queue.empty()) {
    size_t r = queue.back();
    queue.pop_back();
    if (live[r] != 1) continue;
    for (const auto& [c, v] : rows[r]) {
      if (zero[static_cast<size_t>(c)] != 0) continue;
      zero[static_cast<size_t>(c)] = 1;
      for (size_t q : rows_of[static_cast<size_t>(c)]) {
        if (--live[q] == 1) queue.push_back(q);
      }
    }
  }
  std::vector<SparseRow<F>> out;
  for (auto& row : rows) {
    SparseRow<F> kept;
    for (auto& e : row) {
      if (zero[static_cast<size_t>(e.first)] == 0) kept.push_back(std::move(e));
    }
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  for (int c = 0; c < n_unknowns; ++c) {
    if (zero[static_cast<size_t>(c)] != 0) out.push_back({{c, F(1)}});
  }
  rows = std::move(out);
}

template <class F>
RingCharges<F> ring_charges(const std::vector<PauliString>& unknowns, const BasicOperator<F>& h_ring, int n_sites,
                            int unit_cell, const ChargeOptions& opt) {
  OrbitMap orbits(n_sites, unit_cell);
  std::map<PauliString, size_t, CanonicalLess> row_of;
  std::vector<SparseRow<F>> rows;
  for (size_t u = 0; u < unknowns.size(); ++u) {
    for (const auto& [kh, vh] : h_ring.terms()) {
      const PauliString& a = unknowns[u];
      if (!anticommutes(a, kh)) continue;
      PauliString p = mul(a, kh);
      F v = (vh).times_i_power(p.phase + 3);
      PauliString r = orbits.rep(p.key());
      auto it = row_of.find(r);
      if (it == row_of.end()) {
        it = row_of.emplace(r, rows.size()).first;
        rows.emplace_back();
      }
      rows[it->second].emplace_back(static_cast<int>(u), std::move(v));
    }
  }
  LinearSystem<F> sys;
  sys.n_unknowns = static_cast<int>(unknowns.size());
  for (auto& r : rows) r = sorted_row(std::move(r));
  // Symbolic systems keep every pivot so that special loci are seen.
  if constexpr (!std::is_same_v<F, Coefficient>) peel_singletons(rows, sys.n_unknowns);
  for (auto& r : rows) {
    LinearEquation<F> e;
    e.coeffs = std::move(r);
    if (!e.coeffs.empty()) sys.equations.push_back(std::move(e));
  }
  SolveOptions so;
  so.reverse_columns = opt.reverse_pivots;
  RingCharges<F> out;
  Solution<F> sol;
  if constexpr (std::is_same_v<F, Coefficient>) {
    auto sym = solve_symbolic(sys, so, opt.verify_loci);
    sol = std::move(sym.generic);
    for (const auto& l : sym.loci) {
      if (!opt.verify_loci || l.changes_solution) out.loci.push_back(l.polynomial.primitive_integer());
    }
  } else {
    sol = solve_linear(sys, so);
  }
  out.dimension = sol.dimension();
  // Longest strings first, then canonical order.
  std::vector<int> order(unknowns.size());
  for (size_t c = 0; c < unknowns.size(); ++c) order[c] = static_cast<int>(c);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int la = support_length(unknowns[static_cast<size_t>(a)], unit_cell);
    int lb = support_length(unknowns[static_cast<size_t>(b)], unit_cell);
    if (la != lb) return la > lb;
    return canonical_less(unknowns[static_cast<size_t>(a)], unknowns[static_cast<size_t>(b)]);
  });
  std::vector<int> rank_of_col(unknowns.size());
  for (size_t r = 0; r < order.size(); ++r) rank_of_col[static_cast<size_t>(order[r])] = static_cast<int>(r);
  out.rows = reduce_basis(std::move(sol.nullspace), rank_of_col);
  return out;
}

template <class F>
LocalOperator to_local(const std::vector<PauliString>& unknowns, const SparseRow<F>& v) {
  LocalOperator op;
  for (const auto& [c, x] : v) {
    if constexpr (std::is_same_v<F, Coefficient>) {
      op.add(unknowns[static_cast<size_t>(c)], x);
    } else {
      op.add(unknowns[static_cast<size_t>(c)], Coefficient(x));
    }
  }
  return op;
}

template <class F>
void fill_space(ChargeSpace& out, const std::vector<PauliString>& unknowns, const RingCharges<F>& rc,
                const BasicOperator<F>& h_density, const BasicOperator<F>& h_ring) {
  const int uc = out.unit_cell;
  out.dimension = rc.dimension;
  out.loci = rc.loci;
  std::map<PauliString, int, CanonicalLess> col;
  for (size_t c = 0; c < unknowns.size(); ++c) col.emplace(unknowns[c], static_cast<int>(c));
  auto strict = [&](const SparseRow<F>& v) {
    SparseRow<F> r;
    for (const auto& [c, x] : v) {
      if (support_length(unknowns[static_cast<size_t>(c)], uc) == out.k) r.emplace_back(c, x);
    }
    return r;
  };
  SparseRow<F> hv;
  BasicOperator<F> ha = anchored(h_density, uc);
  for (const auto& [s, v] : ha.terms()) {
    auto it = col.find(s);
    if (it != col.end()) hv.emplace_back(it->second, v);
  }
  hv = sorted_row(std::move(hv));
  Echelon<F> all(static_cast<int>(unknowns.size()));
  for (const auto& r : rc.rows) all.add_row(r);
  out.includes_hamiltonian = !hv.empty() && all.reduce(hv).empty();
  Echelon<F> quot(static_cast<int>(unknowns.size()));
  for (size_t c = 0; c < unknowns.size(); ++c) {
    if (support_length(unknowns[c], uc) != out.k) continue;
    bool commutes = true;
    for (const auto& [kh, vh] : h_ring.terms()) {
      if (anticommutes(unknowns[c], kh)) {
        commutes = false;
        break;
      }
    }
    if (!commutes) continue;
    ++out.local_symmetries;
    quot.add_row({{static_cast<int>(c), F(1)}});
  }
  SparseRow<F> hs = strict(hv);
  if (out.includes_hamiltonian && !hs.empty()) quot.add_row(hs);
  int lower = 0;
  for (const auto& r : rc.rows) {
    out.basis.push_back(to_local(unknowns, r));
    SparseRow<F> s = strict(r);
    if (s.empty()) {
      ++lower;
      continue;
    }
    if (quot.add_row(s) == Echelon<F>::Outcome::new_pivot) out.quotient.push_back(to_local(unknowns, r));
  }
  out.lower_dimension = lower;
  out.nontrivial_dimension = static_cast<int>(out.quotient.size());
}

}  // namespace detail

// Translation-invariant conserved densities of support <= k effective
// sites on a periodic ring of n_sites effective sites.
inline ChargeSpace brute_force_charges(const Model& model, int k, int n_sites, const ChargeOptions& opt = {}) {
  const int uc = model_unit_cell(model);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n_sites < 2 * k) {
    throw LatticeError("ring of " + std::to_string(n_sites) + " effective sites is shorter than 2k = " +
                       std::to_string(2 * k));
  }
  if (n_sites * uc > kMaxSites) throw LatticeError("ring longer than 64 physical sites");
  long long letters = (1ll << (2 * uc)) - 1;
  long long count = 0;
  for (int len = 1; len <= k; ++len) {
    long long c = letters;
    if (len >= 2) c *= letters;
    for (int m = 0; m < len - 2; ++m) c *= letters + 1;
    count += c;
    if (count > opt.max_basis) throw ResourceCap("ansatz size", count, opt.max_basis);
  }
  ChargeSpace out;
  out.model = model_name(model);
  out.k = k;
  out.n_sites = n_sites;
  out.unit_cell = uc;
  out.point = opt.point;
  auto unknowns = enumerate_anchored(uc, 1, k);
  out.basis_size = static_cast<long long>(unknowns.size());
  LocalOperator h_ring = instantiate(model, n_sites * uc, Boundary::periodic);
  LocalOperator h_density = model_density(model);
  if (opt.point) {
    auto ip = index_point(*opt.point);
    NumericOperator hn = evaluate(h_ring, ip);
    auto rc = detail::ring_charges(unknowns, hn, n_sites * uc, uc, opt);
    detail::fill_space(out, unknowns, rc, evaluate(h_density, ip), hn);
  } else {
    auto rc = detail::ring_charges(unknowns, h_ring, n_sites * uc, uc, opt);
    detail::fill_space(out, unknowns, rc, h_density, h_ring);
  }
  return out;
}

inline nlohmann::json charge_space_json(const ChargeSpace& s) {
  nlohmann::json j;
  j["model"] = s.model;
  j["k"] = s.k;
  j["n_sites"] = s.n_sites;
  j["unit_cell"] = s.unit_cell;
  if (s.point) j["point"] = point_text(*s.point);
  j["basis_size"] = s.basis_size;
  j["dimension"] = s.dimension;
  j["lower_dimension"] = s.lower_dimension;
  j["nontrivial_dimension"] = s.nontrivial_dimension;
  j["includes_hamiltonian"] = s.includes_hamiltonian;
  j["local_symmetries"] = s.local_symmetries;
  auto ops = [&](const std::vector<LocalOperator>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& op : v) a.push_back(to_text(op, s.unit_cell));
    return a;
  };
  j["basis"] = ops(s.basis);
  j["quotient"] = ops(s.quotient);
  nlohmann::json loci = nlohmann::json::array();
  for (const auto& p : s.loci) loci.push_back(p.to_string());
  j["loci"] = loci;
  return j;
}

}  // namespace chainint
