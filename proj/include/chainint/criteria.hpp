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
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainint/linear_solver.hpp"
#include "chainint/ti_algebra.hpp"

namespace chainint {

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& assumption, const std::string& detail, const std::string& locus = "generic")
      : std::runtime_error(assumption + " does not hold: " + detail), assumption_(assumption), locus_(locus) {}
  const std::string& assumption() const { return assumption_; }
  const std::string& locus() const { return locus_; }

 private:
  std::string assumption_;
  std::string locus_;
};

// ---------------------------------------------------------------------------
// Injectivity and minimal form.

struct InjectivityReport {
  bool holds = true;
  std::optional<PauliString> witness;  // letter on block 0
  std::string witness_leg;             // "left" or "right"
  int failures = 0;
};

inline InjectivityReport check_injectivity(const HamiltonianSpec& spec) {
  InjectivityReport r;
  const int uc = spec.unit_cell;
  for (const char* leg : {"left", "right"}) {
    int block = std::string(leg) == "left" ? 0 : 1;
    for (const auto& a : enumerate_anchored(uc, 1, 1)) {
      LocalOperator A(shift_string(a, block * uc), Coefficient(1));
      if (commutator(A, spec.density2, Convention::paper).empty()) {
        ++r.failures;
        if (r.holds) {
          r.holds = false;
          r.witness = a;
          r.witness_leg = leg;
        }
      }
    }
  }
  return r;
}

struct MinimalFormReport {
  bool is_minimal = false;
  std::optional<std::array<PauliString, 4>> factors;  // (h_a, h_b, h_c, h_d)
};

// Terms ordered by coefficient, then by string.
inline std::vector<std::pair<PauliString, Coefficient>> ordered_terms(const LocalOperator& op) {
  std::vector<std::pair<PauliString, Coefficient>> ts(op.terms().begin(), op.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return canonical_less(a.first, b.first);
  });
  return ts;
}

inline MinimalFormReport check_minimal_form(const HamiltonianSpec& spec) {
  MinimalFormReport r;
  if (spec.density2.size() != 2) return r;
  auto ts = ordered_terms(spec.density2);
  const int uc = spec.unit_cell;
  std::array<PauliString, 4> f = {block_of(ts[0].first, 0, uc), block_of(ts[0].first, 1, uc),
                                  block_of(ts[1].first, 0, uc), block_of(ts[1].first, 1, uc)};
  r.factors = f;
  r.is_minimal = anticommutes(f[0], f[2]) && anticommutes(f[1], f[3]);
  return r;
}

// ---------------------------------------------------------------------------
// B sets.

struct BSet {
  int k = 0;
  std::vector<LocalOperator> basis;
  std::vector<SpecialLocus> special_loci;
  std::vector<Polynomial> pivot_polynomials;
  std::vector<PauliString> B_l, B_r;  // letters on each leg of h2
  std::vector<PauliString> B_lr;      // candidate strings l (x) r
};

inline void leg_letters(const HamiltonianSpec& spec, std::vector<PauliString>& bl, std::vector<PauliString>& br) {
  std::set<PauliString, CanonicalLess> l, r;
  for (const auto& [k, v] : spec.density2.terms()) {
    l.insert(block_of(k, 0, spec.unit_cell));
    r.insert(block_of(k, 1, spec.unit_cell));
  }
  bl.assign(l.begin(), l.end());
  br.assign(r.begin(), r.end());
}

// Equations for: coefficient of every output string of length >= min_len
// in [Q, H] vanishes, Q = constant + sum_u q_u u.
inline LinearSystem<Coefficient> charge_system(const std::vector<PauliString>& unknowns, const LocalOperator& constant,
                                               const LocalOperator& h, int unit_cell, int min_len,
                                               std::vector<PauliString>* row_strings = nullptr) {
  std::map<PauliString, std::vector<std::pair<int, Coefficient>>, CanonicalLess> rows;
  std::map<PauliString, Coefficient, CanonicalLess> rhs;
  for (size_t u = 0; u < unknowns.size(); ++u) {
    LocalOperator r = ti_commutator(LocalOperator(unknowns[u], Coefficient(1)), h, unit_cell);
    for (const auto& [s, v] : r.terms()) {
      if (support_length(s, unit_cell) >= min_len) rows[s].emplace_back(static_cast<int>(u), v);
    }
  }
  if (!constant.empty()) {
    LocalOperator rc = ti_commutator(constant, h, unit_cell);
    for (const auto& [s, v] : rc.terms()) {
      if (support_length(s, unit_cell) >= min_len) {
        rows[s];
        rhs[s] = -v;
      }
    }
  }
  LinearSystem<Coefficient> sys;
  sys.n_unknowns = static_cast<int>(unknowns.size());
  for (auto& [s, entries] : rows) {
    LinearEquation<Coefficient> e;
    e.coeffs = sorted_row(std::move(entries));
    auto it = rhs.find(s);
    if (it != rhs.end()) e.rhs = it->second;
    if (e.coeffs.empty() && e.rhs.is_zero()) continue;
    sys.equations.push_back(std::move(e));
    if (row_strings != nullptr) row_strings->push_back(s);
  }
  return sys;
}

inline LocalOperator combine(const std::vector<PauliString>& unknowns, const SparseRow<Coefficient>& v) {
  LocalOperator op;
  for (const auto& [c, x] : v) op.add(unknowns[static_cast<size_t>(c)], x);
  return op;
}

inline LocalOperator combine_dense(const std::vector<PauliString>& unknowns, const std::vector<Coefficient>& v) {
  LocalOperator op;
  for (size_t c = 0; c < v.size(); ++c) op.add(unknowns[c], v[c]);
  return op;
}

// Ratio a/b when a is a scalar multiple of b.
inline std::optional<Coefficient> proportionality(const LocalOperator& a, const LocalOperator& b) {
  if (a.size() != b.size() || b.empty()) return std::nullopt;
  std::optional<Coefficient> ratio;
  for (const auto& [k, v] : b.terms()) {
    Coefficient x = a.coefficient(k);
    if (x.is_zero()) return std::nullopt;
    Coefficient r = x / v;
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

// [h_n, h_{n+1}] in the bracket convention without the factor 2i.
inline LocalOperator iota2(const HamiltonianSpec& spec, std::vector<TraceStep<Coefficient>>* steps = nullptr) {
  LocalOperator out;
  const int uc = spec.unit_cell;
  for (const auto& [a, va] : spec.density2.terms()) {
    for (const auto& [b0, vb] : spec.density2.terms()) {
      PauliString b = shift_string(b0, uc);
      if (!anticommutes(a, b)) continue;
      LocalOperator one;
      add_string_commutator(one, a, va, b, vb, Convention::paper);
      for (const auto& [k, v] : one.terms()) {
        if (steps != nullptr) steps->push_back({a, va, b, vb, k, v});
        out.add(k, v);
      }
    }
  }
  return out;
}

inline BSet compute_B_le(const HamiltonianSpec& spec, int k, bool require_injectivity = false) {
  if (k != 2 && k != 3) throw std::invalid_argument("compute_B_le supports k = 2 or 3");
  if (require_injectivity) {
    auto inj = check_injectivity(spec);
    if (!inj.holds) {
      throw PreconditionError("injectivity", "letter " + format_word(*inj.witness, spec.unit_cell) + " on the " +
                                                 inj.witness_leg + " leg commutes with h2");
    }
  }
  BSet b;
  b.k = k;
  leg_letters(spec, b.B_l, b.B_r);
  const int uc = spec.unit_cell;
  if (k == 3) {
    LocalOperator io = iota2(spec);
    for (const auto& [s, v] : io.terms()) b.basis.emplace_back(s, v);
    return b;
  }
  for (const auto& l : b.B_l) {
    for (const auto& r : b.B_r) b.B_lr.push_back(mul(l, shift_string(r, uc)).key());
  }
  std::sort(b.B_lr.begin(), b.B_lr.end(), canonical_less);
  auto sys = charge_system(b.B_lr, LocalOperator(), spec.density(), uc, 3);
  auto sol = solve_symbolic(sys);
  for (const auto& v : sol.generic.nullspace) b.basis.push_back(combine(b.B_lr, v));
  b.special_loci = sol.loci;
  b.pivot_polynomials = sol.pivot_polynomials;
  return b;
}

// Loci that change the solution, minus monomials in parameters assumed nonzero.
inline std::vector<Polynomial> relevant_loci(const std::vector<SpecialLocus>& loci, const std::vector<std::string>& nonzero) {
  std::vector<Polynomial> out;
  for (const auto& l : loci) {
    if (!l.changes_solution) continue;
    const Polynomial& p = l.polynomial;
    bool assumed = false;
    if (p.size() == 1) {
      for (const auto& n : nonzero) {
        auto idx = VariableTable::instance().find(n);
        if (idx && p.variables() == (1u << *idx)) assumed = true;
      }
    }
    if (!assumed) out.push_back(p.primitive_integer());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct TwoLocalReport {
  bool holds_generic = false;    // B<=(2) is spanned by strings of h2
  bool one_dimensional = false;  // B<=(2) = C h2
  int dimension = 0;
  std::vector<Polynomial> excluded_loci;
  BSet bset;
};

inline TwoLocalReport check_two_local_condition(const HamiltonianSpec& spec, bool require_injectivity = false) {
  TwoLocalReport r;
  r.bset = compute_B_le(spec, 2, require_injectivity);
  r.dimension = static_cast<int>(r.bset.basis.size());
  r.one_dimensional = r.dimension == 1 && proportionality(r.bset.basis[0], spec.density2).has_value();
  r.holds_generic = r.dimension > 0;
  for (const auto& op : r.bset.basis) {
    for (const auto& [s, v] : op.terms()) {
      if (spec.density2.coefficient(s).is_zero()) r.holds_generic = false;
    }
  }
  r.excluded_loci = relevant_loci(r.bset.special_loci, spec.nonzero);
  return r;
}

// The model restricted to the locus f = 0, eliminating one parameter that
// occurs linearly in f.
inline HamiltonianSpec on_locus(const HamiltonianSpec& spec, const Polynomial& f) {
  auto sv = solve_for_variable(f);
  if (!sv) throw std::invalid_argument("locus " + f.to_string() + " is not linear in any parameter");
  auto [v, value] = *sv;
  auto sub = [&](const LocalOperator& op) {
    LocalOperator r = op.map_coefficients([&](const Coefficient& c) { return substitute_variable(c, v, value); });
    return r;
  };
  HamiltonianSpec out = spec;
  out.density2 = sub(spec.density2);
  out.density1 = sub(spec.density1);
  std::string name = var_name(v);
  out.params.erase(std::remove(out.params.begin(), out.params.end(), name), out.params.end());
  out.nonzero.erase(std::remove(out.nonzero.begin(), out.nonzero.end(), name), out.nonzero.end());
  out.name = spec.name + "|" + f.to_string() + "=0";
  return out;
}

// ---------------------------------------------------------------------------
// Certificates.

enum class Verdict { integrable, nonintegrable, inconclusive };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::integrable: return "integrable";
    case Verdict::nonintegrable: return "nonintegrable";
    default: return "inconclusive";
  }
}

enum class PreconditionPolicy {
  // Composite models proceed when literal injectivity fails; the failure is
  // recorded in the certificate.
  paper,
  // Both preconditions are enforced literally.
  strict,
};

struct HokkyoOptions {
  PreconditionPolicy policy = PreconditionPolicy::paper;
  bool verify_loci = true;
};

struct Obstruction {
  PauliString string;
  Coefficient coefficient;      // coefficient of the string in [iota2, H]
  std::string kind;             // "direct" or "elimination"
  std::vector<TraceStep<Coefficient>> provenance;
};

struct Assumptions {
  bool injectivity = false;
  std::string injectivity_basis;  // "literal" or "assumed-composite"
  std::optional<PauliString> injectivity_witness;
  std::string injectivity_witness_leg;
  bool minimal_form = false;
  bool two_local_condition = false;
  bool two_local_one_dimensional = false;
  int two_local_dimension = 0;
};

struct Certificate {
  std::string model;
  int unit_cell = 1;
  Verdict verdict = Verdict::inconclusive;
  Assumptions assumptions;
  std::vector<Polynomial> excluded_loci;
  std::optional<LocalOperator> charge;  // Q3 density
  std::optional<LocalOperator> a2;      // its at-most-2-local part
  bool charge_verified = false;
  std::optional<Obstruction> obstruction;
  std::vector<std::string> commutator_trace;
  std::vector<std::string> notes;
};

namespace detail {

// Strings with no identity block come first, then canonical order.
inline bool obstruction_less(const PauliString& a, const PauliString& b, int uc) {
  auto hollow = [uc](const PauliString& p) {
    for (int blk = p.first_site() / uc; blk <= p.last_site() / uc; ++blk) {
      if (block_of(p, blk, uc).is_identity()) return true;
    }
    return false;
  };
  bool ha = hollow(a), hb = hollow(b);
  if (ha != hb) return hb;
  return canonical_less(a, b);
}

inline Obstruction find_obstruction(const std::vector<PauliString>& unknowns, const LocalOperator& iota,
                                    const LocalOperator& h, int uc, const LinearSystem<Coefficient>& sys,
                                    const std::vector<PauliString>& row_strings) {
  Obstruction ob;
  std::optional<size_t> direct;
  for (size_t e = 0; e < sys.equations.size(); ++e) {
    const auto& eq = sys.equations[e];
    if (eq.coeffs.empty() && !eq.rhs.is_zero()) {
      if (!direct || obstruction_less(row_strings[e], row_strings[*direct], uc)) direct = e;
    }
  }
  size_t chosen;
  if (direct) {
    chosen = *direct;
    ob.kind = "direct";
  } else {
    SolveOptions opt;
    opt.stop_on_inconsistent = true;
    auto s = solve_linear(sys, opt);
    chosen = static_cast<size_t>(s.inconsistent_equation);
    ob.kind = "elimination";
  }
  (void)unknowns;
  ob.string = row_strings[chosen];
  ob.coefficient = -sys.equations[chosen].rhs;
  ob.provenance = ti_trace(iota, h, uc, ob.string);
  return ob;
}

}  // namespace detail

inline Certificate hokkyo_test(const HamiltonianSpec& spec, const HokkyoOptions& opt = {}) {
  Certificate cert;
  cert.model = spec.name;
  cert.unit_cell = spec.unit_cell;
  const int uc = spec.unit_cell;

  auto inj = check_injectivity(spec);
  auto mf = check_minimal_form(spec);
  cert.assumptions.minimal_form = mf.is_minimal;
  cert.assumptions.injectivity = inj.holds;
  cert.assumptions.injectivity_witness = inj.witness;
  cert.assumptions.injectivity_witness_leg = inj.witness_leg;
  if (inj.holds) {
    cert.assumptions.injectivity_basis = "literal";
  } else if (opt.policy == PreconditionPolicy::paper && uc > 1) {
    cert.assumptions.injectivity_basis = "assumed-composite";
    cert.notes.push_back("literal injectivity fails: " + format_word(*inj.witness, uc) + " on the " + inj.witness_leg +
                         " leg commutes with h2 (" + std::to_string(inj.failures) + " failing letters)");
  } else {
    throw PreconditionError("injectivity", "letter " + format_word(*inj.witness, uc) + " on the " + inj.witness_leg +
                                               " leg commutes with h2");
  }

  auto two = check_two_local_condition(spec);
  cert.assumptions.two_local_condition = two.holds_generic;
  cert.assumptions.two_local_one_dimensional = two.one_dimensional;
  cert.assumptions.two_local_dimension = two.dimension;
  cert.excluded_loci = two.excluded_loci;
  if (!two.one_dimensional) {
    if (opt.policy == PreconditionPolicy::strict) {
      throw PreconditionError("two_local_condition",
                              "B<=(2) has dimension " + std::to_string(two.dimension) + " at generic parameters");
    }
    cert.notes.push_back(std::string(two.holds_generic ? "B<=(2) is spanned by Hamiltonian strings but "
                                                       : "2-local conservation condition fails generically: ") +
                         "dim B<=(2) = " + std::to_string(two.dimension));
  }

  std::vector<TraceStep<Coefficient>> iota_steps;
  LocalOperator iota = iota2(spec, &iota_steps);
  for (const auto& s : iota_steps) cert.commutator_trace.push_back(render_step(s, uc));
  if (iota.empty()) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("iota2(h) vanishes; no 3-local candidate");
    return cert;
  }

  const LocalOperator h = spec.density();
  auto unknowns = enumerate_anchored(uc, 1, 2);
  std::vector<PauliString> rows3;
  auto sys3 = charge_system(unknowns, iota, h, uc, 3, &rows3);
  auto sol3 = solve_linear(sys3);
  if (!sol3.consistent) {
    auto ob = detail::find_obstruction(unknowns, iota, h, uc, sys3, rows3);
    for (const auto& s : ob.provenance) cert.commutator_trace.push_back(render_step(s, uc));
    cert.obstruction = std::move(ob);
    if (two.one_dimensional) {
      cert.verdict = Verdict::nonintegrable;
    } else {
      cert.verdict = Verdict::inconclusive;
      cert.notes.push_back("no 3-local candidate with len([Q,H]) <= 2, but the 2-local condition fails");
    }
    return cert;
  }

  auto sys_full = charge_system(unknowns, iota, h, uc, 1);
  auto sol = solve_linear(sys_full);
  if (!sol.consistent) {
    cert.verdict = Verdict::inconclusive;
    cert.notes.push_back("len([Q,H]) <= 2 is achievable but exact conservation fails");
    return cert;
  }
  LocalOperator a2 = combine_dense(unknowns, sol.particular);
  LocalOperator charge = iota + a2;
  cert.a2 = a2;
  cert.charge = charge;
  cert.charge_verified = ti_commutator(charge, h, uc).empty();
  cert.verdict = cert.charge_verified ? Verdict::integrable : Verdict::inconclusive;
  if (!cert.charge_verified) cert.notes.push_back("charge candidate failed re-verification");
  return cert;
}

// ---------------------------------------------------------------------------
// Finite-chain verification.

struct VerifyResult {
  bool conserved = false;
  LocalOperator residual;
};

// [sum of translates of the density, H] on a finite chain.
inline VerifyResult verify_charge(const LocalOperator& charge_density, const Model& model, int n_sites,
                                  std::optional<Boundary> boundary = std::nullopt) {
  int uc = model_unit_cell(model);
  int qlen = window_length(charge_density, 1);
  int hlen = window_length(model_density(model), 1);
  if (n_sites < qlen + hlen - uc) {
    throw LatticeError("chain of " + std::to_string(n_sites) + " sites is too short for the charge (needs " +
                       std::to_string(qlen + hlen - uc) + ")");
  }
  Boundary b = boundary.value_or(model_boundary(model));
  LocalOperator q = sum_translates(anchored(charge_density, uc), uc, n_sites, b);
  LocalOperator hh = instantiate(model, n_sites, b);
  VerifyResult r;
  r.residual = commutator(q, hh, Convention::exact);
  r.conserved = r.residual.empty();
  return r;
}

// ---------------------------------------------------------------------------
// JSON.

inline nlohmann::json operator_json(const LocalOperator& op, int unit_cell) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [k, v] : op.terms()) a.push_back({{"coeff", v.to_string()}, {"word", format_word(k, unit_cell)}});
  return a;
}

inline nlohmann::json certificate_json(const Certificate& c) {
  nlohmann::json j;
  j["model"] = c.model;
  j["verdict"] = verdict_name(c.verdict);
  nlohmann::json a;
  a["injectivity"] = c.assumptions.injectivity;
  a["injectivity_basis"] = c.assumptions.injectivity_basis;
  if (c.assumptions.injectivity_witness) {
    a["injectivity_witness"] = {{"letter", format_word(*c.assumptions.injectivity_witness, c.unit_cell)},
                                {"leg", c.assumptions.injectivity_witness_leg}};
  }
  a["minimal_form"] = c.assumptions.minimal_form;
  a["two_local_condition"] = c.assumptions.two_local_condition;
  a["two_local_one_dimensional"] = c.assumptions.two_local_one_dimensional;
  a["two_local_dimension"] = c.assumptions.two_local_dimension;
  j["assumptions"] = a;
  nlohmann::json loci = nlohmann::json::array();
  for (const auto& p : c.excluded_loci) loci.push_back(p.to_string());
  j["excluded_loci"] = loci;
  if (c.charge) {
    j["charge"] = {{"density", operator_json(*c.charge, c.unit_cell)},
                   {"a2", operator_json(*c.a2, c.unit_cell)},
                   {"verified", c.charge_verified}};
  }
  if (c.obstruction) {
    const auto& o = *c.obstruction;
    j["obstruction"] = {{"residual", o.coefficient.to_string() + " * " + format_word(o.string, c.unit_cell)},
                        {"coeff", o.coefficient.to_string()},
                        {"word", format_word(o.string, c.unit_cell)},
                        {"kind", o.kind},
                        {"system_inconsistent", true}};
  }
  j["commutator_trace"] = c.commutator_trace;
  j["notes"] = c.notes;
  return j;
}

}  // namespace chainint
