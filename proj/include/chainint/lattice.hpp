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
#include <variant>
#include <vector>

#include "json.hpp"

#include "chainint/local_operator.hpp"

namespace chainint {

enum class Boundary { periodic, open };

inline std::string boundary_name(Boundary b) { return b == Boundary::periodic ? "periodic" : "open"; }

inline Boundary parse_boundary(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "open") return Boundary::open;
  throw ParseError("unknown boundary '" + s + "' (expected periodic or open)");
}

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline uint64_t low_mask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

// ---------------------------------------------------------------------------
// Support length.

// Window of effective sites spanned by the string on an open line.
inline int support_length(const PauliString& s, int unit_cell) {
  if (s.is_identity()) return 0;
  return s.last_site() / unit_cell - s.first_site() / unit_cell + 1;
}

// Largest string support in the operator.
template <class C>
int support_length(const BasicOperator<C>& op, int unit_cell) {
  int l = 0;
  for (const auto& [k, v] : op.terms()) l = std::max(l, support_length(k, unit_cell));
  return l;
}

// Window spanned by the union of all strings.
template <class C>
int window_length(const BasicOperator<C>& op, int unit_cell) {
  uint64_t m = 0;
  for (const auto& [k, v] : op.terms()) m |= k.support();
  return support_length(PauliString(m, 0), unit_cell);
}

// Support length on a ring of n_sites physical sites.
inline int ring_support_length(const PauliString& s, int n_sites, int unit_cell) {
  if (s.is_identity()) return 0;
  int blocks = n_sites / unit_cell;
  std::vector<bool> occ(static_cast<size_t>(blocks), false);
  for (int k = 0; k < n_sites; ++k) {
    if (s.letter(k) != Letter::I) occ[static_cast<size_t>(k / unit_cell)] = true;
  }
  int best_gap = 0;
  for (int start = 0; start < blocks; ++start) {
    if (!occ[static_cast<size_t>(start)]) continue;
    int gap = 0;
    int j = (start + 1) % blocks;
    while (!occ[static_cast<size_t>(j)]) {
      ++gap;
      j = (j + 1) % blocks;
    }
    best_gap = std::max(best_gap, gap);
  }
  return blocks - best_gap;
}

// ---------------------------------------------------------------------------
// Translation.

inline uint64_t rotate_mask(uint64_t m, int k, int n) {
  if (k == 0) return m;
  uint64_t full = low_mask(n);
  return ((m << k) | (m >> (n - k))) & full;
}

inline PauliString translate(const PauliString& s, int shift, int n_sites, Boundary boundary) {
  if (n_sites <= 0 || n_sites > kMaxSites) throw LatticeError("n_sites must be in 1..64");
  if ((s.support() & ~low_mask(n_sites)) != 0) throw LatticeError("string does not fit on the chain");
  if (boundary == Boundary::periodic) {
    int k = ((shift % n_sites) + n_sites) % n_sites;
    return {rotate_mask(s.x, k, n_sites), rotate_mask(s.z, k, n_sites), s.phase};
  }
  if (s.is_identity()) return s;
  int lo = s.first_site() + shift, hi = s.last_site() + shift;
  if (lo < 0 || hi >= n_sites) throw LatticeError("translation leaves the open chain");
  if (shift >= 0) return {s.x << shift, s.z << shift, s.phase};
  return {s.x >> -shift, s.z >> -shift, s.phase};
}

template <class C>
BasicOperator<C> translate(const BasicOperator<C>& op, int shift, int n_sites, Boundary boundary) {
  BasicOperator<C> r;
  for (const auto& [k, v] : op.terms()) r.add(translate(k, shift, n_sites, boundary), v);
  r.set_ring(op.ring());
  return r;
}

// Shift on the infinite line; requires the result to stay within 0..63.
inline PauliString shift_string(const PauliString& s, int shift) {
  if (s.is_identity()) return s;
  if (s.first_site() + shift < 0 || s.last_site() + shift >= kMaxSites) throw LatticeError("shift out of range");
  if (shift >= 0) return {s.x << shift, s.z << shift, s.phase};
  return {s.x >> -shift, s.z >> -shift, s.phase};
}

template <class C>
BasicOperator<C> shift_operator(const BasicOperator<C>& op, int shift) {
  BasicOperator<C> r;
  for (const auto& [k, v] : op.terms()) r.add(shift_string(k, shift), v);
  return r;
}

// Moves the string so that its first non-identity block is block 0.
inline PauliString anchor_string(const PauliString& s, int unit_cell) {
  if (s.is_identity()) return s;
  int shift = (s.first_site() / unit_cell) * unit_cell;
  return {s.x >> shift, s.z >> shift, s.phase};
}

// Letters of one block, moved to sites 0..unit_cell-1.
inline PauliString block_of(const PauliString& s, int block, int unit_cell) {
  int off = block * unit_cell;
  uint64_t m = low_mask(unit_cell);
  return {(s.x >> off) & m, (s.z >> off) & m, 0};
}

// ---------------------------------------------------------------------------
// Model specifications.

struct HamiltonianSpec {
  std::string name;
  int unit_cell = 1;
  LocalOperator density2;  // strings on blocks 0 and 1, both non-identity
  LocalOperator density1;  // strings on block 0
  std::vector<std::string> params;
  std::vector<std::string> nonzero;  // parameters assumed nonzero
  Boundary boundary = Boundary::periodic;

  LocalOperator density() const { return density2 + density1; }
};

struct ThreeSiteSpec {
  std::string name;
  LocalOperator density3;  // strings on sites 0..2 with site 0 non-identity
  std::vector<std::string> params;
  std::vector<std::string> nonzero;
  Boundary boundary = Boundary::periodic;
};

using Model = std::variant<HamiltonianSpec, ThreeSiteSpec>;

inline void check_params(const LocalOperator& op, const std::vector<std::string>& params, const std::string& what) {
  std::set<std::string> allowed(params.begin(), params.end());
  for (const auto& n : variable_names(variables_of(op))) {
    if (allowed.count(n) == 0) throw LatticeError(what + " uses undeclared parameter '" + n + "'");
  }
}

// Splits a translation-invariant density into the anchored two-block and
// one-block parts. Every string is moved so it starts in block 0.
inline HamiltonianSpec make_hamiltonian(const std::string& name, int unit_cell, const LocalOperator& terms,
                                        std::vector<std::string> params, Boundary boundary = Boundary::periodic,
                                        std::vector<std::string> nonzero = {}) {
  if (unit_cell < 1 || unit_cell > 4) throw LatticeError("unit_cell must be 1..4");
  HamiltonianSpec h;
  h.name = name;
  h.unit_cell = unit_cell;
  h.params = std::move(params);
  h.nonzero = std::move(nonzero);
  h.boundary = boundary;
  for (const auto& [k, v] : terms.terms()) {
    if (k.is_identity()) continue;
    PauliString a = anchor_string(k, unit_cell);
    int len = support_length(a, unit_cell);
    if (len == 1) {
      h.density1.add(a, v);
    } else if (len == 2) {
      h.density2.add(a, v);
    } else {
      throw LatticeError("term " + format_word(k, unit_cell) + " spans more than two effective sites");
    }
  }
  std::set<std::string> ring(h.params.begin(), h.params.end());
  check_params(h.density2, h.params, "density");
  check_params(h.density1, h.params, "density");
  h.density2.set_ring(ring);
  h.density1.set_ring(ring);
  return h;
}

inline ThreeSiteSpec make_three_site(const std::string& name, const LocalOperator& terms,
                                     std::vector<std::string> params, Boundary boundary = Boundary::periodic,
                                     std::vector<std::string> nonzero = {}) {
  ThreeSiteSpec s;
  s.name = name;
  s.params = std::move(params);
  s.nonzero = std::move(nonzero);
  s.boundary = boundary;
  uint64_t sup = 0;
  for (const auto& [k, v] : terms.terms()) sup |= k.support();
  int first = sup == 0 ? 0 : std::countr_zero(sup);
  for (const auto& [k, v] : terms.terms()) {
    if (k.is_identity()) continue;
    s.density3.add(shift_string(k, -first), v);
  }
  if (window_length(s.density3, 1) > 3) throw LatticeError("three-site density has support larger than 3");
  check_params(s.density3, s.params, "density");
  s.density3.set_ring(std::set<std::string>(s.params.begin(), s.params.end()));
  return s;
}

// Groups sites (2b, 2b+1) into one effective site: h_{j} + h_{j+1} with j
// odd becomes the composite density of blocks n, n+1.
inline HamiltonianSpec composite_map(const ThreeSiteSpec& s) {
  for (const auto& [k, v] : s.density3.terms()) {
    if (k.last_site() > 2) throw LatticeError("density3 must lie on sites 1..3");
  }
  LocalOperator merged = s.density3 + shift_operator(s.density3, 1);
  return make_hamiltonian(s.name, 2, merged, s.params, s.boundary, s.nonzero);
}

inline const std::string& model_name(const Model& m) {
  return std::visit([](const auto& s) -> const std::string& { return s.name; }, m);
}
inline const std::vector<std::string>& model_params(const Model& m) {
  return std::visit([](const auto& s) -> const std::vector<std::string>& { return s.params; }, m);
}
inline const std::vector<std::string>& model_nonzero(const Model& m) {
  return std::visit([](const auto& s) -> const std::vector<std::string>& { return s.nonzero; }, m);
}
inline Boundary model_boundary(const Model& m) {
  return std::visit([](const auto& s) { return s.boundary; }, m);
}
inline int model_unit_cell(const Model& m) {
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) return h->unit_cell;
  return 1;
}

// Density translated by multiples of translation_step(m).
inline LocalOperator model_density(const Model& m) {
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) return h->density();
  return std::get<ThreeSiteSpec>(m).density3;
}
inline int translation_step(const Model& m) { return model_unit_cell(m); }

// Sum of density translates. Open chains keep only translates that fit.
template <class C>
BasicOperator<C> sum_translates(const BasicOperator<C>& density, int step, int n_sites, Boundary boundary) {
  if (n_sites % step != 0) throw LatticeError("n_sites must be a multiple of the unit cell");
  BasicOperator<C> r;
  for (int m = 0; m * step < n_sites; ++m) {
    for (const auto& [k, v] : density.terms()) {
      if (boundary == Boundary::open && k.last_site() + m * step >= n_sites) continue;
      r.add(translate(k, m * step, n_sites, boundary), v);
    }
  }
  return r;
}

inline LocalOperator instantiate(const Model& m, int n_sites, std::optional<Boundary> boundary = std::nullopt) {
  int uc = model_unit_cell(m);
  if (n_sites < 1 || n_sites > kMaxSites) throw LatticeError("n_sites must be in 1..64");
  if (n_sites % uc != 0) throw LatticeError("n_sites must be a multiple of the unit cell (" + std::to_string(uc) + ")");
  LocalOperator d = model_density(m);
  if (window_length(d, 1) > n_sites) throw LatticeError("chain shorter than the density support");
  return sum_translates(d, translation_step(m), n_sites, boundary.value_or(model_boundary(m)));
}

inline LocalOperator instantiate(const HamiltonianSpec& h, int n_sites, std::optional<Boundary> b = std::nullopt) {
  return instantiate(Model(h), n_sites, b);
}
inline LocalOperator instantiate(const ThreeSiteSpec& s, int n_sites, std::optional<Boundary> b = std::nullopt) {
  return instantiate(Model(s), n_sites, b);
}

// ---------------------------------------------------------------------------
// Parameter points.

using ParamPoint = std::map<std::string, GaussRational>;

inline std::map<int, GaussRational> index_point(const ParamPoint& p) {
  std::map<int, GaussRational> out;
  for (const auto& [n, v] : p) out.emplace(var_index(n), v);
  return out;
}

// Parses "c1=1,c2=2/3".
inline ParamPoint parse_point(const std::string& text) {
  ParamPoint p;
  size_t k = 0;
  while (k < text.size()) {
    size_t comma = text.find(',', k);
    std::string item = text.substr(k, comma == std::string::npos ? std::string::npos : comma - k);
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'");
    p[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    k = comma + 1;
  }
  return p;
}

inline std::string point_text(const ParamPoint& p) {
  std::string s;
  for (const auto& [n, v] : p) {
    if (!s.empty()) s += ",";
    s += n + "=" + v.to_string();
  }
  return s;
}

namespace detail {
inline std::vector<std::string> remaining(const std::vector<std::string>& names, const ParamPoint& p) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (p.count(n) == 0) out.push_back(n);
  }
  return out;
}
}  // namespace detail

inline Model bind_params(const Model& m, const ParamPoint& p) {
  for (const auto& [n, v] : p) {
    const auto& ps = model_params(m);
    if (std::find(ps.begin(), ps.end(), n) == ps.end()) {
      throw LatticeError("model '" + model_name(m) + "' has no parameter '" + n + "'");
    }
  }
  auto ip = index_point(p);
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) {
    return make_hamiltonian(h->name, h->unit_cell, substitute(h->density(), ip), detail::remaining(h->params, p),
                            h->boundary, detail::remaining(h->nonzero, p));
  }
  const auto& s = std::get<ThreeSiteSpec>(m);
  return make_three_site(s.name, substitute(s.density3, ip), detail::remaining(s.params, p), s.boundary,
                         detail::remaining(s.nonzero, p));
}

// Multiplies every density term by c.
inline Model scale(const Model& m, const Coefficient& c) {
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) {
    return make_hamiltonian(h->name, h->unit_cell, h->density().scaled(c), h->params, h->boundary, h->nonzero);
  }
  const auto& s = std::get<ThreeSiteSpec>(m);
  return make_three_site(s.name, s.density3.scaled(c), s.params, s.boundary, s.nonzero);
}

// ---------------------------------------------------------------------------
// JSON model files.

inline nlohmann::json terms_json(const LocalOperator& op, int unit_cell) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [k, v] : op.terms()) a.push_back({{"coeff", v.to_string()}, {"word", format_word(k, unit_cell)}});
  return a;
}

inline nlohmann::json model_to_json(const Model& m) {
  nlohmann::json j;
  j["name"] = model_name(m);
  j["boundary"] = boundary_name(model_boundary(m));
  j["params"] = model_params(m);
  j["nonzero"] = model_nonzero(m);
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) {
    j["kind"] = "nearest_neighbor";
    j["unit_cell"] = h->unit_cell;
    nlohmann::json t = terms_json(h->density2, h->unit_cell);
    for (auto& e : terms_json(h->density1, h->unit_cell)) t.push_back(e);
    j["terms"] = t;
  } else {
    j["kind"] = "three_site";
    j["unit_cell"] = 1;
    j["terms"] = terms_json(std::get<ThreeSiteSpec>(m).density3, 1);
  }
  return j;
}

inline Model model_from_json(const nlohmann::json& j) {
  try {
    std::string name = j.at("name").get<std::string>();
    std::string kind = j.value("kind", "nearest_neighbor");
    int uc = j.value("unit_cell", 1);
    Boundary b = parse_boundary(j.value("boundary", "periodic"));
    auto params = j.value("params", std::vector<std::string>{});
    auto nonzero = j.value("nonzero", std::vector<std::string>{});
    LocalOperator terms;
    for (const auto& t : j.at("terms")) {
      terms.add(parse_word(t.at("word").get<std::string>()), parse_coefficient(t.at("coeff").get<std::string>()));
    }
    if (kind == "three_site") {
      if (uc != 1) throw LatticeError("three_site models use unit_cell 1");
      return make_three_site(name, terms, params, b, nonzero);
    }
    if (kind != "nearest_neighbor") throw LatticeError("unknown model kind '" + kind + "'");
    return make_hamiltonian(name, uc, terms, params, b, nonzero);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
}

inline std::string model_to_text(const Model& m) { return model_to_json(m).dump(2) + "\n"; }

}  // namespace chainint
