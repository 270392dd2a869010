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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainint/lattice.hpp"

namespace chainint {

struct ExpectedResult {
  std::string verdict;                  // integrable / nonintegrable / "" when not classified
  std::optional<std::string> obstruction;  // "coef * word"
  std::optional<std::string> a2;           // 2-local part of the charge, "coef * word" lines
  std::vector<std::string> charges;        // extra conserved densities, text form
  std::vector<std::string> higher_charges; // five-site densities of the three-site form
  std::vector<std::string> loci;           // excluded loci
  std::string graph;                       // expected graph implication, if stated
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string anchor;  // short citation of where the model is defined
  Model spec;
  ExpectedResult expected;
};

class UnknownModel : public std::invalid_argument {
 public:
  explicit UnknownModel(const std::string& id) : std::invalid_argument("unknown model id '" + id + "'") {}
};

namespace detail {

inline const std::vector<std::string>& cc() {
  static const std::vector<std::string> v = {"c1", "c2"};
  return v;
}

inline CatalogEntry composite_entry(const std::string& id, const std::string& desc, const std::string& anchor,
                                    const std::vector<std::pair<std::string, std::string>>& terms, ExpectedResult e) {
  return {id, desc, anchor, make_hamiltonian(id, 2, make_operator(terms), cc(), Boundary::periodic, cc()), std::move(e)};
}

inline CatalogEntry three_site_entry(const std::string& id, const std::string& desc, const std::string& anchor,
                                     const std::vector<std::pair<std::string, std::string>>& terms,
                                     std::vector<std::string> params, std::vector<std::string> nonzero,
                                     ExpectedResult e) {
  return {id, desc, anchor, make_three_site(id, make_operator(terms), std::move(params), Boundary::periodic,
                                             std::move(nonzero)),
          std::move(e)};
}

inline std::vector<std::pair<std::string, std::string>> fredkin_terms(const std::string& t) {
  const std::string tt = "(" + t + ")^2";
  return {{"-" + t, "XXI"},       {"-" + t, "IXX"},       {"-" + t, "YYI"}, {"-" + t, "IYY"},
          {"-" + tt, "ZZI"},      {"-" + tt, "IZZ"},      {"-" + t, "ZXX"}, {"-" + t, "ZYY"},
          {t, "XXZ"},             {t, "YYZ"},             {tt + "-1", "ZIZ"}};
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  ExpectedResult e;

  e = {};
  e.verdict = "nonintegrable";
  e.obstruction = "-8*t^3 * (IX)(XI)(ZZ)";
  e.loci = {"t"};
  c.push_back(three_site_entry("deformed_fredkin", "Deformed Fredkin chain, uncolored spin-1/2, periodic",
                               "deformed Fredkin densities h2(t) + h3(t)", fredkin_terms("t"), {"t"}, {}, e));

  e = {};
  e.verdict = "nonintegrable";
  e.obstruction = "-8 * (IX)(XI)(ZZ)";
  c.push_back(three_site_entry("fredkin", "Fredkin chain (deformed Fredkin at t = 1)", "deformed Fredkin at t = 1",
                               fredkin_terms("1"), {}, {}, e));

  e = {};
  e.graph = "free-fermion-by-graph";
  c.push_back(three_site_entry("ffd", "Free fermions in disguise, sum of X X Z", "FFD density XXZ", {{"1", "XXZ"}},
                               {}, {}, e));

  e = {};
  c.push_back({"ising", "Spin-1/2 Ising chain Z Z", "Ising interaction", make_hamiltonian("ising", 1, make_operator({{"1", "ZZ"}}), {}), e});
  c.push_back({"xx", "Spin-1/2 XX chain", "XX interaction",
               make_hamiltonian("xx", 1, make_operator({{"1", "XX"}, {"1", "YY"}}), {}), e});

  // Composite-spin minimal models.
  auto integrable = [](std::vector<std::string> loci, std::string graph = "") {
    ExpectedResult r;
    r.verdict = "integrable";
    r.loci = std::move(loci);
    r.graph = std::move(graph);
    return r;
  };
  c.push_back(composite_entry("min:Ia", "Minimal model, Case 1", "composite minimal model 1a",
                              {{"c1", "(XX)(ZI)"}, {"c2", "(IZ)(XX)"}},
                              [&] {
                                auto r = integrable({});
                                r.charges = {"1 * (XX)(YX)(ZI)", "1 * (IZ)(XY)(XX)"};
                                return r;
                              }()));
  c.push_back(composite_entry("min:Ib", "Minimal model, Case 1", "composite minimal model 1b",
                              {{"c1", "(IX)(XZ)"}, {"c2", "(IZ)(XX)"}}, integrable({"c1+c2"})));
  e = {};
  e.verdict = "nonintegrable";
  c.push_back(composite_entry("min:IIa", "Minimal model, Case 4", "composite minimal model 2a",
                              {{"c1", "(IX)(XZ)"}, {"c2", "(IY)(YZ)"}}, e));
  c.push_back(composite_entry("min:IIb", "Minimal model, Case 1", "composite minimal model 2b",
                              {{"c1", "(IX)(XZ)"}, {"c2", "(YY)(ZI)"}}, integrable({"c1+c2"})));
  c.push_back(composite_entry("min:IIIa", "Minimal model, Case 2", "composite minimal model 3a",
                              {{"c1", "(IX)(XZ)"}, {"c2", "(IZ)(YY)"}},
                              [&] {
                                auto r = integrable({}, "no-graph-conclusion");
                                r.a2 = "-c1*c2 * (IY)(ZX)";
                                return r;
                              }()));
  c.push_back(composite_entry("min:IIIb", "Minimal model, Case 1", "composite minimal model 3b",
                              {{"c1", "(IX)(XZ)"}, {"c2", "(ZY)(YI)"}}, integrable({"c1-c2"})));
  c.push_back(composite_entry("min:IIIc", "Minimal model, Case 1", "composite minimal model 3c",
                              {{"c1", "(XX)(ZI)"}, {"c2", "(IZ)(YY)"}}, integrable({"c1-c2"})));
  e = {};
  e.verdict = "nonintegrable";
  e.obstruction = "2*c1*c2^2 * (IY)(YI)(ZZ)";
  c.push_back(composite_entry("min:IVa", "Minimal model, Case 3", "composite minimal model 4a",
                              {{"c1", "(IX)(XI)"}, {"c2", "(IY)(YZ)"}}, e));
  e = {};
  e.verdict = "nonintegrable";
  c.push_back(composite_entry("min:IVb", "Minimal model, Case 3", "composite minimal model 4b",
                              {{"c1", "(IX)(XI)"}, {"c2", "(YY)(ZI)"}}, e));
  c.push_back(composite_entry("min:Va", "Minimal model, Case 1", "composite minimal model 5a",
                              {{"c1", "(IZ)(ZI)"}, {"c2", "(IX)(XZ)"}}, integrable({}, "free-fermion-by-graph")));

  // Extended composite models and their three-site forms.
  struct Ext {
    const char* roman;
    std::vector<std::pair<std::string, std::string>> composite;
    std::vector<std::pair<std::string, std::string>> three;
    std::vector<std::pair<std::string, std::string>> split;
  };
  std::vector<Ext> ext = {
      {"I",
       {{"c1", "(IX)(XZ)"}, {"c1", "(XX)(ZI)"}, {"c2", "(IZ)(XX)"}, {"c2", "(ZX)(XI)"}},
       {{"c1", "XXZ"}, {"c2", "ZXX"}},
       {}},
      {"II",
       {{"c1", "(IX)(XZ)"}, {"c1", "(XX)(ZI)"}, {"c2", "(IY)(YZ)"}, {"c2", "(YY)(ZI)"}},
       {{"c1", "XXZ"}, {"c2", "YYZ"}},
       {}},
      {"III",
       {{"c1", "(IX)(XZ)"}, {"c1", "(XX)(ZI)"}, {"c2", "(IZ)(YY)"}, {"c2", "(ZY)(YI)"}},
       {{"c1", "XXZ"}, {"c2", "ZYY"}},
       {}},
      {"IV",
       {{"c1", "(IX)(XI)"}, {"c1", "(XX)"}, {"c2", "(IY)(YZ)"}, {"c2", "(YY)(ZI)"}},
       {{"c1", "XXI"}, {"c2", "YYZ"}},
       {{"c1/2", "XXI"}, {"c1/2", "IXX"}, {"c2", "YYZ"}}},
      {"V",
       {{"c1", "(IZ)(ZI)"}, {"c1", "(ZZ)"}, {"c2", "(IX)(XZ)"}, {"c2", "(XX)(ZI)"}},
       {{"c1", "ZZI"}, {"c2", "XXZ"}},
       {{"c1/2", "ZZI"}, {"c1/2", "IZZ"}, {"c2", "XXZ"}}},
  };
  for (const auto& x : ext) {
    ExpectedResult r;
    std::string roman = x.roman;
    if (roman == "I") {
      r.verdict = "integrable";
      r.charges = {"1 * (IX)(XY)(XZ)\n1 * (IX)(IY)(ZI)\n1 * (XX)(YX)(ZI)\n1 * (XI)(YZ)",
                   "1 * (IZ)(XY)(XX)\n1 * (IZ)(YI)(XI)\n1 * (ZX)(YX)(XI)\n1 * (ZY)(IX)"};
      r.a2 = "c1^2 * (XI)(YZ)\n-c2^2 * (ZY)(IX)";
    } else {
      r.verdict = "nonintegrable";
    }
    if (roman == "III") r.loci = {"c1-c2"};
    c.push_back(composite_entry("ext:" + roman, "Extended composite model, class " + roman,
                                "extended class " + roman + " density", x.composite, r));
    ExpectedResult t = r;
    if (roman == "I") {
      t.higher_charges = {"1 * X1 X2 Y3 X4 Z5\n1 * X1 I2 Y3 Z4", "1 * Z1 X2 Y3 X4 X5\n1 * Z1 Y2 I3 X4"};
    }
    c.push_back(three_site_entry("tilde:" + roman, "Three-site model, class " + roman,
                                 "three-site class " + roman + " density", x.three, cc(), cc(), t));
    if (!x.split.empty()) {
      c.push_back(three_site_entry("tilde:" + roman + ":split", "Three-site model, class " + roman + ", half-weight form",
                                   "three-site class " + roman + " half-weight density", x.split, cc(), cc(), r));
    }
  }
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

// Accepts "deformed_fredkin(1/2)" as shorthand for binding t.
inline CatalogEntry get_model(const std::string& id, const ParamPoint& binding = {}) {
  std::string key = id;
  ParamPoint b = binding;
  size_t open = id.find('(');
  if (open != std::string::npos && id.back() == ')') {
    key = id.substr(0, open);
    std::string arg = id.substr(open + 1, id.size() - open - 2);
    if (key != "deformed_fredkin") throw UnknownModel(id);
    b["t"] = parse_rational(arg);
  }
  for (const auto& e : catalog()) {
    if (e.id == key) {
      CatalogEntry r = e;
      if (!b.empty()) r.spec = bind_params(r.spec, b);
      return r;
    }
  }
  throw UnknownModel(id);
}

// Nearest-neighbour form used by the criteria: three-site models are mapped
// to composite spins, other models are returned unchanged.
inline HamiltonianSpec nearest_neighbor_form(const Model& m) {
  if (const auto* h = std::get_if<HamiltonianSpec>(&m)) return *h;
  return composite_map(std::get<ThreeSiteSpec>(m));
}

// Two-block rendering of a one-block density as 1/2 (d1 x II + II x d1).
inline LocalOperator half_weight_form(const HamiltonianSpec& h) {
  LocalOperator out;
  for (const auto& [k, v] : h.density1.terms()) {
    Coefficient half = v / Coefficient(2);
    out.add(k, half);
    out.add(shift_string(k, h.unit_cell), half);
  }
  return out;
}

}  // namespace chainint
