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

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "chainint/catalog.hpp"
#include "chainint/criteria.hpp"
#include "chainint/frustration.hpp"

namespace chainint {

// Strings of B<=(2) on a locus that are not strings of h2 there.
struct LocusExtra {
  Polynomial locus;
  std::vector<PauliString> gained;
};

struct EntryCheck {
  std::string id;
  Certificate cert;
  std::vector<LocusExtra> locus_extras;
  std::optional<GraphClassification> graph;
  int graph_n_sites = 0;
  std::vector<std::string> mismatches;  // empty when every stated field matches
  double seconds = 0;
  bool ok() const { return mismatches.empty(); }
};

inline std::vector<LocusExtra> locus_extras(const HamiltonianSpec& spec, const std::vector<Polynomial>& loci) {
  std::vector<LocusExtra> out;
  for (const auto& f : loci) {
    HamiltonianSpec s = on_locus(spec, f);
    auto two = check_two_local_condition(s);
    std::set<PauliString, CanonicalLess> gained;
    for (const auto& op : two.bset.basis) {
      for (const auto& [k, v] : op.terms()) {
        if (s.density2.coefficient(k).is_zero()) gained.insert(k);
      }
    }
    out.push_back({f, {gained.begin(), gained.end()}});
  }
  return out;
}

// Number of physical sites used for catalog graph checks.
inline int graph_sites(const Model& m) { return model_unit_cell(m) == 1 ? 8 : 16; }

inline EntryCheck check_entry(const CatalogEntry& e, const HokkyoOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  EntryCheck r;
  r.id = e.id;
  HamiltonianSpec h = nearest_neighbor_form(e.spec);
  const int uc = h.unit_cell;
  try {
    r.cert = hokkyo_test(h, opt);
  } catch (const PreconditionError& ex) {
    r.mismatches.push_back(std::string("precondition failed: ") + ex.what());
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  const auto& x = e.expected;
  const auto& c = r.cert;
  if (!x.verdict.empty() && verdict_name(c.verdict) != x.verdict) {
    r.mismatches.push_back("verdict " + verdict_name(c.verdict) + ", expected " + x.verdict);
  }
  if (x.obstruction) {
    LocalOperator want = parse_operator(*x.obstruction);
    LocalOperator got;
    if (c.obstruction) got.add(c.obstruction->string, c.obstruction->coefficient);
    if (got != want) r.mismatches.push_back("obstruction " + to_inline(got, uc) + ", expected " + *x.obstruction);
  }
  if (x.a2) {
    LocalOperator want = parse_operator(*x.a2);
    LocalOperator got = c.a2.value_or(LocalOperator());
    if (got != want) r.mismatches.push_back("A2 " + to_inline(got, uc) + ", expected " + to_inline(want, uc));
  }
  std::set<std::string> want_loci, got_loci;
  for (const auto& s : x.loci) want_loci.insert(parse_coefficient(s).numerator().primitive_integer().to_string());
  for (const auto& p : c.excluded_loci) got_loci.insert(p.to_string());
  if (want_loci != got_loci) {
    std::string g;
    for (const auto& s : got_loci) g += (g.empty() ? "" : ",") + s;
    r.mismatches.push_back("loci {" + g + "}");
  }
  for (const auto& q : x.charges) {
    if (!ti_commutator(parse_operator(q), h.density(), uc).empty()) {
      r.mismatches.push_back("stated charge not conserved: " + to_inline(parse_operator(q), uc));
    }
  }
  r.locus_extras = locus_extras(h, c.excluded_loci);
  if (!x.graph.empty()) {
    r.graph_n_sites = graph_sites(e.spec);
    auto g = build_graph(e.spec, r.graph_n_sites, Boundary::open);
    r.graph = classify(g);
    if (implication_name(r.graph->implication) != x.graph) {
      r.mismatches.push_back("graph " + implication_name(r.graph->implication) + ", expected " + x.graph);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct ChargeCheck {
  std::string model;
  std::string density;
  int n_sites = 0;
  bool conserved = false;
};

struct Reproduction {
  std::vector<EntryCheck> entries;
  std::vector<ChargeCheck> charges;
  int table1_integrable = 0, table1_nonintegrable = 0;
  int table2_integrable = 0, table2_nonintegrable = 0;
  bool ok() const {
    for (const auto& e : entries) {
      if (!e.ok()) return false;
    }
    for (const auto& c : charges) {
      if (!c.conserved) return false;
    }
    return table1_integrable == 7 && table1_nonintegrable == 3 && table2_integrable == 1 && table2_nonintegrable == 4;
  }
};

inline bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Every catalog entry plus the finite-chain checks of the five-site charges.
inline Reproduction reproduce_all(const HokkyoOptions& opt = {}) {
  Reproduction out;
  for (const auto& e : catalog()) {
    if (e.expected.verdict.empty() && e.expected.graph.empty()) continue;
    EntryCheck r = check_entry(e, opt);
    bool integ = r.cert.verdict == Verdict::integrable;
    bool nonint = r.cert.verdict == Verdict::nonintegrable;
    if (starts_with(e.id, "min:")) {
      out.table1_integrable += integ;
      out.table1_nonintegrable += nonint;
    }
    if (starts_with(e.id, "ext:")) {
      out.table2_integrable += integ;
      out.table2_nonintegrable += nonint;
    }
    for (const auto& q : e.expected.higher_charges) {
      for (int n : {8, 10}) {
        auto v = verify_charge(parse_operator(q), e.spec, n);
        out.charges.push_back({e.id, to_inline(parse_operator(q), 1), n, v.conserved});
      }
    }
    out.entries.push_back(std::move(r));
  }
  return out;
}

inline nlohmann::json entry_check_json(const EntryCheck& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["verdict"] = verdict_name(r.cert.verdict);
  j["match"] = r.ok();
  j["mismatches"] = r.mismatches;
  if (r.cert.obstruction) {
    j["obstruction"] = r.cert.obstruction->coefficient.to_string() + " * " +
                       format_word(r.cert.obstruction->string, r.cert.unit_cell);
  }
  if (r.cert.a2) j["a2"] = to_inline(*r.cert.a2, r.cert.unit_cell);
  nlohmann::json loci = nlohmann::json::array();
  for (const auto& p : r.cert.excluded_loci) loci.push_back(p.to_string());
  j["excluded_loci"] = loci;
  nlohmann::json extras = nlohmann::json::array();
  for (const auto& x : r.locus_extras) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& s : x.gained) g.push_back(format_word(s, r.cert.unit_cell));
    extras.push_back({{"locus", x.locus.to_string()}, {"gained", g}});
  }
  j["locus_extras"] = extras;
  if (r.graph) {
    j["graph"] = {{"n_sites", r.graph_n_sites},
                  {"boundary", "open"},
                  {"implication", implication_name(r.graph->implication)},
                  {"claws", r.graph->claws.size()},
                  {"even_holes", r.graph->even_holes.size()}};
  }
  return j;
}

inline nlohmann::json reproduction_json(const Reproduction& r) {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries) j["entries"].push_back(entry_check_json(e));
  j["charges"] = nlohmann::json::array();
  for (const auto& c : r.charges) {
    j["charges"].push_back(
        {{"model", c.model}, {"density", c.density}, {"n_sites", c.n_sites}, {"conserved", c.conserved}});
  }
  j["table1"] = {{"integrable", r.table1_integrable}, {"nonintegrable", r.table1_nonintegrable}};
  j["table2"] = {{"integrable", r.table2_integrable}, {"nonintegrable", r.table2_nonintegrable}};
  j["all_match"] = r.ok();
  return j;
}

}  // namespace chainint
