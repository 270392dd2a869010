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

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chainint/chainint.hpp"

using namespace chainint;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kPrecondition = 1, kInput = 2, kCap = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string model;
  std::string at;
  std::string t = "symbolic";
  std::string format = "text";
  int n = 0;
  std::string boundary;
  int k = 3;
  int max_len = 12;
  bool strict = false;
  bool trace = false;
  bool dense = false;
  std::string charge_file;
  std::string catalog_id;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParamPoint bindings(const Config& c) {
  ParamPoint p = c.at.empty() ? ParamPoint() : parse_point(c.at);
  if (c.t != "symbolic") p["t"] = parse_rational(c.t);
  return p;
}

// Catalog id or path to a model file, with bindings applied.
Model load_model(const Config& c, ParamPoint* point_out = nullptr) {
  Model m;
  if (std::filesystem::is_regular_file(c.model)) {
    json j;
    try {
      j = json::parse(read_file(c.model));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed model file: ") + e.what());
    }
    m = model_from_json(j);
  } else {
    m = get_model(c.model).spec;
  }
  ParamPoint p = bindings(c);
  if (point_out != nullptr) *point_out = p;
  return p.empty() ? m : bind_params(m, p);
}

Boundary boundary_of(const Config& c, const Model& m) {
  return c.boundary.empty() ? model_boundary(m) : parse_boundary(c.boundary);
}

void check_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  throw InputError("format '" + c.format + "' is not available for this command");
}

std::string trim_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void print_operator(std::ostream& out, const std::string& title, const LocalOperator& op, int uc) {
  out << title << ":\n";
  for (const auto& [k, v] : op.terms()) out << "  " << v.to_string() << " * " << format_word(k, uc) << "\n";
}

int cmd_check(const Config& c) {
  check_format(c, {"text", "json"});
  HamiltonianSpec h = nearest_neighbor_form(load_model(c));
  HokkyoOptions opt;
  opt.policy = c.strict ? PreconditionPolicy::strict : PreconditionPolicy::paper;
  Certificate cert = hokkyo_test(h, opt);
  if (c.format == "json") {
    json j = certificate_json(cert);
    if (!c.trace) j.erase("commutator_trace");
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const auto& a = cert.assumptions;
  const int uc = cert.unit_cell;
  std::cout << "model: " << cert.model << "\n";
  std::cout << "verdict: " << verdict_name(cert.verdict) << "\n";
  std::cout << "injectivity: " << (a.injectivity ? "holds" : "fails") << " (" << a.injectivity_basis << ")\n";
  std::cout << "minimal form: " << (a.minimal_form ? "yes" : "no") << "\n";
  std::cout << "2-local condition: " << (a.two_local_one_dimensional ? "holds, B<=(2) = C h2" : "not one-dimensional")
            << " (dim " << a.two_local_dimension << ")\n";
  std::cout << "excluded loci:";
  if (cert.excluded_loci.empty()) std::cout << " none";
  for (const auto& p : cert.excluded_loci) std::cout << " " << p.to_string() << "=0";
  std::cout << "\n";
  if (cert.obstruction) {
    std::cout << "obstruction: " << cert.obstruction->coefficient.to_string() << " * "
              << format_word(cert.obstruction->string, uc) << " (" << cert.obstruction->kind << ")\n";
  }
  if (cert.charge) {
    print_operator(std::cout, "charge density", *cert.charge, uc);
    print_operator(std::cout, "A2", *cert.a2, uc);
    std::cout << "charge verified: " << (cert.charge_verified ? "yes" : "no") << "\n";
  }
  for (const auto& n : cert.notes) std::cout << "note: " << n << "\n";
  if (c.trace) {
    std::cout << "commutator trace:\n";
    for (const auto& s : cert.commutator_trace) std::cout << trim_newline(s) << "\n\n";
  }
  return kOk;
}

int cmd_charge(const Config& c) {
  check_format(c, {"text", "json"});
  ParamPoint p;
  Model m = load_model(c, &p);
  ChargeOptions opt;
  if (model_params(m).empty()) opt.point = ParamPoint();
  int n = c.n > 0 ? c.n : 2 * c.k + 2;
  ChargeSpace s = brute_force_charges(m, c.k, n, opt);
  if (c.format == "json") {
    json j = charge_space_json(s);
    if (!p.empty()) j["point"] = point_text(p);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "model: " << s.model << "\n";
  std::cout << "k: " << s.k << ", effective sites: " << s.n_sites << ", ansatz size: " << s.basis_size << "\n";
  if (!p.empty()) std::cout << "point: " << point_text(p) << "\n";
  std::cout << "charge space dimension: " << s.dimension << "\n";
  std::cout << "lower-k dimension: " << s.lower_dimension << "\n";
  std::cout << "local symmetries: " << s.local_symmetries << "\n";
  std::cout << "includes H: " << (s.includes_hamiltonian ? "yes" : "no") << "\n";
  std::cout << "nontrivial dimension: " << s.nontrivial_dimension << "\n";
  for (size_t i = 0; i < s.quotient.size(); ++i) {
    print_operator(std::cout, "nontrivial charge " + std::to_string(i + 1), s.quotient[i], s.unit_cell);
  }
  for (const auto& l : s.loci) std::cout << "locus: " << l.to_string() << "=0\n";
  return kOk;
}

LocalOperator read_charge(const std::string& path) {
  std::string text = read_file(path);
  size_t a = text.find_first_not_of(" \t\r\n");
  if (a != std::string::npos && (text[a] == '{' || text[a] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed charge file: ") + e.what());
    }
    const json& terms = j.is_array() ? j : j.contains("density") ? j["density"] : j.at("charge").at("density");
    LocalOperator op;
    for (const auto& t : terms) {
      op.add(parse_word(t.at("word").get<std::string>()), parse_coefficient(t.at("coeff").get<std::string>()));
    }
    return op;
  }
  return parse_operator(text);
}

int cmd_verify(const Config& c) {
  check_format(c, {"text", "json"});
  if (c.charge_file.empty()) throw InputError("verify needs --charge FILE");
  ParamPoint p;
  Model m = load_model(c, &p);
  LocalOperator q = read_charge(c.charge_file);
  if (!p.empty()) q = substitute(q, index_point(p));
  const int uc = model_unit_cell(m);
  int n = c.n > 0 ? c.n : 8 * uc;
  Boundary b = boundary_of(c, m);
  json j;
  j["model"] = model_name(m);
  j["n_sites"] = n;
  j["boundary"] = boundary_name(b);
  auto r = verify_charge(q, m, n, b);
  j["conserved"] = r.conserved;
  j["residual"] = operator_json(r.residual, 1);
  if (c.dense) {
    if (!model_params(m).empty()) {
      throw InputError("--dense needs every parameter bound with --at");
    }
    auto d = dense_matrix_check(m, q, n, p, b);
    j["dense"] = {{"commutes", d.commutes}};
    if (d.witness) j["dense"]["witness"] = {{"row", d.witness->first}, {"col", d.witness->second}, {"value", d.witness_value}};
  }
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "model: " << model_name(m) << ", " << n << " sites, " << boundary_name(b) << "\n";
  std::cout << "conserved: " << (r.conserved ? "yes" : "no") << "\n";
  if (!r.conserved) print_operator(std::cout, "residual", r.residual, 1);
  if (c.dense) std::cout << "dense check: " << (j["dense"]["commutes"].get<bool>() ? "commutes" : "fails") << "\n";
  return kOk;
}

int cmd_graph(const Config& c) {
  check_format(c, {"text", "json", "dot"});
  ParamPoint p;
  Model m = load_model(c, &p);
  int n = c.n > 0 ? c.n : 8 * model_unit_cell(m);
  Boundary b = boundary_of(c, m);
  auto g = build_graph(m, n, b);
  if (c.format == "dot") {
    std::cout << export_dot(g);
    return kOk;
  }
  auto cl = classify(g, static_cast<size_t>(c.max_len));
  json j = classification_json(g, cl, model_name(m));
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "model: " << model_name(m) << ", " << n << " sites, " << boundary_name(b) << "\n";
  std::cout << "vertices: " << g.size() << ", edges: " << g.edge_count() << "\n";
  std::cout << "claws: " << cl.claws.size() << "\n";
  std::cout << "even holes (length <= " << cl.even_hole_bound << "): " << cl.even_holes.size() << "\n";
  std::cout << "implication: " << implication_name(cl.implication) << (cl.extrapolated ? " (extrapolated)" : "")
            << "\n";
  auto show = [&](const char* kind, const std::vector<Witness>& ws) {
    if (ws.empty()) return;
    const auto& w = ws.front();
    std::cout << "first " << kind << ":";
    for (const auto& l : witness_labels(g, w)) std::cout << " " << l;
    std::cout << (w.bulk ? " (bulk)" : " (boundary)") << "\n";
  };
  show("claw", cl.claws);
  show("even hole", cl.even_holes);
  return kOk;
}

int cmd_catalog_list(const Config& c) {
  check_format(c, {"text", "json"});
  if (c.format == "json") {
    json a = json::array();
    for (const auto& e : catalog()) {
      a.push_back({{"id", e.id}, {"description", e.description}, {"anchor", e.anchor}, {"model", model_to_json(e.spec)}});
    }
    std::cout << a.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : catalog()) std::cout << e.id << "  " << e.description << "\n";
  return kOk;
}

int cmd_catalog_show(const Config& c) {
  std::cout << model_to_text(get_model(c.catalog_id).spec);
  return kOk;
}

int cmd_reproduce(const Config& c) {
  check_format(c, {"text", "json"});
  HokkyoOptions opt;
  opt.policy = c.strict ? PreconditionPolicy::strict : PreconditionPolicy::paper;
  Reproduction r = reproduce_all(opt);
  if (c.format == "json") {
    std::cout << reproduction_json(r).dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : r.entries) {
    std::string v = e.cert.model.empty() ? "error" : verdict_name(e.cert.verdict);
    std::cout << std::left << std::setw(18) << e.id << std::setw(15) << v;
    if (e.cert.obstruction) {
      std::cout << e.cert.obstruction->coefficient.to_string() << " * "
                << format_word(e.cert.obstruction->string, e.cert.unit_cell);
    } else if (e.cert.a2) {
      std::cout << "A2 = " << to_inline(*e.cert.a2, e.cert.unit_cell);
    }
    std::cout << "\n";
    for (const auto& x : e.locus_extras) {
      std::cout << std::string(18, ' ') << "on " << x.locus.to_string() << "=0 B<=(2) gains";
      for (const auto& s : x.gained) std::cout << " " << format_word(s, e.cert.unit_cell);
      std::cout << "\n";
    }
    for (const auto& m : e.mismatches) std::cout << std::string(18, ' ') << "MISMATCH " << m << "\n";
  }
  for (const auto& q : r.charges) {
    std::cout << q.model << " five-site charge " << q.density << " at N=" << q.n_sites << ": "
              << (q.conserved ? "conserved" : "NOT conserved") << "\n";
  }
  std::cout << "minimal composite models: " << r.table1_integrable << " integrable, " << r.table1_nonintegrable
            << " nonintegrable\n";
  std::cout << "extended models: " << r.table2_integrable << " integrable, " << r.table2_nonintegrable
            << " nonintegrable\n";
  std::cout << "all stated results match: " << (r.ok() ? "yes" : "no") << "\n";
  return kOk;
}

int fail(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrability checks for translation-invariant spin chains"};
  app.require_subcommand(1);
  Config c;

  auto model_opts = [&c](CLI::App* s) {
    s->add_option("model", c.model, "catalog id or model file")->required();
    s->add_option("--at", c.at, "parameter bindings, e.g. c1=1,c2=2");
    s->add_option("--t", c.t, "value of t, or 'symbolic'");
    s->add_option("--format", c.format, "text or json");
  };

  auto* check = app.add_subcommand("check", "injectivity, 2-local condition and 3-local charge test");
  model_opts(check);
  check->add_flag("--strict", c.strict, "enforce both preconditions literally");
  check->add_flag("--trace", c.trace, "include the commutator trace");

  auto* charge = app.add_subcommand("charge", "brute-force k-local charges on a ring");
  model_opts(charge);
  charge->add_option("--k", c.k, "support in effective sites")->check(CLI::Range(1, 8));
  charge->add_option("--n", c.n, "ring size in effective sites (default 2k+2)");

  auto* verify = app.add_subcommand("verify", "check a charge density on a finite chain");
  model_opts(verify);
  verify->add_option("--charge", c.charge_file, "charge file: 'coef * word' lines or JSON terms");
  verify->add_option("--n", c.n, "physical sites");
  verify->add_option("--boundary", c.boundary, "periodic or open");
  verify->add_flag("--dense", c.dense, "also compare dense matrices (needs --at)");

  auto* graph = app.add_subcommand("graph", "frustration graph");
  model_opts(graph);
  graph->add_option("--n", c.n, "physical sites");
  graph->add_option("--boundary", c.boundary, "periodic or open");
  graph->add_option("--max-len", c.max_len, "longest even hole searched")->check(CLI::Range(4, 64));

  auto* cat = app.add_subcommand("catalog", "built-in models");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list model ids");
  list->add_option("--format", c.format, "text or json");
  auto* show = cat->add_subcommand("show", "print a model file");
  show->add_option("id", c.catalog_id, "catalog id")->required();

  auto* repro = app.add_subcommand("reproduce", "run every catalog expectation");
  repro->add_option("--format", c.format, "text or json");
  repro->add_flag("--strict", c.strict, "enforce both preconditions literally");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInput, "usage", e.what());
  }

  try {
    if (check->parsed()) return cmd_check(c);
    if (charge->parsed()) return cmd_charge(c);
    if (verify->parsed()) return cmd_verify(c);
    if (graph->parsed()) return cmd_graph(c);
    if (list->parsed()) return cmd_catalog_list(c);
    if (show->parsed()) return cmd_catalog_show(c);
    if (repro->parsed()) return cmd_reproduce(c);
  } catch (const PreconditionError& e) {
    return fail(kPrecondition, "precondition", e.what(), {{"assumption", e.assumption()}, {"locus", e.locus()}});
  } catch (const MixedCommutation& e) {
    return fail(kPrecondition, "mixed_commutation", e.what(), {{"pair", {e.first(), e.second()}}});
  } catch (const ResourceCap& e) {
    return fail(kCap, "resource_cap", e.what(), {{"requested", e.requested()}, {"cap", e.cap()}});
  } catch (const std::overflow_error& e) {
    return fail(kCap, "resource_cap", e.what());
  } catch (const UnknownModel& e) {
    return fail(kInput, "unknown_model", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kInput, "input", e.what());
  } catch (const std::exception& e) {
    return fail(kInput, "input", e.what());
  }
  return kOk;
}
