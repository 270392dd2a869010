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

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainint/coefficient.hpp"
#include "chainint/pauli.hpp"

namespace chainint {

enum class Convention {
  exact,  // true [a, b]
  paper,  // [a, b] / (2i)
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch(const std::string& parameter)
      : std::invalid_argument("parameter '" + parameter + "' is not in the operator's declared ring"),
        parameter_(parameter) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

// Linear combination of phase-free Pauli strings with coefficients in C.
// Strings sit at absolute positions relative to site 0.
template <class C>
class BasicOperator {
 public:
  using Map = std::map<PauliString, C, CanonicalLess>;

  BasicOperator() = default;
  BasicOperator(const PauliString& s, C c) { add(s, std::move(c)); }

  // Adds c * s; the phase of s is folded into the coefficient.
  void add(const PauliString& s, const C& c) {
    if (is_zero(c)) return;
    PauliString k = s.key();
    C v = s.phase == 0 ? c : c.times_i_power(s.phase);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(v));
    } else {
      it->second += v;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  C coefficient(const PauliString& s) const {
    auto it = terms_.find(s.key());
    return it == terms_.end() ? C() : it->second;
  }

  // Declared parameter ring; empty means unrestricted.
  const std::set<std::string>& ring() const { return ring_; }
  void set_ring(std::set<std::string> names) { ring_ = std::move(names); }

  BasicOperator operator-() const {
    BasicOperator r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  BasicOperator& operator+=(const BasicOperator& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  BasicOperator& operator-=(const BasicOperator& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend BasicOperator operator+(BasicOperator a, const BasicOperator& b) { return a += b; }
  friend BasicOperator operator-(BasicOperator a, const BasicOperator& b) { return a -= b; }

  BasicOperator scaled(const C& c) const {
    BasicOperator r;
    r.ring_ = ring_;
    if (is_zero(c)) return r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
  }

  friend bool operator==(const BasicOperator& a, const BasicOperator& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicOperator& a, const BasicOperator& b) { return !(a == b); }

  // Operator product a * b.
  friend BasicOperator product(const BasicOperator& a, const BasicOperator& b) {
    BasicOperator r;
    for (const auto& [ka, va] : a.terms_) {
      for (const auto& [kb, vb] : b.terms_) {
        PauliString p = mul(ka, kb);
        r.add(p.key(), (va * vb).times_i_power(p.phase));
      }
    }
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    BasicOperator<D> r;
    for (const auto& [k, v] : terms_) r.add(k, f(v));
    return r;
  }

 private:
  Map terms_;
  std::set<std::string> ring_;
};

using LocalOperator = BasicOperator<Coefficient>;
using NumericOperator = BasicOperator<GaussRational>;

inline uint32_t variables_of(const LocalOperator& op) {
  uint32_t m = 0;
  for (const auto& [k, v] : op.terms()) m |= v.variables();
  return m;
}
inline uint32_t variables_of(const NumericOperator&) { return 0; }

template <class C>
void check_ring(const BasicOperator<C>& a, const BasicOperator<C>& b) {
  auto check = [](const BasicOperator<C>& ring_owner, const BasicOperator<C>& other) {
    if (ring_owner.ring().empty()) return;
    for (const auto& name : variable_names(variables_of(other))) {
      if (ring_owner.ring().count(name) == 0) throw RingMismatch(name);
    }
  };
  check(a, b);
  check(b, a);
}

// Bracket of two strings with coefficients, added into out.
template <class C>
void add_string_commutator(BasicOperator<C>& out, const PauliString& a, const C& ca, const PauliString& b,
                           const C& cb, Convention conv) {
  if (!anticommutes(a, b)) return;
  PauliString p = mul(a, b);
  C v = ca * cb;
  if (conv == Convention::exact) {
    out.add(p.key(), (v * C(2)).times_i_power(p.phase));
  } else {
    out.add(p.key(), v.times_i_power(p.phase + 3));
  }
}

template <class C>
BasicOperator<C> commutator(const BasicOperator<C>& a, const BasicOperator<C>& b,
                            Convention conv = Convention::exact) {
  check_ring(a, b);
  BasicOperator<C> r;
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) add_string_commutator(r, ka, va, kb, vb, conv);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text form.

// Word for one string. unit_cell 2 prints blocks "(IX)(XZ)" from block 0;
// unit_cell 1 prints indexed letters "X1 X2 Z3".
inline std::string format_word(const PauliString& s, int unit_cell) {
  if (unit_cell == 1) {
    if (s.is_identity()) return "I";
    std::string out;
    for (int k = 0; k < kMaxSites; ++k) {
      Letter l = s.letter(k);
      if (l == Letter::I) continue;
      if (!out.empty()) out += " ";
      out += letter_char(l) + std::to_string(k + 1);
    }
    return out;
  }
  int last = s.is_identity() ? 0 : s.last_site() / unit_cell;
  std::string out;
  for (int b = 0; b <= last; ++b) {
    out += "(";
    for (int k = 0; k < unit_cell; ++k) out += letter_char(s.letter(b * unit_cell + k));
    out += ")";
  }
  return out;
}

// Accepts "(IX)(XZ)", "X1 X2 Z3", or compact "XXZ" (first letter on site 0).
inline PauliString parse_word(const std::string& word) {
  std::string w;
  for (char c : word) {
    if (!std::isspace(static_cast<unsigned char>(c))) w += c;
  }
  if (w.empty()) throw ParseError("empty Pauli word");
  PauliString p;
  auto put = [&p, &word](int site, char c) {
    PauliString::check_site(site);
    if (((p.x | p.z) >> site) & 1u) throw ParseError("site given twice in word '" + word + "'");
    PauliString s = PauliString::single(site, letter_from_char(c));
    p.x |= s.x;
    p.z |= s.z;
  };
  if (w[0] == '(') {
    int site = 0;
    size_t k = 0;
    int width = -1;
    while (k < w.size()) {
      if (w[k] != '(') throw ParseError("malformed block word '" + word + "'");
      size_t close = w.find(')', k);
      if (close == std::string::npos) throw ParseError("unclosed block in '" + word + "'");
      std::string block = w.substr(k + 1, close - k - 1);
      if (width < 0) width = static_cast<int>(block.size());
      if (static_cast<int>(block.size()) != width || width == 0) {
        throw ParseError("inconsistent block width in '" + word + "'");
      }
      for (char c : block) {
        if (c != 'I') put(site, c);
        ++site;
      }
      k = close + 1;
    }
    return p;
  }
  bool indexed = false;
  for (char c : w) indexed = indexed || std::isdigit(static_cast<unsigned char>(c));
  if (!indexed) {
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] != 'I') put(static_cast<int>(k), w[k]);
      else letter_from_char(w[k]);
    }
    return p;
  }
  if (w == "I") return p;
  size_t k = 0;
  while (k < w.size()) {
    char c = w[k++];
    size_t start = k;
    while (k < w.size() && std::isdigit(static_cast<unsigned char>(w[k]))) ++k;
    if (start == k) throw ParseError("missing site index in '" + word + "'");
    int site = std::stoi(w.substr(start, k - start)) - 1;
    if (site < 0) throw ParseError("site indices are 1-based in '" + word + "'");
    if (c != 'I') put(site, c);
  }
  return p;
}

template <class C>
std::string to_text(const BasicOperator<C>& op, int unit_cell) {
  std::string out;
  for (const auto& [k, v] : op.terms()) out += v.to_string() + " * " + format_word(k, unit_cell) + "\n";
  return out;
}

// Single-line rendering "a*(XX)(ZI) + b*(IZ)(XX)".
template <class C>
std::string to_inline(const BasicOperator<C>& op, int unit_cell) {
  if (op.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : op.terms()) {
    if (!out.empty()) out += " + ";
    out += v.to_string() + " * " + format_word(k, unit_cell);
  }
  return out;
}

// Parses text lines "coef * word"; blank lines and '#' comments are skipped.
inline LocalOperator parse_operator(const std::string& text) {
  LocalOperator op;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    line = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
    size_t sep = line.find(" * ");
    if (sep == std::string::npos) {
      op.add(parse_word(line), Coefficient(1));
    } else {
      op.add(parse_word(line.substr(sep + 3)), parse_coefficient(line.substr(0, sep)));
    }
  }
  return op;
}

// Terms given as (coefficient, word) pairs.
inline LocalOperator make_operator(const std::vector<std::pair<std::string, std::string>>& terms) {
  LocalOperator op;
  for (const auto& [c, w] : terms) op.add(parse_word(w), parse_coefficient(c));
  return op;
}

inline NumericOperator evaluate(const LocalOperator& op, const std::map<int, GaussRational>& point) {
  NumericOperator r;
  for (const auto& [k, v] : op.terms()) {
    Coefficient c = v.substitute(point);
    if (!c.is_constant()) throw std::invalid_argument("parameter point does not bind every parameter");
    r.add(k, c.constant_value());
  }
  return r;
}

inline LocalOperator substitute(const LocalOperator& op, const std::map<int, GaussRational>& point) {
  LocalOperator r;
  for (const auto& [k, v] : op.terms()) r.add(k, v.substitute(point));
  return r;
}

inline LocalOperator lift(const NumericOperator& op) {
  LocalOperator r;
  for (const auto& [k, v] : op.terms()) r.add(k, Coefficient(v));
  return r;
}

}  // namespace chainint
