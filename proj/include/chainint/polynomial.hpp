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
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainint/gauss_rational.hpp"

namespace chainint {

inline constexpr int kMaxVariables = 8;

// Process-wide table of parameter names. Indices are stable once assigned.
class VariableTable {
 public:
  static VariableTable& instance() {
    static VariableTable table;
    return table;
  }

  int index_of(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t k = 0; k < names_.size(); ++k) {
      if (names_[k] == name) return static_cast<int>(k);
    }
    if (names_.size() >= kMaxVariables) {
      throw std::invalid_argument("too many distinct parameters (max 8): " + name);
    }
    names_.push_back(name);
    return static_cast<int>(names_.size() - 1);
  }

  std::optional<int> find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t k = 0; k < names_.size(); ++k) {
      if (names_[k] == name) return static_cast<int>(k);
    }
    return std::nullopt;
  }

  std::string name(int index) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(static_cast<size_t>(index));
  }

 private:
  VariableTable() : names_{"c1", "c2", "t"} {}
  mutable std::mutex mu_;
  std::vector<std::string> names_;
};

inline int var_index(const std::string& name) { return VariableTable::instance().index_of(name); }
inline std::string var_name(int index) { return VariableTable::instance().name(index); }

// Monomial packed as eight 8-bit exponents; variable 0 occupies the top byte,
// so integer comparison is lexicographic with variable 0 dominant.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(uint64_t packed) : packed_(packed) {}

  static Monomial var(int index, int exponent = 1) {
    if (exponent < 0 || exponent > 255) throw std::overflow_error("exponent out of range");
    return Monomial(static_cast<uint64_t>(exponent) << shift(index));
  }

  int exponent(int index) const { return static_cast<int>((packed_ >> shift(index)) & 0xff); }
  uint64_t packed() const { return packed_; }
  bool is_one() const { return packed_ == 0; }

  int degree() const {
    int d = 0;
    for (int k = 0; k < kMaxVariables; ++k) d += exponent(k);
    return d;
  }

  uint32_t variables() const {
    uint32_t m = 0;
    for (int k = 0; k < kMaxVariables; ++k) {
      if (exponent(k) != 0) m |= 1u << k;
    }
    return m;
  }

  Monomial operator*(Monomial o) const {
    uint64_t s = packed_ + o.packed_;
    uint64_t carry = ((packed_ & o.packed_) | ((packed_ | o.packed_) & ~s)) & 0x8080808080808080ull;
    if (carry != 0) throw std::overflow_error("exponent overflow");
    return Monomial(s);
  }

  bool divides(Monomial o) const {
    for (int k = 0; k < kMaxVariables; ++k) {
      if (exponent(k) > o.exponent(k)) return false;
    }
    return true;
  }

  // Requires divides(o).
  Monomial quotient_of(Monomial o) const { return Monomial(o.packed_ - packed_); }

  Monomial without(int index) const { return Monomial(packed_ & ~(0xffull << shift(index))); }

  static Monomial gcd(Monomial a, Monomial b) {
    uint64_t p = 0;
    for (int k = 0; k < kMaxVariables; ++k) {
      p |= static_cast<uint64_t>(std::min(a.exponent(k), b.exponent(k))) << shift(k);
    }
    return Monomial(p);
  }

  friend bool operator==(Monomial a, Monomial b) { return a.packed_ == b.packed_; }
  friend bool operator!=(Monomial a, Monomial b) { return a.packed_ != b.packed_; }

  // Graded order: higher total degree first, then lexicographic.
  friend bool graded_greater(Monomial a, Monomial b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.packed_ > b.packed_;
  }

  std::string to_string() const {
    std::string s;
    for (int k = 0; k < kMaxVariables; ++k) {
      int e = exponent(k);
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += var_name(k);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  static int shift(int index) { return 8 * (kMaxVariables - 1 - index); }
  uint64_t packed_ = 0;
};

// Sparse multivariate polynomial over Q(i); terms sorted leading-first in
// graded order, no zero coefficients stored.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussRational>;

  Polynomial() = default;
  Polynomial(long c) {  // NOLINT
    if (c != 0) terms_.emplace_back(Monomial(), GaussRational(c));
  }
  Polynomial(const GaussRational& c) {  // NOLINT
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
  }
  Polynomial(Monomial m, const GaussRational& c) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
  }

  static Polynomial variable(const std::string& name) {
    return Polynomial(Monomial::var(var_index(name)), GaussRational(1));
  }
  static Polynomial variable(int index) { return Polynomial(Monomial::var(index), GaussRational(1)); }

  // Sorts and combines arbitrary term lists.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return graded_greater(a.first, b.first); });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one(); }
  size_t size() const { return terms_.size(); }

  GaussRational constant_value() const {
    for (const auto& t : terms_) {
      if (t.first.is_one()) return t.second;
    }
    return GaussRational();
  }

  const GaussRational& leading_coeff() const { return terms_.front().second; }
  Monomial leading_monomial() const { return terms_.front().first; }

  uint32_t variables() const {
    uint32_t m = 0;
    for (const auto& t : terms_) m |= t.first.variables();
    return m;
  }

  int degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  bool has_real_coefficients() const {
    for (const auto& t : terms_) {
      if (!t.second.is_real()) return false;
    }
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (b.is_constant()) return a.scaled(b.terms_[0].second);
    if (a.is_constant()) return b.scaled(a.terms_[0].second);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) out.emplace_back(x.first * y.first, x.second * y.second);
    }
    return from_terms(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const GaussRational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r = *this;
    if (c.is_one()) return r;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  Polynomial times_monomial(Monomial m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  Polynomial times_i_power(int k) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = t.second.times_i_power(k);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Canonical total order for sorting containers of polynomials.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t k = 0; k < n; ++k) {
      const auto& x = a.terms_[k];
      const auto& y = b.terms_[k];
      if (x.first != y.first) return graded_greater(x.first, y.first);
      if (x.second != y.second) return x.second < y.second;
    }
    return a.terms_.size() < b.terms_.size();
  }

  // Coefficients with respect to variable v, keyed by exponent of v.
  std::map<int, Polynomial> coefficients_in(int v) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.first.exponent(v)].emplace_back(t.first.without(v), t.second);
    std::map<int, Polynomial> out;
    for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
    return out;
  }

  Polynomial coefficient_of(int v, int e) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
      if (t.first.exponent(v) == e) ts.emplace_back(t.first.without(v), t.second);
    }
    return from_terms(std::move(ts));
  }

  // Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (b.is_constant()) return a.scaled(GaussRational(1) / b.terms_[0].second);
    Polynomial r = a;
    std::vector<Term> q;
    const Term& lb = b.terms_.front();
    GaussRational inv = GaussRational(1) / lb.second;
    while (!r.is_zero()) {
      const Term& lr = r.terms_.front();
      if (!lb.first.divides(lr.first)) return std::nullopt;
      Term t(lb.first.quotient_of(lr.first), lr.second * inv);
      r -= Polynomial(t.first, t.second) * b;
      q.push_back(std::move(t));
    }
    return from_terms(std::move(q));
  }

  // Pseudo-remainder of a by b in variable v.
  static Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int v) {
    int n = b.degree_in(v);
    Polynomial lb = b.coefficient_of(v, n);
    Polynomial r = a;
    while (!r.is_zero()) {
      int m = r.degree_in(v);
      if (m < n) break;
      Polynomial lr = r.coefficient_of(v, m);
      r = lb * r - (lr * b).times_monomial(Monomial::var(v, m - n));
    }
    return r;
  }

  // Scaled so that the leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero() || leading_coeff().is_one()) return *this;
    return scaled(GaussRational(1) / leading_coeff());
  }

  // Scaled to integer coefficients with unit content and positive leading part.
  Polynomial primitive_integer() const {
    if (is_zero() || !has_real_coefficients()) return monic();
    mpz_class l = 1, g = 0;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.re().get_den_mpz_t());
    for (const auto& t : terms_) {
      mpq_class v = t.second.re() * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    mpq_class s(l, g);
    if (sgn(leading_coeff().re()) < 0) s = -s;
    s.canonicalize();
    return scaled(GaussRational(s));
  }

  static Polynomial content_in(const Polynomial& a, int v) {
    Polynomial g;
    for (auto& [e, c] : a.coefficients_in(v)) {
      g = gcd(g, c);
      if (g.is_constant()) return Polynomial(1);
    }
    return g;
  }

  static Polynomial primitive_part_in(const Polynomial& a, int v) {
    Polynomial c = content_in(a, v);
    return divide_exact(a, c).value().monic();
  }

  // Greatest common divisor, normalized monic; gcd(0,0)=0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.monic();
    uint32_t vars = a.variables() | b.variables();
    int v = 0;
    while (((vars >> v) & 1u) == 0) ++v;
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial gc = gcd(ca, cb);
    Polynomial p = divide_exact(a, ca).value().monic();
    Polynomial q = divide_exact(b, cb).value().monic();
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (true) {
      Polynomial r = pseudo_remainder(p, q, v);
      if (r.is_zero()) break;
      if (r.degree_in(v) == 0) return gc.monic();
      p = std::move(q);
      q = primitive_part_in(r, v);
    }
    return (gc * q).monic();
  }

  // Substitutes the given variables; others stay symbolic.
  Polynomial substitute(const std::map<int, GaussRational>& point) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = t.first;
      GaussRational c = t.second;
      for (const auto& [v, val] : point) {
        int e = m.exponent(v);
        if (e == 0) continue;
        GaussRational pw(1);
        for (int k = 0; k < e; ++k) pw *= val;
        c *= pw;
        m = m.without(v);
      }
      out.emplace_back(m, std::move(c));
    }
    return from_terms(std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = c.prints_negative();
      GaussRational mag = neg ? -c : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? "-" : "+";
      }
      first = false;
      if (m.is_one()) {
        s += mag.to_string();
      } else if (mag.is_one()) {
        s += m.to_string();
      } else {
        s += mag.to_string() + "*" + m.to_string();
      }
    }
    return s;
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && graded_greater(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || graded_greater(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        GaussRational c = subtract ? a.terms_[i].second - b.terms_[j].second
                                   : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0 || a > 1000000) return out;
  unsigned long v = a.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d * d != v) out.emplace_back(v / d);
    }
  }
  return out;
}

// Rational roots of a univariate polynomial in v with real coefficients.
inline std::vector<mpq_class> rational_roots(const Polynomial& p, int v) {
  std::vector<mpq_class> roots;
  if (!p.has_real_coefficients()) return roots;
  Polynomial q = p.primitive_integer();
  int n = q.degree_in(v);
  if (n == 0) return roots;
  std::vector<mpz_class> c(static_cast<size_t>(n) + 1, 0);
  for (const auto& [m, k] : q.terms()) c[static_cast<size_t>(m.exponent(v))] = k.re().get_num();
  int low = 0;
  while (low <= n && c[static_cast<size_t>(low)] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low >= n) return roots;
  auto ps = positive_divisors(c[static_cast<size_t>(low)]);
  auto qs = positive_divisors(c[static_cast<size_t>(n)]);
  std::vector<mpq_class> cand;
  for (const auto& a : ps) {
    for (const auto& b : qs) {
      mpq_class r(a, b);
      r.canonicalize();
      cand.push_back(r);
      cand.push_back(-r);
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& r : cand) {
    mpq_class acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * r + c[static_cast<size_t>(k)];
    if (acc == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace detail

// Splits p into monomial factors, rational linear factors of univariate or
// homogeneous bivariate parts, and an unsplit remainder. Units are dropped;
// each factor is returned in primitive integer form.
inline std::vector<std::pair<Polynomial, int>> factor_polynomial(const Polynomial& p) {
  std::vector<std::pair<Polynomial, int>> out;
  if (p.is_zero() || p.is_constant()) return out;
  Monomial g = p.terms().front().first;
  for (const auto& t : p.terms()) g = Monomial::gcd(g, t.first);
  Polynomial rest = Polynomial::divide_exact(p, Polynomial(g, GaussRational(1))).value();
  for (int v = 0; v < kMaxVariables; ++v) {
    if (g.exponent(v) > 0) out.emplace_back(Polynomial::variable(v), g.exponent(v));
  }
  auto add = [&out](const Polynomial& f) {
    Polynomial n = f.primitive_integer();
    for (auto& e : out) {
      if (e.first == n) {
        ++e.second;
        return;
      }
    }
    out.emplace_back(n, 1);
  };
  uint32_t vars = rest.variables();
  std::vector<int> vs;
  for (int v = 0; v < kMaxVariables; ++v) {
    if ((vars >> v) & 1u) vs.push_back(v);
  }
  bool homogeneous = true;
  int d = rest.total_degree();
  for (const auto& t : rest.terms()) homogeneous = homogeneous && t.first.degree() == d;
  if (vs.size() == 1 || (vs.size() == 2 && homogeneous)) {
    int u = vs[0];
    std::optional<int> w;
    if (vs.size() == 2) w = vs[1];
    Polynomial dehom = w ? rest.substitute({{*w, GaussRational(1)}}) : rest;
    for (const auto& r : detail::rational_roots(dehom, u)) {
      Polynomial lin = Polynomial::variable(u) -
                       (w ? Polynomial::variable(*w).scaled(GaussRational(r)) : Polynomial(GaussRational(r)));
      while (true) {
        auto q = Polynomial::divide_exact(rest, lin);
        if (!q) break;
        rest = *q;
        add(lin);
      }
    }
  }
  if (!rest.is_constant()) add(rest);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chainint
