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

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "chainint/polynomial.hpp"

namespace chainint {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of the fraction field of Polynomial, kept reduced with a monic
// denominator.
class Coefficient {
 public:
  Coefficient() : den_(1) {}
  Coefficient(long c) : num_(c), den_(1) {}  // NOLINT
  Coefficient(const GaussRational& c) : num_(c), den_(1) {}  // NOLINT
  Coefficient(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  Coefficient(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }

  static Coefficient variable(const std::string& name) { return Coefficient(Polynomial::variable(name)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  GaussRational constant_value() const { return num_.constant_value(); }
  uint32_t variables() const { return num_.variables() | den_.variables(); }

  Coefficient operator-() const {
    Coefficient r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Coefficient(a.num_ + b.num_, a.den_);
    return Coefficient(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.is_zero() || b.is_zero()) return Coefficient();
    if (a.den_.is_one() && b.den_.is_one()) return Coefficient::raw(a.num_ * b.num_, Polynomial(1));
    if (b.is_constant()) return Coefficient::raw(a.num_.scaled(b.constant_value()), a.den_);
    if (a.is_constant()) return Coefficient::raw(b.num_.scaled(a.constant_value()), b.den_);
    return Coefficient(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    if (b.is_zero()) throw std::domain_error("division by zero coefficient");
    if (b.is_constant()) return Coefficient::raw(a.num_.scaled(GaussRational(1) / b.constant_value()), a.den_);
    return Coefficient(a.num_ * b.den_, a.den_ * b.num_);
  }
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient& operator/=(const Coefficient& o) { return *this = *this / o; }

  Coefficient times_i_power(int k) const { return raw(num_.times_i_power(k), den_); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }
  friend bool operator<(const Coefficient& a, const Coefficient& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  // Substitutes bound variables. Throws std::domain_error on a pole.
  Coefficient substitute(const std::map<int, GaussRational>& point) const {
    Polynomial d = den_.substitute(point);
    if (d.is_zero()) throw std::domain_error("coefficient has a pole at the requested point");
    return Coefficient(num_.substitute(point), std::move(d));
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  static Coefficient raw(Polynomial num, Polynomial den) {
    Coefficient c;
    c.num_ = std::move(num);
    c.den_ = c.num_.is_zero() ? Polynomial(1) : std::move(den);
    return c;
  }

  static std::string wrap(const Polynomial& p) {
    std::string s = p.to_string();
    bool simple = p.size() == 1 && s.find_first_of("*/+") == std::string::npos && s[0] != '-';
    return simple ? s : "(" + s + ")";
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (!den_.is_constant()) {
      Polynomial g = Polynomial::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = Polynomial::divide_exact(num_, g).value();
        den_ = Polynomial::divide_exact(den_, g).value();
      }
    }
    if (!den_.leading_coeff().is_one()) {
      GaussRational inv = GaussRational(1) / den_.leading_coeff();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const Coefficient& c) { return c.is_zero(); }

inline std::set<std::string> variable_names(uint32_t mask) {
  std::set<std::string> out;
  for (int v = 0; v < kMaxVariables; ++v) {
    if ((mask >> v) & 1u) out.insert(var_name(v));
  }
  return out;
}

namespace detail {

// Recursive-descent parser for coefficient expressions:
// sums, products, quotients, integer powers, parentheses, `i`, decimals.
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Coefficient parse() {
    Coefficient c = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse coefficient '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Coefficient expr() {
    Coefficient acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Coefficient term() {
    Coefficient acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        Coefficient d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Coefficient unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Coefficient power() {
    Coefficient base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Coefficient r(1);
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  Coefficient atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Coefficient v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class v(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        size_t fs = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string frac = s_.substr(fs, pos_ - fs);
        if (!frac.empty()) {
          mpz_class scale;
          mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
          v += mpq_class(mpz_class(frac), scale);
          v.canonicalize();
        }
      }
      return Coefficient(GaussRational(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return Coefficient(GaussRational::i());
      return Coefficient::variable(name);
    }
    fail("unexpected character");
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Coefficient parse_coefficient(const std::string& text) { return detail::ExprParser(text).parse(); }

inline GaussRational parse_rational(const std::string& text) {
  Coefficient c = parse_coefficient(text);
  if (!c.is_constant()) throw ParseError("expected a number, got '" + text + "'");
  return c.constant_value();
}

}  // namespace chainint
