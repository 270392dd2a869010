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

#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "chainint/coefficient.hpp"

namespace chainint {

inline constexpr int kMaxSites = 64;

// Letter codes in canonical order.
enum class Letter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char letter_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

inline Letter letter_from_char(char c) {
  switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
    default: throw ParseError(std::string("not a Pauli letter: '") + c + "'");
  }
}

// Tensor product of Hermitian Pauli letters on sites 0..63 times i^phase.
struct PauliString {
  uint64_t x = 0;
  uint64_t z = 0;
  uint8_t phase = 0;

  PauliString() = default;
  PauliString(uint64_t x_mask, uint64_t z_mask, int phase_exp = 0)
      : x(x_mask), z(z_mask), phase(static_cast<uint8_t>(((phase_exp % 4) + 4) % 4)) {}

  static PauliString single(int site, Letter l) {
    check_site(site);
    uint64_t b = 1ull << site;
    switch (l) {
      case Letter::I: return {};
      case Letter::X: return {b, 0};
      case Letter::Y: return {b, b};
      default: return {0, b};
    }
  }

  // Letters at consecutive sites starting at `first`, e.g. "XXZ".
  static PauliString from_letters(const std::string& letters, int first = 0) {
    PauliString p;
    for (size_t k = 0; k < letters.size(); ++k) {
      Letter l = letter_from_char(letters[k]);
      PauliString s = single(first + static_cast<int>(k), l);
      p.x |= s.x;
      p.z |= s.z;
    }
    return p;
  }

  Letter letter(int site) const {
    bool xb = (x >> site) & 1u, zb = (z >> site) & 1u;
    if (xb) return zb ? Letter::Y : Letter::X;
    return zb ? Letter::Z : Letter::I;
  }

  uint64_t support() const { return x | z; }
  bool is_identity() const { return (x | z) == 0; }
  int weight() const { return std::popcount(x | z); }
  int first_site() const { return is_identity() ? -1 : std::countr_zero(x | z); }
  int last_site() const { return is_identity() ? -1 : 63 - std::countl_zero(x | z); }

  // Same masks, phase dropped.
  PauliString key() const { return {x, z, 0}; }

  std::string letters(int n_sites) const {
    std::string s;
    for (int k = 0; k < n_sites; ++k) s += letter_char(letter(k));
    return s;
  }

  static void check_site(int site) {
    if (site < 0 || site >= kMaxSites) throw std::out_of_range("site index out of range: " + std::to_string(site));
  }
};

inline bool same_masks(const PauliString& a, const PauliString& b) { return a.x == b.x && a.z == b.z; }

inline bool operator==(const PauliString& a, const PauliString& b) {
  return a.x == b.x && a.z == b.z && a.phase == b.phase;
}
inline bool operator!=(const PauliString& a, const PauliString& b) { return !(a == b); }

// Lexicographic on letters at the lowest differing site, I < X < Y < Z.
inline bool canonical_less(const PauliString& a, const PauliString& b) {
  uint64_t d = (a.x ^ b.x) | (a.z ^ b.z);
  if (d == 0) return false;
  int s = std::countr_zero(d);
  return static_cast<int>(a.letter(s)) < static_cast<int>(b.letter(s));
}

struct CanonicalLess {
  bool operator()(const PauliString& a, const PauliString& b) const { return canonical_less(a, b); }
};

inline bool anticommutes(const PauliString& a, const PauliString& b) {
  return (std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1) != 0;
}

// Phase exponent contributed by multiplying the letters of a and b.
inline int product_phase(const PauliString& a, const PauliString& b) {
  uint64_t xa = a.x & ~a.z, ya = a.x & a.z, za = a.z & ~a.x;
  uint64_t xb = b.x & ~b.z, yb = b.x & b.z, zb = b.z & ~b.x;
  int plus = std::popcount((xa & yb) | (ya & zb) | (za & xb));
  int minus = std::popcount((ya & xb) | (za & yb) | (xa & zb));
  return (((plus - minus) % 4) + 4) % 4;
}

inline PauliString mul(const PauliString& a, const PauliString& b) {
  return {a.x ^ b.x, a.z ^ b.z, a.phase + b.phase + product_phase(a, b)};
}

}  // namespace chainint
