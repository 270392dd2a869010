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
#include <string>
#include <vector>

#include "chainint/lattice.hpp"

namespace chainint {

// Translation-invariant operators on the infinite chain are stored as
// densities whose strings are anchored at block 0: the operator is
// sum_n tau^n(density).

template <class C>
BasicOperator<C> anchored(const BasicOperator<C>& op, int unit_cell) {
  BasicOperator<C> r;
  for (const auto& [k, v] : op.terms()) r.add(anchor_string(k, unit_cell), v);
  return r;
}

// One bracket contributing to a translation-invariant commutator.
template <class C>
struct TraceStep {
  PauliString left;
  C left_coeff;
  PauliString right;
  C right_coeff;
  PauliString result;  // positioned, not anchored
  C result_coeff;
};

inline int last_block(uint64_t support, int unit_cell) {
  return support == 0 ? -1 : (63 - std::countl_zero(support)) / unit_cell;
}

// Density of [sum_n tau^n D, sum_m tau^m h]. When trace is given, brackets
// whose anchored result equals *target are appended to it.
template <class C>
BasicOperator<C> ti_commutator(const BasicOperator<C>& D, const BasicOperator<C>& h, int unit_cell,
                               Convention conv = Convention::paper, std::vector<TraceStep<C>>* trace = nullptr,
                               const PauliString* target = nullptr) {
  uint64_t dsup = 0, hsup = 0;
  for (const auto& [k, v] : D.terms()) dsup |= k.support();
  for (const auto& [k, v] : h.terms()) hsup |= k.support();
  BasicOperator<C> out;
  if (dsup == 0 || hsup == 0) return out;
  int hb = last_block(hsup, unit_cell) + 1;
  int db = last_block(dsup, unit_cell) + 1;
  int base = hb - 1;
  if ((base + db) * unit_cell > kMaxSites) throw LatticeError("operator too long for translation-invariant bracket");
  std::vector<std::pair<PauliString, C>> ds;
  for (const auto& [k, v] : D.terms()) ds.emplace_back(shift_string(k, base * unit_cell), v);
  for (int s = 0; s < base + db; ++s) {
    for (const auto& [kh0, vh] : h.terms()) {
      PauliString kh = shift_string(kh0, s * unit_cell);
      for (const auto& [kd, vd] : ds) {
        if (!anticommutes(kd, kh)) continue;
        PauliString p = mul(kd, kh);
        C v = conv == Convention::paper ? (vd * vh).times_i_power(p.phase + 3)
                                        : (vd * vh * C(2)).times_i_power(p.phase);
        PauliString a = anchor_string(p.key(), unit_cell);
        if (trace != nullptr && target != nullptr && same_masks(a, *target)) {
          trace->push_back({kd, vd, kh, vh, p.key(), v});
        }
        out.add(a, v);
      }
    }
  }
  return out;
}

// Brackets of sum_n tau^n D with h whose result equals target.
template <class C>
std::vector<TraceStep<C>> ti_trace(const BasicOperator<C>& D, const BasicOperator<C>& h, int unit_cell,
                                   const PauliString& target) {
  std::vector<TraceStep<C>> steps;
  ti_commutator(D, h, unit_cell, Convention::paper, &steps, &target);
  return steps;
}

// All strings anchored at block 0 whose support is in [min_len, max_len]
// blocks, in canonical order grouped by support length.
inline std::vector<PauliString> enumerate_anchored(int unit_cell, int min_len, int max_len) {
  std::vector<PauliString> out;
  const int letters = 1 << (2 * unit_cell);
  auto block = [&](int code) {
    uint64_t x = static_cast<uint64_t>(code & ((1 << unit_cell) - 1));
    uint64_t z = static_cast<uint64_t>(code >> unit_cell);
    return std::make_pair(x, z);
  };
  for (int len = std::max(1, min_len); len <= max_len; ++len) {
    std::vector<PauliString> group;
    long long total = 1;
    for (int b = 0; b < len; ++b) total *= letters;
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      PauliString p;
      bool ok = true;
      for (int b = 0; b < len; ++b) {
        int code = static_cast<int>(rest % letters);
        rest /= letters;
        if ((b == 0 || b == len - 1) && code == 0) {
          ok = false;
          break;
        }
        auto [x, z] = block(code);
        p.x |= x << (b * unit_cell);
        p.z |= z << (b * unit_cell);
      }
      if (ok) group.push_back(p);
    }
    std::sort(group.begin(), group.end(), canonical_less);
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

// Column-expression rendering: rows are aligned by block, the coefficient
// column left of the letters.
template <class C>
std::string render_column(const std::vector<std::pair<C, PauliString>>& rows, int unit_cell) {
  int lo = 1 << 20, hi = -1;
  for (const auto& [c, s] : rows) {
    if (s.is_identity()) continue;
    lo = std::min(lo, s.first_site() / unit_cell);
    hi = std::max(hi, s.last_site() / unit_cell);
  }
  if (hi < 0) lo = hi = 0;
  size_t w = 0;
  for (const auto& [c, s] : rows) w = std::max(w, c.to_string().size());
  std::string out;
  for (const auto& [c, s] : rows) {
    std::string cs = c.to_string();
    std::string line = cs + std::string(w - cs.size() + 1, ' ');
    int first = s.is_identity() ? lo : s.first_site() / unit_cell;
    int last = s.is_identity() ? lo : s.last_site() / unit_cell;
    for (int b = lo; b <= hi; ++b) {
      if (b < first || b > last) {
        line += std::string(static_cast<size_t>(unit_cell == 1 ? 1 : unit_cell + 2), ' ');
        continue;
      }
      std::string letters;
      for (int k = 0; k < unit_cell; ++k) letters += letter_char(s.letter(b * unit_cell + k));
      line += unit_cell == 1 ? letters : "(" + letters + ")";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

template <class C>
std::string render_step(const TraceStep<C>& s, int unit_cell) {
  int shift = std::min(s.left.first_site(), s.right.first_site()) / unit_cell * unit_cell;
  auto sh = [shift](const PauliString& p) { return shift_string(p, -shift); };
  return render_column<C>({{s.left_coeff, sh(s.left)}, {s.right_coeff, sh(s.right)}, {s.result_coeff, sh(s.result)}},
                          unit_cell);
}

}  // namespace chainint
