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

#include <cstdint>
#include <random>
#include <string>

#include "chainint/chainint.hpp"

namespace testing_support {

inline chainint::LocalOperator term(const std::string& coeff, const std::string& word) {
  return chainint::LocalOperator(chainint::parse_word(word), chainint::parse_coefficient(coeff));
}

inline chainint::Coefficient random_coeff(std::mt19937_64& rng) {
  static const char* pool[] = {"1", "-2", "3/2", "c1", "-c2", "c1+c2", "2*c1*c2", "i", "-i*c1", "c1^2"};
  return chainint::parse_coefficient(pool[rng() % 10]);
}

inline uint64_t site_mask(int n_sites) { return n_sites >= 64 ? ~0ull : (1ull << n_sites) - 1; }

inline chainint::LocalOperator random_operator(std::mt19937_64& rng, int n_sites, int terms) {
  chainint::LocalOperator op;
  for (int t = 0; t < terms; ++t) {
    uint64_t m = site_mask(n_sites);
    op.add(chainint::PauliString(rng() & m, rng() & m), random_coeff(rng));
  }
  return op;
}

inline chainint::NumericOperator random_numeric(std::mt19937_64& rng, int n_sites, int terms) {
  chainint::NumericOperator op;
  for (int t = 0; t < terms; ++t) {
    uint64_t m = site_mask(n_sites);
    long re = static_cast<long>(rng() % 7) - 3, im = static_cast<long>(rng() % 5) - 2;
    op.add(chainint::PauliString(rng() & m, rng() & m), chainint::GaussRational(mpq_class(re), mpq_class(im)));
  }
  return op;
}

}  // namespace testing_support
