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

// Searches 3-local charges of a catalog model at a rational point.

#include <iostream>

#include "chainint/chainint.hpp"

int main() {
  using namespace chainint;
  CatalogEntry e = get_model("min:Ia");
  ChargeOptions opt;
  opt.point = parse_point("c1=2/3,c2=5/7");
  ChargeSpace s = brute_force_charges(e.spec, 3, 8, opt);
  std::cout << "nontrivial 3-local charges: " << s.nontrivial_dimension << "\n";
  for (const auto& q : s.quotient) std::cout << to_text(q, s.unit_cell) << "\n";
  return 0;
}
