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

// Certifies a user-defined two-site composite model.

#include <iostream>

#include "chainint/chainint.hpp"

int main() {
  using namespace chainint;
  LocalOperator terms = make_operator({{"c1", "(IX)(XZ)"}, {"c2", "(IY)(YZ)"}});
  HamiltonianSpec h = make_hamiltonian("custom", 2, terms, {"c1", "c2"}, Boundary::periodic, {"c1", "c2"});
  Certificate cert = hokkyo_test(h);
  std::cout << "verdict: " << verdict_name(cert.verdict) << "\n";
  if (cert.obstruction) {
    std::cout << "obstruction: " << cert.obstruction->coefficient.to_string() << " * "
              << format_word(cert.obstruction->string, 2) << "\n";
  }
  if (cert.charge) std::cout << "charge density:\n" << to_text(*cert.charge, 2);
  return 0;
}
