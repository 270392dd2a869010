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

// Classifies the frustration graph of a three-site model and prints DOT.

#include <iostream>

#include "chainint/chainint.hpp"

int main() {
  using namespace chainint;
  Model m = get_model("tilde:II").spec;
  FrustrationGraph g = build_graph(m, 10, Boundary::open);
  GraphClassification c = classify(g);
  std::cout << "# " << implication_name(c.implication) << ", " << c.claws.size() << " claws\n";
  std::cout << export_dot(g);
  return 0;
}
