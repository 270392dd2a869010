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


#include <gtest/gtest.h>

#include "chainint/catalog.hpp"
#include "chainint/lattice.hpp"

using namespace chainint;

TEST(Lattice, TranslateWrapsOnRing) {
  PauliString s = PauliString::from_letters("XZ", 6);
  EXPECT_EQ(translate(s, 1, 8, Boundary::periodic).letters(8), "ZIIIIIIX");
  EXPECT_EQ(translate(s, 8, 8, Boundary::periodic), s);
  EXPECT_EQ(shift_string(PauliString::from_letters("XY"), 3).letters(5), "IIIXY");
}

TEST(Lattice, InstantiatePeriodicAndOpen) {
  Model ising = get_model("ising").spec;
  LocalOperator ring = instantiate(ising, 6, Boundary::periodic);
  LocalOperator chain = instantiate(ising, 6, Boundary::open);
  EXPECT_EQ(ring.size(), 6u);
  EXPECT_EQ(chain.size(), 5u);
  EXPECT_EQ(ring.coefficient(PauliString::from_letters("ZIIIIZ")), Coefficient(1));
  EXPECT_TRUE(chain.coefficient(PauliString::from_letters("ZIIIIZ")).is_zero());
  EXPECT_THROW(instantiate(ising, 65), LatticeError);
}

TEST(Lattice, CompositeMapPreservesRing) {
  for (const std::string id : {"deformed_fredkin", "tilde:I", "tilde:III", "tilde:IV", "ffd"}) {
    ThreeSiteSpec three = std::get<ThreeSiteSpec>(get_model(id).spec);
    HamiltonianSpec comp = composite_map(three);
    for (int n : {8, 12}) {
      EXPECT_EQ(instantiate(three, n, Boundary::periodic), instantiate(comp, n, Boundary::periodic)) << id;
    }
  }
}

TEST(Lattice, CompositeUnitCellRequiresEvenLength) {
  Model m = get_model("min:Ia").spec;
  EXPECT_THROW(instantiate(m, 7), LatticeError);
  EXPECT_EQ(instantiate(m, 8).size(), 8u);
}

TEST(Lattice, BindParamsRemovesParameters) {
  Model m = get_model("deformed_fredkin").spec;
  Model b = bind_params(m, parse_point("t=1/2"));
  EXPECT_TRUE(model_params(b).empty());
  EXPECT_EQ(std::get<ThreeSiteSpec>(b).density3.coefficient(parse_word("ZZI")), parse_coefficient("-1/4"));
  EXPECT_THROW(bind_params(m, parse_point("c1=2")), std::invalid_argument);
}

TEST(Lattice, ParsePointText) {
  ParamPoint p = parse_point("c1=1/3, c2=-2");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.at("c1"), GaussRational(mpq_class(1, 3)));
  EXPECT_EQ(parse_point(point_text(p)), p);
  EXPECT_THROW(parse_point("c1"), std::invalid_argument);
}

TEST(Lattice, ModelJsonRoundTrip) {
  for (const auto& e : catalog()) {
    Model back = model_from_json(model_to_json(e.spec));
    EXPECT_EQ(model_density(back), model_density(e.spec)) << e.id;
    EXPECT_EQ(model_unit_cell(back), model_unit_cell(e.spec)) << e.id;
    EXPECT_EQ(model_params(back), model_params(e.spec)) << e.id;
  }
}

TEST(Lattice, HamiltonianSplitsBlocks) {
  HamiltonianSpec h = make_hamiltonian("x", 2, parse_operator("1 * (XX)\n2 * (IX)(XZ)\n1 * (II)(ZZ)"), {});
  EXPECT_EQ(h.density2, parse_operator("2 * (IX)(XZ)"));
  EXPECT_EQ(h.density1, parse_operator("2 * (XX)").scaled(Coefficient(1)) - parse_operator("1 * (XX)") +
                            parse_operator("1 * (ZZ)"));
  EXPECT_THROW(make_hamiltonian("y", 2, parse_operator("1 * (XX)(II)(ZZ)"), {}), LatticeError);
}
