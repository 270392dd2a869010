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

#include "chainint/chainint.hpp"

using namespace chainint;

TEST(Catalog, IdsAreUnique) {
  auto ids = catalog_ids();
  std::set<std::string> set(ids.begin(), ids.end());
  EXPECT_EQ(set.size(), ids.size());
  for (const char* id : {"deformed_fredkin", "fredkin", "ffd", "min:Ia", "min:Va", "ext:I", "ext:V", "tilde:I",
                         "tilde:IV:split"}) {
    EXPECT_EQ(set.count(id), 1u) << id;
  }
}

TEST(Catalog, UnknownModel) {
  EXPECT_THROW(get_model("min:VI"), UnknownModel);
  EXPECT_THROW(get_model("ising(2)"), UnknownModel);
}

TEST(Catalog, FredkinShorthandBindsT) {
  auto e = get_model("deformed_fredkin(1)");
  EXPECT_TRUE(model_params(e.spec).empty());
  EXPECT_EQ(model_density(e.spec), model_density(get_model("fredkin").spec));
}

TEST(Catalog, SplitFormsAgreeOnRings) {
  for (const std::string x : {"IV", "V"}) {
    Model a = get_model("tilde:" + x).spec, b = get_model("tilde:" + x + ":split").spec;
    EXPECT_EQ(instantiate(a, 10), instantiate(b, 10)) << x;
  }
}

TEST(Catalog, StatedExpectationsHold) {
  // min:IIIa states a graph implication that its true anticommutation graph does not give.
  for (const auto& e : catalog()) {
    if (e.expected.verdict.empty() && e.expected.graph.empty()) continue;
    EntryCheck r = check_entry(e);
    if (e.id == "min:IIIa") {
      ASSERT_EQ(r.mismatches.size(), 1u);
      EXPECT_EQ(r.mismatches[0].rfind("graph ", 0), 0u);
    } else {
      EXPECT_TRUE(r.ok()) << e.id << ": " << (r.mismatches.empty() ? "" : r.mismatches[0]);
    }
  }
}

TEST(Catalog, ReproductionCounts) {
  auto r = reproduce_all();
  EXPECT_EQ(r.table1_integrable, 7);
  EXPECT_EQ(r.table1_nonintegrable, 3);
  EXPECT_EQ(r.table2_integrable, 1);
  EXPECT_EQ(r.table2_nonintegrable, 4);
  ASSERT_EQ(r.charges.size(), 4u);
  for (const auto& c : r.charges) EXPECT_TRUE(c.conserved) << c.density << " at " << c.n_sites;
}

TEST(Catalog, ExtThreeLocusGainsCharge) {
  auto e = get_model("ext:III");
  auto h = nearest_neighbor_form(e.spec);
  auto cert = hokkyo_test(h);
  auto extras = locus_extras(h, cert.excluded_loci);
  ASSERT_EQ(extras.size(), 1u);
  EXPECT_NE(std::find(extras[0].gained.begin(), extras[0].gained.end(), parse_word("(IZ)(ZI)")), extras[0].gained.end());
}
