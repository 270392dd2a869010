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

#include <random>

#include "chainint/coefficient.hpp"
#include "chainint/polynomial.hpp"

using namespace chainint;

namespace {

GaussRational q(long n, long d = 1) { return GaussRational(mpq_class(n, d)); }

GaussRational eval(const Coefficient& c, const std::map<int, GaussRational>& pt) {
  return c.numerator().substitute(pt).constant_value() / c.denominator().substitute(pt).constant_value();
}

}  // namespace

TEST(GaussRational, FieldOperations) {
  GaussRational a(mpq_class(1, 2), mpq_class(-3)), b(mpq_class(2), mpq_class(5, 7));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a, GaussRational());
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), q(-1));
  EXPECT_EQ(a.times_i_power(4), a);
  EXPECT_EQ(a.times_i_power(1), a * GaussRational::i());
  EXPECT_EQ(a.conj().conj(), a);
}

TEST(Coefficient, ParsesExpressions) {
  Coefficient c = parse_coefficient("(c1+c2)^2 - 2*c1*c2");
  EXPECT_EQ(c, parse_coefficient("c1^2 + c2^2"));
  EXPECT_EQ(parse_coefficient("0.25"), parse_coefficient("1/4"));
  EXPECT_EQ(parse_coefficient("-i*t").times_i_power(1), parse_coefficient("t"));
  EXPECT_TRUE(parse_coefficient("c1-c1").is_zero());
}

TEST(Coefficient, RejectsMalformedText) {
  EXPECT_THROW(parse_coefficient("c1 +"), ParseError);
  EXPECT_THROW(parse_coefficient("(t"), ParseError);
  EXPECT_THROW(parse_coefficient("2 $ t"), ParseError);
}

TEST(Coefficient, FractionsNormalize) {
  Coefficient t = Coefficient::variable("t");
  Coefficient f = (t * t - Coefficient(1)) / (t - Coefficient(1));
  EXPECT_EQ(f, t + Coefficient(1));
  EXPECT_TRUE(f.is_polynomial());
  Coefficient g = Coefficient(1) / t;
  EXPECT_FALSE(g.is_polynomial());
  EXPECT_EQ(g * t, Coefficient(1));
  EXPECT_THROW(t / Coefficient(), std::domain_error);
}

TEST(Coefficient, AgreesWithPointEvaluation) {
  std::mt19937_64 rng(11);
  const char* pool[] = {"c1", "c2", "c1+2*c2", "3*c1^2-c2", "i*c1*c2", "1/(c1+1)", "c2/(c1-c2)", "7/3"};
  int v1 = var_index("c1"), v2 = var_index("c2");
  for (int n = 0; n < 200; ++n) {
    Coefficient a = parse_coefficient(pool[rng() % 8]), b = parse_coefficient(pool[rng() % 8]);
    std::map<int, GaussRational> pt = {{v1, q(static_cast<long>(rng() % 9) + 2, 3)},
                                       {v2, q(-static_cast<long>(rng() % 7) - 5, 2)}};
    EXPECT_EQ(eval(a + b, pt), eval(a, pt) + eval(b, pt));
    EXPECT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
    if (!b.is_zero()) {
      EXPECT_EQ(eval(a / b, pt), eval(a, pt) / eval(b, pt));
    }
  }
}

TEST(Polynomial, GcdAndFactors) {
  Polynomial x = Polynomial::variable("c1"), y = Polynomial::variable("c2");
  Polynomial a = (x + y) * (x - y), b = (x + y) * (x + y);
  EXPECT_EQ(Polynomial::gcd(a, b).primitive_integer(), (x + y).primitive_integer());
  auto fs = factor_polynomial(a * x);
  std::set<std::string> names;
  for (const auto& [f, m] : fs) names.insert(f.primitive_integer().to_string());
  EXPECT_TRUE(names.count((x + y).primitive_integer().to_string()) == 1);
  EXPECT_TRUE(names.count((x - y).primitive_integer().to_string()) == 1);
  auto q1 = Polynomial::divide_exact(a, x - y);
  ASSERT_TRUE(q1.has_value());
  EXPECT_EQ(*q1, x + y);
  EXPECT_FALSE(Polynomial::divide_exact(a, x).has_value());
}

TEST(Polynomial, RationalRoots) {
  Polynomial t = Polynomial::variable("t");
  Polynomial p = (t.scaled(q(2)) - Polynomial(1)) * (t + Polynomial(3));
  auto roots = detail::rational_roots(p, var_index("t"));
  std::set<mpq_class> rs(roots.begin(), roots.end());
  EXPECT_EQ(rs, (std::set<mpq_class>{mpq_class(1, 2), mpq_class(-3)}));
}
