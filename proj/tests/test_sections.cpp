// Copyright 2026 The cohiggs Authors.
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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cohiggs/errors.hpp"
#include "cohiggs/section.hpp"

using namespace cohiggs;

TEST_CASE("section constructors enforce the coefficient-length invariant") {
  CHECK(make_section(2, {1, 0, 3}).twist == 2);
  CHECK_THROWS_AS(make_section(2, {1, 0}), InputError);
  CHECK_THROWS_AS(make_section(-1, {1}), InputError);
  CHECK(zero_section(-3).c.empty());
  CHECK(is_zero(zero_section(-3)));
  CHECK(is_zero(zero_section(4)));
  CHECK(constant_section(3, 5).c == std::vector<Rational>{5, 0, 0, 0});
  CHECK(monomial_section(2, 2).c == std::vector<Rational>{0, 0, 1});
  CHECK_THROWS_AS(monomial_section(1, 2), InputError);
}

TEST_CASE("u0 degree, vanishing order at infinity, chart reversal") {
  const Section s = make_section(3, {0, 1, 0, 0});  // z as a section of O(3)
  CHECK(u0_degree(s) == 1);
  CHECK(mult_at_infinity(s) == 2);
  CHECK(u1_coeffs(s) == std::vector<Rational>{0, 0, 1, 0});
  CHECK(u0_degree(zero_section(2)) == -1);

  // Reversal is an involution: reversing the U1 list recovers the U0 list.
  const Section t = make_section(2, {Rational(1) / 2, 0, -3});
  std::vector<Rational> u1 = u1_coeffs(t);
  std::reverse(u1.begin(), u1.end());
  CHECK(u1 == t.c);
}

TEST_CASE("section arithmetic is exact and twist-checked") {
  const Section f = make_section(1, {1, 1});    // 1 + z
  const Section g = make_section(1, {1, -1});   // 1 - z
  CHECK(section_mul(f, g) == make_section(2, {1, 0, -1}));
  CHECK(section_add(f, g) == make_section(1, {2, 0}));
  CHECK(section_sub(f, f) == zero_section(1));
  CHECK(section_neg(f) == make_section(1, {-1, -1}));
  CHECK(section_scale(f, Rational(1) / 3) ==
        make_section(1, {Rational(1) / 3, Rational(1) / 3}));
  CHECK_THROWS_AS(section_add(f, make_section(2, {1, 0, 0})), InputError);
  // Multiplying by a negative-twist (hence zero) section lands in the
  // correct twist.
  CHECK(section_mul(f, zero_section(-2)) == zero_section(-1));
}

TEST_CASE("evaluation in both charts") {
  const Section s = make_section(2, {3, 0, 1});  // 3 + z^2
  CHECK(evaluate(s, proj_finite(2)) == 7);
  CHECK(evaluate(s, proj_finite(Rational(-1) / 2)) == Rational(13) / 4);
  // At infinity the value is the U1-chart fiber coordinate: the top
  // coefficient.
  CHECK(evaluate(s, proj_infinity()) == 1);
  const Section v = make_section(3, {0, 1, 0, 0});
  CHECK(evaluate(v, proj_infinity()) == 0);  // vanishes at infinity
  CHECK(evaluate(v, proj_finite(5)) == 5);
}

TEST_CASE("projective points canonicalize and round-trip through strings") {
  CHECK(proj_point(2, 4) == proj_finite(Rational(1) / 2));
  CHECK(proj_point(3, 0) == proj_infinity());
  CHECK_THROWS_AS(proj_point(0, 0), InputError);
  CHECK(to_string(proj_finite(Rational(-1) / 2)) == "[-1/2:1]");
  CHECK(to_string(proj_infinity()) == "[1:0]");
  CHECK(parse_proj_point("[0:1]") == proj_finite(0));
  CHECK(parse_proj_point("[1:0]") == proj_infinity());
  CHECK(parse_proj_point(to_string(proj_finite(Rational(22) / 7))) ==
        proj_finite(Rational(22) / 7));
  CHECK_THROWS_AS(parse_proj_point("[0:0]"), InputError);
  CHECK_THROWS_AS(parse_proj_point("nonsense"), InputError);
}

TEST_CASE("the unique zero of a linear section") {
  CHECK(zero_of_linear(make_section(1, {0, 1})) == proj_finite(0));    // z
  CHECK(zero_of_linear(make_section(1, {-3, 2})) ==
        proj_finite(Rational(3) / 2));                                  // 2z-3
  CHECK(zero_of_linear(make_section(1, {1, 0})) == proj_infinity());   // 1
  CHECK_THROWS_AS(zero_of_linear(zero_section(1)), InputError);
  CHECK_THROWS_AS(zero_of_linear(make_section(2, {1, 0, 0})), InputError);
}

TEST_CASE("squarefree detection counts distinct projective zeros") {
  // z^2 - 1: two distinct finite roots; twist 2 => squarefree.
  auto info = squarefree_info(make_section(2, {-1, 0, 1}));
  CHECK(info.distinct_root_count == 2);
  CHECK(info.is_squarefree);

  // (z - 1)^2: one distinct root.
  info = squarefree_info(make_section(2, {1, -2, 1}));
  CHECK(info.distinct_root_count == 1);
  CHECK_FALSE(info.is_squarefree);

  // z in O(2): roots 0 and infinity, both simple.
  info = squarefree_info(make_section(2, {0, 1, 0}));
  CHECK(info.distinct_root_count == 2);
  CHECK(info.is_squarefree);

  // z in O(3): infinity is a double root.
  info = squarefree_info(make_section(3, {0, 1, 0, 0}));
  CHECK(info.distinct_root_count == 2);
  CHECK_FALSE(info.is_squarefree);

  // Nonzero constants have no zeros; twist 0 makes that squarefree.
  info = squarefree_info(constant_section(0, 7));
  CHECK(info.distinct_root_count == 0);
  CHECK(info.is_squarefree);

  // A quartic with four distinct roots: z^4 - 1 has roots 1, -1 and a
  // conjugate quadratic pair.
  info = squarefree_info(make_section(4, {-1, 0, 0, 0, 1}));
  CHECK(info.distinct_root_count == 4);
  CHECK(info.is_squarefree);

  CHECK_THROWS_AS(squarefree_info(zero_section(2)), InputError);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3) / 4);
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(to_string(Rational(-8) / 6) == "-4/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational(to_string(Rational(-22) / 7)) == Rational(-22) / 7);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}
