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

#include <utility>
#include <vector>

#include "cohiggs/errors.hpp"
#include "cohiggs/higgs.hpp"

using namespace cohiggs;

namespace {

// A concrete 2x2 field on O + O used across several cases:
//   phi = [ z^2  1 ]
//         [ z    0 ]
HiggsField sample_field() {
  HiggsField h = zero_higgs(make_splitting({0, 0}));
  h.at(0, 0) = make_section(2, {0, 0, 1});
  h.at(0, 1) = make_section(2, {1, 0, 0});
  h.at(1, 0) = make_section(2, {0, 1, 0});
  validate_higgs(h);
  return h;
}

}  // namespace

TEST_CASE("splitting types sort on construction") {
  CHECK(make_splitting({-1, 2, 0}) == SplittingType{2, 0, -1});
  CHECK(splitting_rank({2, 0, -1}) == 3);
  CHECK(splitting_degree({2, 0, -1}) == 1);
  CHECK_THROWS_AS(make_splitting({}), InputError);
}

TEST_CASE("admissibility is the sorted-gap criterion") {
  CHECK(admissible_report({0, -1}).admissible);
  CHECK(admissible_report({5}).admissible);
  CHECK(admissible_report({2, 0}).admissible);  // gap exactly 2
  CHECK(admissible_report({1, 0, -2}).admissible);

  const auto bad = admissible_report(make_splitting({3, 0}));
  CHECK_FALSE(bad.admissible);
  REQUIRE(bad.first_violated_gap.has_value());
  CHECK(*bad.first_violated_gap == std::pair<int, int>{3, 0});

  const auto bad2 = admissible_report(make_splitting({0, 0, -3}));
  REQUIRE(bad2.first_violated_gap.has_value());
  CHECK(*bad2.first_violated_gap == std::pair<int, int>{0, -3});

  CHECK(admits_semistable({1, 0, -1, -2}));
  CHECK_FALSE(admits_semistable({4, 1}));
}

TEST_CASE("canonical stable field: shape and characteristic coefficients") {
  // Rank 2 on O + O(-1): subdiagonal 1, corner z.
  const HiggsField h2 = canonical_stable_higgs({0, -1});
  CHECK(h2.at(1, 0) == constant_section(1, 1));
  CHECK(h2.at(0, 1) == monomial_section(3, 1));
  CHECK(is_zero(h2.at(0, 0)));
  CHECK(is_zero(h2.at(1, 1)));
  const CharCoeffs c2 = char_coeffs(h2);
  CHECK(c2.rho[0] == zero_section(2));
  CHECK(c2.rho[1] == monomial_section(4, 1));

  // Rank 3: coefficients (0, 0, z).
  const CharCoeffs c3 = char_coeffs(canonical_stable_higgs({1, 0, -2}));
  CHECK(c3.rho[0] == zero_section(2));
  CHECK(c3.rho[1] == zero_section(4));
  CHECK(c3.rho[2] == monomial_section(6, 1));

  // Rank 1 degenerates to multiplication by z.
  const HiggsField h1 = canonical_stable_higgs({3});
  CHECK(h1.at(0, 0) == monomial_section(2, 1));
  CHECK(char_coeffs(h1).rho[0] == monomial_section(2, 1));

  CHECK_THROWS_AS(canonical_stable_higgs({3, 0}), InputError);
}

TEST_CASE("characteristic coefficient sign convention at rank 2") {
  // det(eta I - phi) = eta^2 - rho_1 eta - rho_2 with rho_1 = tr phi and
  // rho_2 = -det phi = bc - ad.
  const HiggsField h = sample_field();
  const CharCoeffs c = char_coeffs(h);
  CHECK(c.rho[0] == make_section(2, {0, 0, 1}));          // z^2
  CHECK(c.rho[1] == make_section(4, {0, 1, 0, 0, 0}));    // 1*z - z^2*0 = z
}

TEST_CASE("validation rejects a broken twist grid") {
  HiggsField h = zero_higgs(make_splitting({0, -1}));
  h.at(0, 1).twist = 2;  // should be 3
  h.at(0, 1).c = {0, 0, 1};
  CHECK_THROWS_AS(validate_higgs(h), InputError);
}

TEST_CASE("conjugation preserves characteristic coefficients") {
  const HiggsField phi = sample_field();
  Automorphism psi = identity_automorphism(phi.m);
  psi.at(0, 1) = constant_section(0, 3);
  validate_automorphism(psi);
  CHECK(automorphism_det(psi) == 1);

  const HiggsField conj = conjugate(phi, psi);
  CHECK_FALSE(conj == phi);
  CHECK(char_coeffs(conj) == char_coeffs(phi));

  // Conjugating back with the exact inverse recovers phi.
  CHECK(conjugate(conj, automorphism_inverse(psi)) == phi);

  // A non-invertible automorphism is rejected.
  Automorphism sing = identity_automorphism(phi.m);
  sing.at(1, 1) = zero_section(0);
  CHECK(automorphism_det(sing) == 0);
  CHECK_THROWS_AS(automorphism_inverse(sing), InputError);
}

TEST_CASE("automorphisms on unbalanced splittings are upper triangular") {
  // On O + O(-1) the (1, 0) slot has twist -1 and carries only zero, while
  // the (0, 1) slot is an honest linear form.
  Automorphism psi = identity_automorphism(make_splitting({0, -1}));
  psi.at(0, 1) = make_section(1, {3, 1});
  psi.at(1, 1) = constant_section(0, 2);
  validate_automorphism(psi);
  CHECK(automorphism_det(psi) == 2);
  const Automorphism inv = automorphism_inverse(psi);
  const HiggsField phi = canonical_stable_higgs({0, -1});
  CHECK(conjugate(conjugate(phi, psi), inv) == phi);
}

TEST_CASE("trace splitting") {
  const HiggsField phi = sample_field();
  const auto [tr, traceless] = trace_split(phi);
  CHECK(tr == char_coeffs(phi).rho[0]);
  CHECK(is_zero(char_coeffs(traceless).rho[0]));
  // Diagonal entries of the traceless part: a - tr/2 and d - tr/2.
  CHECK(traceless.at(0, 0) ==
        section_sub(phi.at(0, 0), section_scale(tr, Rational(1) / 2)));
}

TEST_CASE("twisting the bundle shifts the splitting and nothing else") {
  const HiggsField phi = sample_field();
  const HiggsField shifted = twist_bundle(phi, 5);
  CHECK(shifted.m == SplittingType{5, 5});
  CHECK(shifted.e == phi.e);
  CHECK(char_coeffs(shifted) == char_coeffs(phi));
}

TEST_CASE("rank-2 spectral smoothness is squarefreeness of rho_2") {
  CharCoeffs c;
  c.rho = {zero_section(2), make_section(4, {-1, 0, 0, 0, 1})};  // z^4 - 1
  CHECK(spectral_smooth_r2(c));

  c.rho[1] = make_section(4, {0, 0, 1, 0, 0});  // z^2: double roots 0, inf
  CHECK_FALSE(spectral_smooth_r2(c));

  c.rho[1] = zero_section(4);  // nilpotent cone
  CHECK_FALSE(spectral_smooth_r2(c));

  // The canonical rank-2 field has rho_2 = z, which as a section of O(4)
  // has a triple zero at infinity.
  c.rho[1] = monomial_section(4, 1);
  CHECK_FALSE(spectral_smooth_r2(c));

  c.rho[0] = constant_section(2, 1);
  CHECK_THROWS_AS(spectral_smooth_r2(c), InputError);  // needs rho_1 = 0
}
