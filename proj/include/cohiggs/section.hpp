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

#ifndef COHIGGS_SECTION_HPP_
#define COHIGGS_SECTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cohiggs/polyq.hpp"
#include "cohiggs/rational.hpp"

namespace cohiggs {

// A global section of O(n) on the projective line, stored exactly by its
// chart-U0 coefficients (1, z, ..., z^n).  The chart-U1 representation is the
// reversed coefficient list, obtained on demand and never cached: for a
// section s of O(n), s~(z~) = z~^n * s(1/z~).
//
// For n < 0 the only section is zero, stored as an empty coefficient list.
struct Section {
  int twist = 0;
  std::vector<Rational> c;  // size == max(0, twist + 1)

  bool operator==(const Section& o) const = default;
};

// A point of the projective line as a canonical homogeneous pair [u : v]:
// either [u : 1] (the finite point z = u) or [1 : 0] (infinity).
struct ProjPoint {
  Rational u = 0;
  bool infinite = false;

  bool operator==(const ProjPoint& o) const {
    return infinite == o.infinite && (infinite || u == o.u);
  }
};

ProjPoint proj_finite(const Rational& z);
ProjPoint proj_infinity();
// Canonicalizes an arbitrary homogeneous pair (not both zero).
ProjPoint proj_point(const Rational& u, const Rational& v);
std::string to_string(const ProjPoint& p);
ProjPoint parse_proj_point(const std::string& text);

// Constructors.  All validate the coefficient-length invariant.
Section make_section(int twist, std::vector<Rational> coeffs);
Section zero_section(int twist);
Section constant_section(int twist, const Rational& value);  // value * z^0
Section monomial_section(int twist, int k);                  // z^k

bool is_zero(const Section& s);
// Degree of the U0 polynomial (-1 for the zero section).
int u0_degree(const Section& s);
// Order of vanishing at infinity = twist - u0_degree (nonzero sections only).
int mult_at_infinity(const Section& s);
// U1 coefficient list (the reversal); an involution.
std::vector<Rational> u1_coeffs(const Section& s);

Section section_add(const Section& lhs, const Section& rhs);
Section section_sub(const Section& lhs, const Section& rhs);
Section section_mul(const Section& lhs, const Section& rhs);
Section section_scale(const Section& s, const Rational& k);
Section section_neg(const Section& s);

// Fiber value in the chart determined by p: U0 coefficients evaluated at z
// for finite p, the U1 representation evaluated at z~ = 0 for p infinite.
Rational evaluate(const Section& s, const ProjPoint& p);

// The unique projective zero of a nonzero section of O(1):
// c0 + c1 z  |->  [-c0 : c1].
ProjPoint zero_of_linear(const Section& c);

struct SquarefreeInfo {
  int distinct_root_count = 0;  // distinct projective zeros, infinity included
  bool is_squarefree = false;   // true iff the count equals the twist
};

// Repeated-root detection over the projective line for a nonzero section:
// gcd of the U0 polynomial with its derivative, plus the explicit
// multiplicity-at-infinity rule mult_inf = twist - deg_{U0}(s).  No root
// extraction is performed; the count is of distinct zeros over the closure.
SquarefreeInfo squarefree_info(const Section& s);

}  // namespace cohiggs

#endif  // COHIGGS_SECTION_HPP_
