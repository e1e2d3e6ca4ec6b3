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

#ifndef COHIGGS_POLYQ_HPP_
#define COHIGGS_POLYQ_HPP_

#include <vector>

#include "cohiggs/rational.hpp"

namespace cohiggs {

// Dense univariate polynomials over the rationals, coefficients ascending
// (index k = coefficient of z^k).  The zero polynomial is any all-zero or
// empty list; degree convention deg(0) = -1.
using PolyQ = std::vector<Rational>;

int poly_deg(const PolyQ& p);
bool poly_is_zero(const PolyQ& p);
PolyQ poly_trim(PolyQ p);
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rational& s);
PolyQ poly_derivative(const PolyQ& a);
Rational poly_eval(const PolyQ& a, const Rational& z);

// Euclidean remainder of a by b (b nonzero).
PolyQ poly_rem(const PolyQ& a, const PolyQ& b);

// Monic gcd; gcd(0, 0) = 0, gcd(p, 0) = monic(p).
PolyQ poly_gcd(PolyQ a, PolyQ b);

// Exact quotient (a - a(z0)) / (z - z0) by synthetic division.
PolyQ poly_divided_difference(const PolyQ& a, const Rational& z0);

}  // namespace cohiggs

#endif  // COHIGGS_POLYQ_HPP_
