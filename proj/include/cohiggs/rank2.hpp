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

#ifndef COHIGGS_RANK2_HPP_
#define COHIGGS_RANK2_HPP_

#include <optional>

#include "cohiggs/higgs.hpp"
#include "cohiggs/section.hpp"

namespace cohiggs {

// Trace-free rank-2 Higgs fields come in three structured variants:
//   odd      (a b; c -a) on O + O(-1):   a in O(2), b in O(3), c in O(1)
//   even E11 (a b; c -a) on O(1)+O(-1):  a in O(2), b in O(4), c in O(0)
//   even E0  arbitrary trace-free 2x2 of O(2) sections on O + O
// All are plain HiggsField values; these constructors fix the splitting and
// the trace-free shape, and the shape validators below gate the operations.
HiggsField odd_higgs(const Section& a, const Section& b, const Section& c);
HiggsField even_e11_higgs(const Section& a, const Section& b,
                          const Section& c);
HiggsField even_e0_higgs(const Section& e00, const Section& e01,
                         const Section& e10);

void validate_odd(const HiggsField& phi);
void validate_even_e11(const HiggsField& phi);
void validate_even_e0(const HiggsField& phi);

// A point of the quasi-projective variety S: base point z0, fiber value y0
// of O(2) in the chart determined by z0 (U0 fiber coordinate when z0 is
// finite, U1 when z0 is infinite), and the five coefficients of rho in O(4).
// Membership is y0^2 = rho(z0), evaluated chart-consistently.
struct SPoint {
  ProjPoint z0;
  Rational y0 = 0;
  Section rho;  // twist 4

  bool operator==(const SPoint& o) const = default;
};

void validate_spoint(const SPoint& p);

// Stability on O + O(-1): c not identically zero.
bool is_stable_odd(const HiggsField& phi);

// phi |-> (z0, a(z0), -det phi) where z0 is the unique zero of c.
// Conjugation-invariant; the image satisfies the SPoint membership equation.
SPoint to_S(const HiggsField& phi);

// The representative Higgs field over an SPoint: a == y0 constant, c with
// unique zero z0, and b the exact divided difference (rho - rho(z0))/(z - z0)
// (mirrored in the U1 chart when z0 is infinite).  to_S(from_S(p)) = p.
HiggsField from_S(const SPoint& p);

// The two spectral lifts phi_+/phi_- over z0 collide iff y0 = 0
// (equivalently rho(z0) = 0: the spectral curve ramifies over z0).
bool plus_minus_collision(const SPoint& p);

// The Hitchin section on O(1) + O(-1): Q(rho) with a = 0, c = 1 and the
// (1,2) entry carrying rho so that -det Q(rho) = rho exactly.
HiggsField q_section(const Section& rho);

// Normal form on O(1) + O(-1) with c != 0: returns rho = a^2 + bc and
// executes the witness conjugation psi = (1, -a/c; 0, 1/c), checking that it
// carries phi exactly onto q_section(rho).
Section normalize_even_E11(const HiggsField& phi);

// Classification of trace-free fields on O + O: stable iff the coefficient
// matrices A0, A1, A2 of phi(z) admit no common eigenvector, decided by the
// gcd of the binary quadratic forms Q_i(v) = det[A_i v | v].  When the field
// is strictly semistable, the graded object diag(a, -a) is returned whenever
// the common eigenvector is rational; an eigenvector defined only over a
// quadratic extension leaves `graded` empty (the classification itself is
// still exact).
struct EvenE0Classification {
  bool stable = false;
  std::optional<Section> graded;          // eigenvalue section a in O(2)
  std::optional<ProjPoint> eigenvector;   // [v1 : v2] when rational
};
EvenE0Classification classify_even_E0(const HiggsField& phi);

// gcd of two sections viewed as effective divisors on the projective line:
// the result's twist equals the number of common zeros with multiplicity
// (roots at infinity included via the formal-degree convention); the zero
// section is neutral.  Returns the zero section of twist 0 iff both inputs
// are zero.
Section section_divisor_gcd(const Section& f, const Section& h);

// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

// Rational projective roots of a section (degree <= 2 supported exactly;
// higher degrees find linear-factor roots only where they split off over Q).
std::vector<ProjPoint> rational_roots_deg2(const Section& s);

}  // namespace cohiggs

#endif  // COHIGGS_RANK2_HPP_
