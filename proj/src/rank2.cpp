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

#include "cohiggs/rank2.hpp"

#include <algorithm>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

// Assembles (a b; c -a) on the given rank-2 splitting.
HiggsField trace_free_2(SplittingType m, const Section& a, const Section& b,
                        const Section& c) {
  HiggsField phi = zero_higgs(std::move(m));
  phi.at(0, 0) = a;
  phi.at(0, 1) = b;
  phi.at(1, 0) = c;
  phi.at(1, 1) = section_neg(a);
  validate_higgs(phi);
  return phi;
}

void validate_trace_free_2(const HiggsField& phi, const SplittingType& want,
                           const char* name) {
  validate_higgs(phi);
  require(phi.m == want, std::string(name) + ": wrong splitting");
  require(phi.at(1, 1) == section_neg(phi.at(0, 0)),
          std::string(name) + ": field is not trace-free");
}

}  // namespace

HiggsField odd_higgs(const Section& a, const Section& b, const Section& c) {
  require(a.twist == 2 && b.twist == 3 && c.twist == 1,
          "odd variant needs (a, b, c) in O(2), O(3), O(1)");
  return trace_free_2({0, -1}, a, b, c);
}

HiggsField even_e11_higgs(const Section& a, const Section& b,
                          const Section& c) {
  require(a.twist == 2 && b.twist == 4 && c.twist == 0,
          "even E11 variant needs (a, b, c) in O(2), O(4), O(0)");
  return trace_free_2({1, -1}, a, b, c);
}

HiggsField even_e0_higgs(const Section& e00, const Section& e01,
                         const Section& e10) {
  require(e00.twist == 2 && e01.twist == 2 && e10.twist == 2,
          "even E0 variant is a matrix of O(2) sections");
  return trace_free_2({0, 0}, e00, e01, e10);
}

void validate_odd(const HiggsField& phi) {
  validate_trace_free_2(phi, {0, -1}, "odd variant");
}

void validate_even_e11(const HiggsField& phi) {
  validate_trace_free_2(phi, {1, -1}, "even E11 variant");
}

void validate_even_e0(const HiggsField& phi) {
  validate_trace_free_2(phi, {0, 0}, "even E0 variant");
}

void validate_spoint(const SPoint& p) {
  require(p.rho.twist == 4, "SPoint rho must be a section of O(4)");
  require(p.y0 * p.y0 == evaluate(p.rho, p.z0),
          "SPoint membership y0^2 = rho(z0) violated");
}

bool is_stable_odd(const HiggsField& phi) {
  validate_odd(phi);
  return !is_zero(phi.at(1, 0));
}

SPoint to_S(const HiggsField& phi) {
  require(is_stable_odd(phi), "to_S requires a stable odd field (c != 0)");
  const Section& a = phi.at(0, 0);
  const Section& b = phi.at(0, 1);
  const Section& c = phi.at(1, 0);
  SPoint p;
  p.z0 = zero_of_linear(c);
  p.y0 = evaluate(a, p.z0);
  p.rho = section_add(section_mul(a, a), section_mul(b, c));  // -det phi
  validate_spoint(p);
  return p;
}

HiggsField from_S(const SPoint& p) {
  validate_spoint(p);
  if (!p.z0.infinite) {
    const Rational& z0 = p.z0.u;
    Section a = constant_section(2, p.y0);
    Section c = make_section(1, {-z0, 1});
    // b = (rho - rho(z0))/(z - z0), exact synthetic division in U0.
    PolyQ q = poly_divided_difference(p.rho.c, z0);
    q.resize(4, Rational(0));
    Section b = make_section(3, {q[0], q[1], q[2], q[3]});
    return odd_higgs(a, b, c);
  }
  // z0 at infinity: mirror the construction in the U1 chart and convert.
  // a~ == y0 reads back as a = y0 z^2; c~ = z~ reads back as c = 1; and
  // b~ = (rho~ - rho~(0))/z~ is a plain coefficient shift of the U1 list.
  Section a = make_section(2, {0, 0, p.y0});
  Section c = make_section(1, {1, 0});
  std::vector<Rational> rt = u1_coeffs(p.rho);  // (a4, a3, a2, a1, a0)
  std::vector<Rational> bu1 = {rt[1], rt[2], rt[3], rt[4]};
  std::reverse(bu1.begin(), bu1.end());
  Section b = make_section(3, std::move(bu1));
  HiggsField phi = odd_higgs(a, b, c);
  ensure(to_S(phi).rho == p.rho, "from_S at infinity must reproduce rho");
  return phi;
}

bool plus_minus_collision(const SPoint& p) {
  validate_spoint(p);
  return p.y0 == 0;
}

HiggsField q_section(const Section& rho) {
  require(rho.twist == 4, "q_section takes a section of O(4)");
  // The (1,2) entry carries +rho: with det(0, rho; 1, 0) = -rho this is the
  // unique sign for which -det Q(rho) = rho, i.e. char_coeffs = (0, rho).
  return even_e11_higgs(zero_section(2), rho, constant_section(0, 1));
}

Section normalize_even_E11(const HiggsField& phi) {
  validate_even_e11(phi);
  const Section& a = phi.at(0, 0);
  const Section& b = phi.at(0, 1);
  const Section& c = phi.at(1, 0);
  require(!is_zero(c), "c = 0 is destabilized by O(1); no normal form");
  const Rational c0 = c.c[0];
  Section rho = section_add(section_mul(a, a), section_mul(b, c));
  // Execute the witness conjugation psi = (1, -a/c; 0, 1/c) and check that
  // it lands exactly on the Hitchin-section representative.
  Automorphism psi;
  psi.m = {1, -1};
  psi.e = {constant_section(0, 1), section_scale(a, Rational(-1) / c0),
           zero_section(-2), constant_section(0, Rational(1) / c0)};
  validate_automorphism(psi);
  ensure(conjugate(phi, psi) == q_section(rho),
         "normal-form conjugation failed to reach q_section(rho)");
  return rho;
}

Section section_divisor_gcd(const Section& f, const Section& h) {
  if (is_zero(f) && is_zero(h)) return zero_section(0);
  if (is_zero(f)) {
    PolyQ g = poly_gcd(h.c, {});
    int inf = mult_at_infinity(h);
    g.resize(g.size() + static_cast<size_t>(inf), Rational(0));
    const int twist = static_cast<int>(g.size()) - 1;
    return make_section(twist, std::move(g));
  }
  if (is_zero(h)) return section_divisor_gcd(h, f);
  PolyQ g = poly_gcd(f.c, h.c);
  int inf = std::min(mult_at_infinity(f), mult_at_infinity(h));
  g.resize(g.size() + static_cast<size_t>(inf), Rational(0));
  const int twist = static_cast<int>(g.size()) - 1;
  return make_section(twist, std::move(g));
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rational(0);
  Int num = numerator(x), den = denominator(x);
  Int sn = boost::multiprecision::sqrt(num);
  Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::vector<ProjPoint> rational_roots_deg2(const Section& s) {
  require(!is_zero(s), "root finding on the zero section");
  const int deg = u0_degree(s);
  require(deg <= 2, "rational_roots_deg2 supports degree <= 2");
  std::vector<ProjPoint> roots;
  if (mult_at_infinity(s) >= 1) roots.push_back(proj_infinity());
  std::vector<Rational> finite;
  if (deg == 1) {
    finite.push_back(-s.c[0] / s.c[1]);
  } else if (deg == 2) {
    const Rational &c0 = s.c[0], &c1 = s.c[1], &c2 = s.c[2];
    Rational disc = c1 * c1 - 4 * c2 * c0;
    if (auto sd = rational_sqrt(disc)) {
      finite.push_back((-c1 + *sd) / (2 * c2));
      if (*sd != 0) finite.push_back((-c1 - *sd) / (2 * c2));
    }
  }
  std::sort(finite.begin(), finite.end());
  for (const auto& z : finite) roots.push_back(proj_finite(z));
  return roots;
}

EvenE0Classification classify_even_E0(const HiggsField& phi) {
  validate_even_e0(phi);
  // Coefficient matrices A_k of phi(z) = A0 + A1 z + A2 z^2, and the binary
  // quadratic forms Q_k(v) = det[A_k v | v] written on the basis
  // (v2^2, v1 v2, v1^2) so that a root "at infinity" is the eigenvector
  // (1, 0) -- the first-summand sub-line of O + O.
  std::vector<Section> forms;
  for (int k = 0; k <= 2; ++k) {
    auto coeff = [&](int i, int j) {
      return phi.at(i, j).c[static_cast<size_t>(k)];
    };
    forms.push_back(make_section(
        2, {coeff(0, 1), coeff(0, 0) - coeff(1, 1), -coeff(1, 0)}));
  }
  Section g = section_divisor_gcd(
      section_divisor_gcd(forms[0], forms[1]), forms[2]);
  EvenE0Classification out;
  if (!is_zero(g) && g.twist == 0) {
    out.stable = true;
    return out;
  }
  out.stable = false;
  if (is_zero(g)) {
    // All three forms vanish: trace-free scalar field, i.e. phi = 0.
    out.eigenvector = proj_infinity();
    out.graded = phi.at(0, 0);
    return out;
  }
  std::vector<ProjPoint> roots = rational_roots_deg2(g);
  if (roots.empty()) return out;  // eigenvector over a quadratic extension
  const ProjPoint v = roots.front();
  out.eigenvector = v;
  if (v.infinite) {
    // v = (1, 0): here phi(1,0)-entry... the (2,1) entry vanishes, and the
    // eigenvalue section is the (1,1) entry.
    ensure(is_zero(phi.at(1, 0)), "eigenvector (1,0) needs lower-left zero");
    out.graded = phi.at(0, 0);
  } else {
    // v = (t, 1): eigenvalue a = (A v)_2 = t * phi_21 + phi_22.
    out.graded = section_add(section_scale(phi.at(1, 0), v.u), phi.at(1, 1));
  }
  return out;
}

}  // namespace cohiggs
