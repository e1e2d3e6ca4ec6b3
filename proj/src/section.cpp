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

#include "cohiggs/section.hpp"

#include <algorithm>
#include <cstddef>

#include "cohiggs/errors.hpp"

namespace cohiggs {

// ---------------------------------------------------------------------------
// Rational parsing.

Rational parse_rational(const std::string& text) {
  require(!text.empty(), "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    require(den != 0, "rational literal with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational literal: " + text);
  }
}

// ---------------------------------------------------------------------------
// Dense rational polynomials (chart-U0 coefficient lists).

int poly_deg(const PolyQ& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

bool poly_is_zero(const PolyQ& p) { return poly_deg(p) < 0; }

PolyQ poly_trim(PolyQ p) {
  p.resize(static_cast<size_t>(poly_deg(p) + 1));
  return p;
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

PolyQ poly_scale(const PolyQ& a, const Rational& s) {
  PolyQ r = a;
  for (auto& x : r) x *= s;
  return r;
}

PolyQ poly_derivative(const PolyQ& a) {
  if (a.size() <= 1) return {};
  PolyQ r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(i);
  return r;
}

Rational poly_eval(const PolyQ& a, const Rational& z) {
  Rational acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

PolyQ poly_rem(const PolyQ& a, const PolyQ& b) {
  int db = poly_deg(b);
  ensure(db >= 0, "polynomial remainder by zero");
  PolyQ r = poly_trim(a);
  const Rational lead = b[static_cast<size_t>(db)];
  while (poly_deg(r) >= db) {
    int dr = poly_deg(r);
    Rational f = r[static_cast<size_t>(dr)] / lead;
    for (int i = 0; i <= db; ++i)
      r[static_cast<size_t>(dr - db + i)] -= f * b[static_cast<size_t>(i)];
    r.resize(static_cast<size_t>(poly_deg(r) + 1));
  }
  return r;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!poly_is_zero(b)) {
    PolyQ r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

PolyQ poly_divided_difference(const PolyQ& a, const Rational& z0) {
  // Horner/synthetic division: a(z) = (z - z0) q(z) + a(z0).
  if (a.size() <= 1) return {};
  PolyQ q(a.size() - 1, Rational(0));
  Rational carry = a.back();
  for (size_t i = a.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = a[i] + carry * z0;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Projective points.

ProjPoint proj_finite(const Rational& z) { return ProjPoint{z, false}; }
ProjPoint proj_infinity() { return ProjPoint{0, true}; }

ProjPoint proj_point(const Rational& u, const Rational& v) {
  require(u != 0 || v != 0, "projective point [0:0] is not defined");
  if (v == 0) return proj_infinity();
  return proj_finite(u / v);
}

std::string to_string(const ProjPoint& p) {
  if (p.infinite) return "[1:0]";
  return "[" + to_string(p.u) + ":1]";
}

ProjPoint parse_proj_point(const std::string& text) {
  require(text.size() >= 5 && text.front() == '[' && text.back() == ']',
          "malformed projective point: " + text);
  std::string body = text.substr(1, text.size() - 2);
  auto colon = body.find(':');
  require(colon != std::string::npos, "malformed projective point: " + text);
  Rational u = parse_rational(body.substr(0, colon));
  Rational v = parse_rational(body.substr(colon + 1));
  return proj_point(u, v);
}

// ---------------------------------------------------------------------------
// Sections.

namespace {

size_t coeff_len(int twist) {
  return twist < 0 ? 0u : static_cast<size_t>(twist) + 1u;
}

}  // namespace

Section make_section(int twist, std::vector<Rational> coeffs) {
  require(coeffs.size() == coeff_len(twist),
          "section of O(" + std::to_string(twist) + ") needs " +
              std::to_string(coeff_len(twist)) + " coefficients, got " +
              std::to_string(coeffs.size()));
  return Section{twist, std::move(coeffs)};
}

Section zero_section(int twist) {
  return Section{twist, std::vector<Rational>(coeff_len(twist), Rational(0))};
}

Section constant_section(int twist, const Rational& value) {
  require(twist >= 0 || value == 0,
          "nonzero constant does not embed in negative twist");
  Section s = zero_section(twist);
  if (twist >= 0) s.c[0] = value;
  return s;
}

Section monomial_section(int twist, int k) {
  require(k >= 0 && k <= twist, "monomial degree outside twist range");
  Section s = zero_section(twist);
  s.c[static_cast<size_t>(k)] = 1;
  return s;
}

bool is_zero(const Section& s) {
  return std::all_of(s.c.begin(), s.c.end(),
                     [](const Rational& x) { return x == 0; });
}

int u0_degree(const Section& s) { return poly_deg(s.c); }

int mult_at_infinity(const Section& s) {
  require(!is_zero(s), "multiplicity at infinity of the zero section");
  return s.twist - u0_degree(s);
}

std::vector<Rational> u1_coeffs(const Section& s) {
  std::vector<Rational> r(s.c.rbegin(), s.c.rend());
  return r;
}

Section section_add(const Section& lhs, const Section& rhs) {
  require(lhs.twist == rhs.twist, "section add with mismatched twists");
  Section r = lhs;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += rhs.c[i];
  return r;
}

Section section_sub(const Section& lhs, const Section& rhs) {
  return section_add(lhs, section_neg(rhs));
}

Section section_mul(const Section& lhs, const Section& rhs) {
  int twist = lhs.twist + rhs.twist;
  Section r = zero_section(twist);
  if (lhs.c.empty() || rhs.c.empty()) return r;  // a zero factor
  for (size_t i = 0; i < lhs.c.size(); ++i) {
    if (lhs.c[i] == 0) continue;
    for (size_t j = 0; j < rhs.c.size(); ++j) r.c[i + j] += lhs.c[i] * rhs.c[j];
  }
  return r;
}

Section section_scale(const Section& s, const Rational& k) {
  Section r = s;
  for (auto& x : r.c) x *= k;
  return r;
}

Section section_neg(const Section& s) { return section_scale(s, Rational(-1)); }

Rational evaluate(const Section& s, const ProjPoint& p) {
  if (s.c.empty()) return 0;
  if (p.infinite) return s.c.back();  // U1 value at z~ = 0 is the top U0 coeff
  return poly_eval(s.c, p.u);
}

ProjPoint zero_of_linear(const Section& c) {
  require(c.twist == 1, "zero_of_linear requires a section of O(1)");
  require(!is_zero(c), "zero section has no unique zero");
  return proj_point(-c.c[0], c.c[1]);
}

SquarefreeInfo squarefree_info(const Section& s) {
  require(!is_zero(s), "squarefree_info of the zero section");
  const int deg = u0_degree(s);
  // Distinct finite roots of the U0 polynomial: deg s - deg gcd(s, s').
  PolyQ g = poly_gcd(s.c, poly_derivative(s.c));
  int distinct_finite = deg - poly_deg(g);
  const int inf_mult = s.twist - deg;
  SquarefreeInfo info;
  info.distinct_root_count = distinct_finite + (inf_mult >= 1 ? 1 : 0);
  info.is_squarefree = info.distinct_root_count == s.twist;
  return info;
}

}  // namespace cohiggs
