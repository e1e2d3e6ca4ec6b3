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

#ifndef COHIGGS_FFQ_HPP_
#define COHIGGS_FFQ_HPP_

#include <cstdint>
#include <vector>

#include "cohiggs/errors.hpp"
#include "cohiggs/rational.hpp"

namespace cohiggs {

// Arithmetic in the field with p elements, p prime.  Elements are canonical
// residues in [0, p).
struct PrimeField {
  using Elem = uint32_t;
  uint32_t p;

  explicit PrimeField(uint32_t prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<Elem>(m);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, uint64_t e) const;
};

// Exact rational arithmetic presented through the same interface, so the
// stability checkers can be instantiated over either field.
struct RatField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    ensure(a != 0, "RatField::inv of zero");
    return 1 / a;
  }
};

// Smallest primitive root modulo p (generator of the multiplicative group).
uint32_t primitive_root(uint32_t p);

// A section of O(fdeg) in coordinates: polynomial coefficients ascending,
// exactly max(0, fdeg + 1) of them.  fdeg < 0 means the zero space.
// Mirrors Section, but over an arbitrary coefficient field.
template <class F>
struct FormT {
  int fdeg = -1;
  std::vector<typename F::Elem> c;

  bool operator==(const FormT&) const = default;
};

template <class F>
FormT<F> form_zero(const F& f, int fdeg) {
  FormT<F> r;
  r.fdeg = fdeg;
  if (fdeg >= 0) r.c.assign(static_cast<size_t>(fdeg) + 1, f.zero());
  return r;
}

template <class F>
bool form_is_zero(const F& f, const FormT<F>& a) {
  for (const auto& x : a.c)
    if (!f.is_zero(x)) return false;
  return true;
}

// Degree of the polynomial part; -1 if zero.
template <class F>
int form_poly_deg(const F& f, const FormT<F>& a) {
  for (int i = static_cast<int>(a.c.size()) - 1; i >= 0; --i)
    if (!f.is_zero(a.c[static_cast<size_t>(i)])) return i;
  return -1;
}

template <class F>
FormT<F> form_add(const F& f, const FormT<F>& a, const FormT<F>& b) {
  ensure(a.fdeg == b.fdeg, "form_add: mismatched formal degrees");
  FormT<F> r = a;
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.add(r.c[i], b.c[i]);
  return r;
}

template <class F>
FormT<F> form_scale(const F& f, const typename F::Elem& s, const FormT<F>& a) {
  FormT<F> r = a;
  for (auto& x : r.c) x = f.mul(s, x);
  return r;
}

template <class F>
FormT<F> form_mul(const F& f, const FormT<F>& a, const FormT<F>& b) {
  FormT<F> r = form_zero(f, a.fdeg + b.fdeg);
  if (form_is_zero(f, a) || form_is_zero(f, b)) return r;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return r;
}

// --- plain polynomial helpers on coefficient vectors (ascending) ---

template <class F>
int pvec_deg(const F& f, const std::vector<typename F::Elem>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!f.is_zero(a[static_cast<size_t>(i)])) return i;
  return -1;
}

template <class F>
void pvec_trim(const F& f, std::vector<typename F::Elem>* a) {
  while (!a->empty() && f.is_zero(a->back())) a->pop_back();
}

// Remainder of a by b (b nonzero).
template <class F>
std::vector<typename F::Elem> pvec_rem(const F& f,
                                       std::vector<typename F::Elem> a,
                                       const std::vector<typename F::Elem>& b) {
  const int db = pvec_deg(f, b);
  ensure(db >= 0, "pvec_rem: division by zero polynomial");
  const auto lead_inv = f.inv(b[static_cast<size_t>(db)]);
  pvec_trim(f, &a);
  while (pvec_deg(f, a) >= db) {
    const int da = pvec_deg(f, a);
    const auto q = f.mul(a[static_cast<size_t>(da)], lead_inv);
    for (int i = 0; i <= db; ++i) {
      auto& tgt = a[static_cast<size_t>(da - db + i)];
      tgt = f.sub(tgt, f.mul(q, b[static_cast<size_t>(i)]));
    }
    pvec_trim(f, &a);
  }
  return a;
}

// Monic gcd; zero inputs are neutral.  Returns {} for gcd(0, 0).
template <class F>
std::vector<typename F::Elem> pvec_gcd(const F& f,
                                       std::vector<typename F::Elem> a,
                                       std::vector<typename F::Elem> b) {
  pvec_trim(f, &a);
  pvec_trim(f, &b);
  while (!b.empty()) {
    auto r = pvec_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto s = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, s);
  }
  return a;
}

// Exact quotient a / b; requires b | a.
template <class F>
std::vector<typename F::Elem> pvec_div_exact(
    const F& f, std::vector<typename F::Elem> a,
    const std::vector<typename F::Elem>& b) {
  const int db = pvec_deg(f, b);
  ensure(db >= 0, "pvec_div_exact: division by zero polynomial");
  pvec_trim(f, &a);
  const int da = pvec_deg(f, a);
  if (da < 0) return {};
  ensure(da >= db, "pvec_div_exact: not divisible (degree)");
  std::vector<typename F::Elem> q(static_cast<size_t>(da - db) + 1, f.zero());
  const auto lead_inv = f.inv(b[static_cast<size_t>(db)]);
  for (int k = da - db; k >= 0; --k) {
    const int cur = pvec_deg(f, a);
    if (cur < db + k) continue;
    ensure(cur == db + k, "pvec_div_exact: not divisible");
    const auto qc = f.mul(a[static_cast<size_t>(cur)], lead_inv);
    q[static_cast<size_t>(k)] = qc;
    for (int i = 0; i <= db; ++i) {
      auto& tgt = a[static_cast<size_t>(k + i)];
      tgt = f.sub(tgt, f.mul(qc, b[static_cast<size_t>(i)]));
    }
    pvec_trim(f, &a);
  }
  ensure(pvec_deg(f, a) < 0, "pvec_div_exact: nonzero remainder");
  return q;
}

// Greatest common divisor (as an effective divisor on the line, including the
// point at infinity) of a family of forms; zero forms are neutral.  Returns
// the divisor degree: deg gcd(poly parts) + min multiplicity at infinity.
// All forms zero => -1.
template <class F>
int common_divisor_degree(const F& f, const std::vector<FormT<F>>& forms,
                          std::vector<typename F::Elem>* gcd_poly_out) {
  std::vector<typename F::Elem> g;
  int inf = -1;
  bool any = false;
  for (const auto& fm : forms) {
    if (form_is_zero(f, fm)) continue;
    any = true;
    std::vector<typename F::Elem> poly = fm.c;
    pvec_trim(f, &poly);
    g = pvec_gcd(f, g, poly);
    const int m = fm.fdeg - form_poly_deg(f, fm);
    inf = (inf < 0) ? m : std::min(inf, m);
  }
  if (!any) return -1;
  if (gcd_poly_out) *gcd_poly_out = g;
  return pvec_deg(f, g) + inf;
}

}  // namespace cohiggs

#endif  // COHIGGS_FFQ_HPP_
