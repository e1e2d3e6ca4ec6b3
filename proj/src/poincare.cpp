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

#include "cohiggs/poincare.hpp"

#include <cstdlib>

#include "cohiggs/errors.hpp"

namespace cohiggs {

PolyZ poly_trim(PolyZ p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  return p;
}

PolyZ poly_add(const PolyZ& a, const PolyZ& b) {
  PolyZ r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return poly_trim(std::move(r));
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ{};
  PolyZ r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return poly_trim(std::move(r));
}

PolyZ poly_shift(const PolyZ& a, int k) {
  require(k >= 0, "poly_shift: negative exponent");
  if (a.is_zero()) return PolyZ{};
  PolyZ r;
  r.c.assign(static_cast<size_t>(k), 0);
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return poly_trim(std::move(r));
}

PolyZ geometric_poly(int k) {
  require(k >= 0, "geometric_poly: negative top exponent");
  PolyZ r;
  r.c.assign(static_cast<size_t>(k) + 1, 1);
  return r;
}

PolyZ substitute_square(const PolyZ& a) {
  PolyZ r;
  r.c.assign(a.c.empty() ? 0 : 2 * a.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[2 * i] = a.c[i];
  return poly_trim(std::move(r));
}

Int poly_eval_int(const PolyZ& a, const Int& x) {
  Int acc = 0;
  for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
  return acc;
}

std::string poly_to_string(const PolyZ& a, const std::string& var) {
  const PolyZ p = poly_trim(a);
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < p.c.size(); ++k) {
    long long ck = p.c[k];
    if (ck == 0) continue;
    if (first) {
      if (ck < 0) out += "-";
    } else {
      out += (ck < 0) ? " - " : " + ";
    }
    first = false;
    const long long mag = std::llabs(ck);
    if (k == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace cohiggs
