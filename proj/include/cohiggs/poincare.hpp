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

#ifndef COHIGGS_POINCARE_HPP_
#define COHIGGS_POINCARE_HPP_

#include <string>
#include <vector>

#include "cohiggs/rational.hpp"

namespace cohiggs {

// Single-variable integer polynomial, coefficients ascending; used both for
// Poincare polynomials in x (index k = Betti number b_k) and for point-count
// polynomials in q.  Trailing zeros are trimmed so equality is syntactic.
struct PolyZ {
  std::vector<long long> c;

  bool operator==(const PolyZ& o) const = default;
  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[static_cast<size_t>(i)] != 0) return i;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size()))
               ? c[static_cast<size_t>(k)]
               : 0;
  }
};

PolyZ poly_trim(PolyZ p);
PolyZ poly_add(const PolyZ& a, const PolyZ& b);
PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
// Multiplication by x^k.
PolyZ poly_shift(const PolyZ& a, int k);
// 1 + x + ... + x^k  (k >= 0).
PolyZ geometric_poly(int k);
// Substitute x -> x^2.
PolyZ substitute_square(const PolyZ& a);
// Exact evaluation (arbitrary-precision result).
Int poly_eval_int(const PolyZ& a, const Int& x);
// Ascending-degree rendering, e.g. "1 + x^2 + 3x^4"; "0" for the zero
// polynomial.  var names the variable.
std::string poly_to_string(const PolyZ& a, const std::string& var);

}  // namespace cohiggs

#endif  // COHIGGS_POINCARE_HPP_
