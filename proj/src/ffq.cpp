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

#include "cohiggs/ffq.hpp"

namespace cohiggs {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(uint32_t prime) : p(prime) {
  require(is_prime_u32(prime), "PrimeField: modulus must be prime");
}

PrimeField::Elem PrimeField::pow(Elem a, uint64_t e) const {
  Elem acc = one();
  Elem base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  ensure(a != 0, "PrimeField::inv of zero");
  return pow(a, p - 2);
}

uint32_t primitive_root(uint32_t p) {
  require(is_prime_u32(p), "primitive_root: modulus must be prime");
  if (p == 2) return 1;
  // Distinct prime factors of p - 1.
  std::vector<uint32_t> factors;
  uint32_t n = p - 1;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  const PrimeField f(p);
  for (uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint32_t q : factors) {
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  ensure(false, "primitive_root: none found");
  return 0;
}

}  // namespace cohiggs
