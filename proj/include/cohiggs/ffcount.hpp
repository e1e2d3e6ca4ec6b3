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

#ifndef COHIGGS_FFCOUNT_HPP_
#define COHIGGS_FFCOUNT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cohiggs/poincare.hpp"

namespace cohiggs {

// Point-counting result for one component: isomorphism-class counts over
// several prime fields, the interpolated counting polynomial in q, and the
// Poincare polynomial obtained by the substitution q -> x^2.
struct CountRecord {
  std::string component;
  std::vector<std::pair<uint32_t, long long>> counts;
  PolyZ q_poly;
  PolyZ poincare;
};

// Number of isomorphism classes of stable chains with the given block
// splitting over F_q.  Preconditions: q prime with q <= 17; every block has
// rank <= 2; at most three blocks unless all blocks have rank 1.  Blocks of
// rank 1 throughout are counted in closed form; mixed shapes are counted by
// classifying the larger map space into orbits under the block
// automorphisms and enumerating the smaller side per orbit (the inner loop
// is OpenMP-parallel).
long long count_stable_chains(const std::vector<std::vector<int>>& blocks,
                              uint32_t q);

// Serial recount by full enumeration of every map space, deciding each
// point with the cross-checking stability decider.  Exponentially slower;
// kept for testing and benchmarking against the kernel above.
long long count_stable_chains_reference(
    const std::vector<std::vector<int>>& blocks, uint32_t q);

// Order / dimension of the automorphism group of one split block.
long long block_aut_order(const std::vector<int>& degs, uint32_t q);
int block_aut_dim(const std::vector<int>& degs);

// Degree bound for the counting polynomial: dimension of the total map
// space minus the dimension of the automorphism group, plus one (clamped
// at zero).
int expected_count_degree(const std::vector<std::vector<int>>& blocks);

// The first (degree + 2) primes of the ladder {2, 3, 5, 7, 11, 13, 17};
// going past the default set {2, 3, 5, 7, 11} prints a note on stderr.
std::vector<uint32_t> choose_primes(int degree);

// Lagrange interpolation of the counting polynomial from (q, N) samples.
// Interpolates through the first degree+1 samples, then demands integer
// nonnegative coefficients and an exact fit on every remaining sample.
PolyZ interpolate_count_poly(
    const std::vector<std::pair<uint32_t, long long>>& counts, int degree);

// Full pipeline: choose primes (or use the given list, which must hold at
// least expected degree + 2 entries), count, interpolate, substitute
// q -> x^2.
CountRecord component_count_record(const std::vector<std::vector<int>>& blocks,
                                   const std::vector<uint32_t>* primes =
                                       nullptr);

// Poincare polynomial of the component via point counting.
PolyZ component_poincare_ff(const std::vector<std::vector<int>>& blocks);

}  // namespace cohiggs

#endif  // COHIGGS_FFCOUNT_HPP_
