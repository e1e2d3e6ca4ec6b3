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

#ifndef COHIGGS_CHAINS_HPP_
#define COHIGGS_CHAINS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohiggs/poincare.hpp"

namespace cohiggs {

// A fixed-point component of the scaling action on the moduli space,
// labelled by the splitting types of the blocks of a holomorphic chain.
// `certified` records whether the emptiness decision for the label is fully
// covered by the deciders in this library (true for total rank <= 4).
struct ChainComponent {
  std::vector<std::vector<int>> blocks;
  bool certified = true;

  int total_rank() const;
  int total_degree() const;
  std::vector<int> block_ranks() const;
  std::vector<int> block_degrees() const;
};

// Canonical key, e.g. "0,0|1|-2": blocks joined by '|', summand degrees
// within a block comma-joined in non-increasing order.
std::string component_key(const std::vector<std::vector<int>>& blocks);
std::vector<std::vector<int>> parse_component_key(const std::string& key);

// Morse index of the component: the closed combinatorial formula in the
// block ranks and degrees.
int morse_index(const ChainComponent& c);

// The same index recomputed from per-summand-pair cohomology dimensions of
// the deformation complex; kept as an independent cross-check.
int morse_index_cohomological(const ChainComponent& c);

// Degree vectors (d_1, ..., d_r) of nonempty components whose blocks all
// have rank 1, for total rank r and degree d.  `widen` enlarges the search
// window; the result must be independent of it.
std::vector<std::vector<int>> stable_degree_vectors_1n(int r, int d,
                                                       int widen = 0);

// All nonempty fixed-point components for total rank r and degree d, sorted
// by block count, then block ranks, then degree vectors.  `widen` enlarges
// the splitting search windows; the result must be independent of it.
// Components whose emptiness decision is not fully covered (rank >= 5 with
// a mixed shape) carry certified = false; shapes containing a block of rank
// >= 4 are skipped with a note on stderr.
std::vector<ChainComponent> enumerate_components(int r, int d, int widen = 0);

// The dual component: blocks reversed, each summand degree a -> -a-1.
// An involution that preserves the Morse index.
ChainComponent dualize(const ChainComponent& c);

// Poincare polynomials of components with at least one block of rank >= 2,
// keyed by component_key.
using PoincareOracle = std::map<std::string, PolyZ>;

// Poincare polynomial (in x) of the component itself.  Components whose
// blocks all have rank 1 are products of projective spaces and closed-form;
// any other component must have an oracle entry or OracleMissingError is
// thrown.
PolyZ component_poincare(const ChainComponent& c,
                         const PoincareOracle* oracle);

// Sum over components of x^{morse_index} * component_poincare.
PolyZ poincare_series_from(const std::vector<ChainComponent>& components,
                           const PoincareOracle* oracle);
PolyZ poincare_series(int r, int d, const PoincareOracle* oracle);

// Known-answer table of published series, also resolved through the degree
// duality d <-> -d-r.  Stored values are never recomputed here.
std::optional<PolyZ> published_poincare(int r, int d);

// Deterministic seed for witness searches, derived from the component key.
uint64_t component_seed(const std::string& key);

long long floor_div_ll(long long a, long long b);
long long ceil_div_ll(long long a, long long b);

}  // namespace cohiggs

#endif  // COHIGGS_CHAINS_HPP_
