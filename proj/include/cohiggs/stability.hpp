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
//
// Slope stability of holomorphic chains on the line, over an exact field.
//
// A chain here is a tuple of split bundles U_1, ..., U_n (each a direct sum
// of line bundles, recorded by its summand degrees) together with maps
// phi_i : U_i -> U_{i+1}(2).  The chain is stable when every proper nonzero
// saturated sub-chain (a subbundle W_i <= U_i per block with
// phi_i(W_i) <= W_{i+1}(2)) has total slope < (total degree)/(total rank).
//
// Two deciders are provided:
//  * chain_is_stable_fast: closed-form treatment of the possible sub-chain
//    shapes.  Supports blocks of rank <= 2 with at most one rank-2 block;
//    every sub-line it must consider is either forced (a saturated image or
//    kernel) or free (bounded by the largest summand).  Works over the
//    rationals and over prime fields; cheap enough for inner counting loops.
//  * chain_is_stable_reference: literal enumeration of saturated sub-chains
//    over a prime field (sub-lines and rank-2 subbundles as coprime form
//    tuples up to scalar).  Supports blocks of rank <= 3.  Slow, independent
//    of the fast path, used for cross-checks and witness searches.

#ifndef COHIGGS_STABILITY_HPP_
#define COHIGGS_STABILITY_HPP_

#include <cstdint>
#include <vector>

#include "cohiggs/ffq.hpp"

namespace cohiggs {

template <class F>
struct ChainDataT {
  // Summand degrees per block, non-increasing within each block.
  std::vector<std::vector<int>> blocks;
  // maps[i] is a blocks[i+1].size() x blocks[i].size() matrix of forms;
  // entry (s, t) has formal degree blocks[i+1][s] + 2 - blocks[i][t].
  std::vector<std::vector<std::vector<FormT<F>>>> maps;

  int total_rank() const {
    int r = 0;
    for (const auto& b : blocks) r += static_cast<int>(b.size());
    return r;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& b : blocks)
      for (int a : b) d += a;
    return d;
  }
};

using ChainQ = ChainDataT<RatField>;
using ChainP = ChainDataT<PrimeField>;

template <class F>
ChainDataT<F> make_zero_chain(const F& f,
                              const std::vector<std::vector<int>>& blocks);

// Throws InputError on malformed block/map shapes or formal degrees.
template <class F>
void validate_chain(const F& f, const ChainDataT<F>& cd);

// Shape support predicates (on block summand-degree lists).
bool fast_checker_supports(const std::vector<std::vector<int>>& blocks);
bool reference_checker_supports(const std::vector<std::vector<int>>& blocks);

template <class F>
bool chain_is_stable_fast(const F& f, const ChainDataT<F>& cd);

bool chain_is_stable_reference(const PrimeField& f, const ChainP& cd);

// Coefficient layout of one map space Hom(U_i, U_{i+1}(2)) over a field:
// the slots enumerate matrix entries with nonzero space, each contributing
// fdeg + 1 coefficients.  Used to walk map spaces as flat index ranges.
struct MapLayout {
  std::vector<int> src, tgt;
  struct Slot {
    int row, col, len;
  };
  std::vector<Slot> slots;
  int dim = 0;
};

MapLayout make_map_layout(const std::vector<int>& src,
                          const std::vector<int>& tgt);

// Writes the base-q digits of index into the map's coefficient slots.
void apply_map_point(const MapLayout& layout, uint64_t index, uint32_t q,
                     std::vector<std::vector<FormT<PrimeField>>>* matrix);

// Total coefficient dimension of the full chain-map space.
int chain_space_dim(const std::vector<std::vector<int>>& blocks);

// Searches for a chain-map tuple on the given blocks that is stable,
// establishing that the stratum is nonempty.  Deterministic in seed.
//
// Shapes supported by the fast checker are probed with random rational
// chains; remaining rank<=3 shapes (and rational misses) fall back to prime
// fields: exhaustive scans when the space is small, random draws otherwise.
// A prime-field hit certifies nonemptiness (a destabilizing sub-chain of the
// integer lift would reduce to one over the prime field); a miss after
// exhaustive scans is strong evidence of emptiness but not a proof.
struct WitnessReport {
  bool found = false;
  // True when at least one full scan of a prime-field chain space ran.
  bool exhaustive = false;
};

WitnessReport find_stable_witness(const std::vector<std::vector<int>>& blocks,
                                  uint64_t seed);

}  // namespace cohiggs

#endif  // COHIGGS_STABILITY_HPP_
