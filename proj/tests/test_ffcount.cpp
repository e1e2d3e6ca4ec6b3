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

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cohiggs/chains.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/ffcount.hpp"
#include "cohiggs/poincare.hpp"

using namespace cohiggs;

namespace {

long long eval_at(const PolyZ& p, long long q) {
  long long acc = 0;
  long long pw = 1;
  for (long long c : p.c) {
    acc += c * pw;
    pw *= q;
  }
  return acc;
}

}  // namespace

TEST_CASE("block automorphism groups") {
  CHECK(block_aut_order({0}, 5) == 4);
  CHECK(block_aut_dim({0}) == 1);
  CHECK(block_aut_order({0, 0}, 2) == 6);   // |GL_2(F_2)|
  CHECK(block_aut_order({0, 0}, 3) == 48);  // (9-1)(9-3)
  CHECK(block_aut_dim({0, 0}) == 4);
  CHECK(block_aut_order({1, 0}, 2) == 4);   // q^2 (q-1)^2
  CHECK(block_aut_order({1, 0}, 3) == 36);
  CHECK(block_aut_dim({1, 0}) == 4);
  CHECK(block_aut_order({2, 0}, 2) == 8);   // q^3 (q-1)^2
  CHECK(block_aut_dim({2, 0}) == 5);
}

TEST_CASE("split-line-bundle chains are counted in closed form") {
  CHECK(count_stable_chains({{0}, {-1}}, 2) == 3);
  CHECK(count_stable_chains({{0}, {-1}}, 3) == 4);
  CHECK(count_stable_chains({{0}, {0}, {-1}}, 2) == 21);
  CHECK(count_stable_chains({{0}, {0}, {-1}}, 3) == 52);
  CHECK(count_stable_chains({{1}, {0}, {-2}}, 2) == 3);  // weights 1, 0
  // A slope-unstable degree vector counts zero.
  CHECK(count_stable_chains({{-1}, {0}}, 3) == 0);
}

TEST_CASE("orbit-sliced counts match the hand-derived polynomials") {
  const std::vector<std::pair<std::string, PolyZ>> expected = {
      {"0,0|-1", PolyZ{{1}}},
      {"0|-1,-1", PolyZ{{1}}},
      {"0,0|0|-1", PolyZ{{1, 2, 2, 1}}},    // (q^2+q+1)(q+1)
      {"1,0|0|-2", PolyZ{{1, 1}}},          // q+1
      {"1|0,-1|-1", PolyZ{{1, 2, 2, 1}}},   // (q+1)(q^2+q+1)
      {"1|0|-1,-1", PolyZ{{1, 1}}},         // q+1
      {"0|0,0|-1", PolyZ{{1, 1, 1, 1, 1, 1}}},
  };
  for (const auto& [key, poly] : expected) {
    const auto blocks = parse_component_key(key);
    for (const uint32_t q : {2u, 3u, 5u}) {
      CAPTURE(key);
      CAPTURE(q);
      CHECK(count_stable_chains(blocks, q) == eval_at(poly, q));
    }
  }
}

TEST_CASE("the parallel kernel agrees with the serial reference count") {
  const std::vector<std::pair<std::string, std::vector<uint32_t>>> cases = {
      {"0|-1", {2, 3, 5}},     {"0|0|-1", {2, 3}},   {"0,0|-1", {2, 3, 5}},
      {"0|-1,-1", {2, 3, 5}},  {"1,0|0|-2", {2, 3}}, {"0,0|0|-1", {2, 3}},
      {"1|0,-1|-1", {2, 3}},   {"1|0|-1,-1", {2, 3}}, {"0|0,0|-1", {2}},
  };
  for (const auto& [key, qs] : cases) {
    const auto blocks = parse_component_key(key);
    for (const uint32_t q : qs) {
      CAPTURE(key);
      CAPTURE(q);
      CHECK(count_stable_chains(blocks, q) ==
            count_stable_chains_reference(blocks, q));
    }
  }
}

TEST_CASE("the reference count confirms empty shapes") {
  CHECK(count_stable_chains_reference({{0, 0, 0}, {-1}}, 2) == 0);
  CHECK(count_stable_chains_reference({{1}, {-1, -1}}, 2) == 0);
  CHECK(count_stable_chains_reference({{1}, {-1, -1}}, 3) == 0);
  CHECK(count_stable_chains_reference({{1, 0}, {-1, -1}}, 2) == 0);
}

TEST_CASE("input guards on the counting kernels") {
  CHECK_THROWS_AS(count_stable_chains({{0}, {-1}}, 4), InputError);
  CHECK_THROWS_AS(count_stable_chains({{0}, {-1}}, 19), InputError);
  CHECK_THROWS_AS(count_stable_chains({{0, 0, 0}, {-1}}, 2), InputError);
  CHECK_THROWS_AS(
      count_stable_chains({{0, 0}, {0}, {0}, {-1}}, 2),  // 4 mixed blocks
      InputError);
}

TEST_CASE("expected counting-polynomial degrees") {
  CHECK(expected_count_degree({{0, 0}, {-1}}) == 0);
  CHECK(expected_count_degree({{0, 0}, {0}, {-1}}) == 3);
  CHECK(expected_count_degree({{1, 0}, {0}, {-2}}) == 1);
  CHECK(expected_count_degree({{0}, {0, 0}, {-1}}) == 5);
  CHECK(expected_count_degree({{1}, {0, -1}, {-1}}) == 3);
  CHECK(expected_count_degree({{1}, {0}, {-1, -1}}) == 1);
}

TEST_CASE("prime ladder selection") {
  CHECK(choose_primes(0) == std::vector<uint32_t>{2, 3});
  CHECK(choose_primes(3) == std::vector<uint32_t>{2, 3, 5, 7, 11});
  CHECK(choose_primes(5) == std::vector<uint32_t>{2, 3, 5, 7, 11, 13, 17});
  CHECK_THROWS_AS(choose_primes(6), InputError);
}

TEST_CASE("interpolation validates integrality, positivity, exact fit") {
  // N(q) = q^2 + 1 through three primes, with a consistent extra sample.
  CHECK(interpolate_count_poly({{2, 5}, {3, 10}, {5, 26}, {7, 50}}, 2) ==
        PolyZ{{1, 0, 1}});
  // The same data with a corrupted held-out sample must be rejected.
  CHECK_THROWS_AS(interpolate_count_poly({{2, 5}, {3, 10}, {5, 26}, {7, 51}}, 2),
                  InvariantError);
  // Negative coefficients are impossible for Betti-positive counts.
  CHECK_THROWS_AS(interpolate_count_poly({{2, 1}, {3, 2}, {5, 4}}, 1),
                  InvariantError);
}

TEST_CASE("count records assemble counts, polynomial, and Betti data") {
  // Minimal component, explicitly chosen primes.
  const std::vector<uint32_t> primes = {2, 3, 5, 7};
  const CountRecord rec = component_count_record({{0}, {-1}}, &primes);
  CHECK(rec.component == "0|-1");
  CHECK(rec.counts ==
        std::vector<std::pair<uint32_t, long long>>{
            {2, 3}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(rec.q_poly == PolyZ{{1, 1}});
  CHECK(rec.poincare == PolyZ{{1, 0, 1}});

  // Automatic prime choice for the rank-3 mixed component.
  const CountRecord mixed = component_count_record({{0, 0}, {-1}});
  CHECK(mixed.counts.size() == 2);
  CHECK(mixed.q_poly == PolyZ{{1}});
  CHECK(mixed.poincare == PolyZ{{1}});
  CHECK(component_poincare_ff({{0, 0}, {-1}}) == PolyZ{{1}});

  // Too few primes for the degree bound.
  const std::vector<uint32_t> short_list = {2, 3};
  CHECK_THROWS_AS(component_count_record({{0, 0}, {0}, {-1}}, &short_list),
                  InputError);
}

TEST_CASE("a mixed record with the full pipeline: degree-3 component") {
  const CountRecord rec = component_count_record({{0, 0}, {0}, {-1}});
  CHECK(rec.q_poly == PolyZ{{1, 2, 2, 1}});
  CHECK(rec.poincare == PolyZ{{1, 0, 2, 0, 2, 0, 1}});
  // Five samples: three interpolate, two are held-out fits.
  CHECK(rec.counts.size() == 5);
  for (const auto& [q, n] : rec.counts) {
    CHECK(n == eval_at(rec.q_poly, q));
  }
}
