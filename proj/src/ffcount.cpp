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

#include "cohiggs/ffcount.hpp"

#include <algorithm>
#include <iostream>

#include "cohiggs/chains.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/ffq.hpp"
#include "cohiggs/rational.hpp"
#include "cohiggs/stability.hpp"

namespace cohiggs {

namespace {

constexpr uint64_t kOrbitSpaceCap = 40'000'000;
constexpr uint64_t kInnerSpaceCap = 40'000'000;
constexpr uint64_t kReferenceSpaceCap = 5'000'000;

using FMat = std::vector<std::vector<FormT<PrimeField>>>;

bool all_rank_one(const std::vector<std::vector<int>>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const std::vector<int>& b) { return b.size() == 1; });
}

// Stability criterion for degree vectors with every block of rank 1: each
// consecutive map space must be nonzero and every trailing slope must lie
// strictly below the total slope.
bool admissible_degree_vector(const std::vector<int>& dvec, int d) {
  const int r = static_cast<int>(dvec.size());
  for (int i = 0; i + 1 < r; ++i)
    if (-dvec[static_cast<size_t>(i)] + dvec[static_cast<size_t>(i + 1)] + 2 <
        0)
      return false;
  long long tail = 0;
  for (int k = r; k >= 2; --k) {
    tail += dvec[static_cast<size_t>(k - 1)];
    if (tail * r >= static_cast<long long>(d) * (r - k + 1)) return false;
  }
  return true;
}

long long checked_mul(long long a, long long b) {
  const unsigned __int128 p =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  ensure(p <= static_cast<unsigned __int128>(1) << 62,
         "count overflow");
  return static_cast<long long>(p);
}

long long geometric_q(int k, uint32_t q) {
  unsigned __int128 acc = 0;
  unsigned __int128 pw = 1;
  for (int i = 0; i <= k; ++i) {
    acc += pw;
    ensure(acc <= static_cast<unsigned __int128>(1) << 62, "count overflow");
    pw *= q;
  }
  return static_cast<long long>(acc);
}

// Generators of the automorphism group of one split block of rank <= 2, as
// matrices of forms (entry (s, u) has formal degree degs[s] - degs[u]).
std::vector<FMat> block_aut_generators(const PrimeField& f,
                                       const std::vector<int>& degs) {
  require(degs.size() <= 2, "block automorphism generators need rank <= 2");
  const uint32_t g = primitive_root(f.p);
  std::vector<FMat> out;
  const auto shaped = [&](uint32_t a00, uint32_t a01, uint32_t a10,
                          uint32_t a11) {
    FMat m(degs.size());
    for (size_t s = 0; s < degs.size(); ++s)
      for (size_t u = 0; u < degs.size(); ++u)
        m[s].push_back(form_zero(f, degs[s] - degs[u]));
    m[0][0].c[0] = a00;
    if (degs.size() == 2) {
      m[1][1].c[0] = a11;
      if (!m[0][1].c.empty()) m[0][1].c[0] = a01;
      if (!m[1][0].c.empty()) m[1][0].c[0] = a10;
    }
    return m;
  };
  if (degs.size() == 1) {
    out.push_back(shaped(g, 0, 0, 0));
    return out;
  }
  out.push_back(shaped(g, 0, 0, 1));
  out.push_back(shaped(1, 0, 0, g));
  if (degs[0] == degs[1]) {
    out.push_back(shaped(1, 1, 0, 1));
    out.push_back(shaped(1, 0, 1, 1));
  } else {
    for (int t = 0; t <= degs[0] - degs[1]; ++t) {
      auto m = shaped(1, 0, 0, 1);
      m[0][1].c[static_cast<size_t>(t)] = 1;
      out.push_back(std::move(m));
    }
  }
  return out;
}

FMat zero_map_matrix(const PrimeField& f, const std::vector<int>& src,
                     const std::vector<int>& tgt) {
  FMat m(tgt.size());
  for (size_t s = 0; s < tgt.size(); ++s)
    for (size_t t = 0; t < src.size(); ++t)
      m[s].push_back(form_zero(f, tgt[s] + 2 - src[t]));
  return m;
}

FMat compose_left(const PrimeField& f, const FMat& h, const FMat& phi,
                  const std::vector<int>& src, const std::vector<int>& tgt) {
  FMat out = zero_map_matrix(f, src, tgt);
  for (size_t s = 0; s < tgt.size(); ++s)
    for (size_t t = 0; t < src.size(); ++t)
      for (size_t u = 0; u < tgt.size(); ++u)
        out[s][t] = form_add(f, out[s][t], form_mul(f, h[s][u], phi[u][t]));
  return out;
}

FMat compose_right(const PrimeField& f, const FMat& phi, const FMat& h,
                   const std::vector<int>& src, const std::vector<int>& tgt) {
  FMat out = zero_map_matrix(f, src, tgt);
  for (size_t s = 0; s < tgt.size(); ++s)
    for (size_t t = 0; t < src.size(); ++t)
      for (size_t u = 0; u < src.size(); ++u)
        out[s][t] = form_add(f, out[s][t], form_mul(f, phi[s][u], h[u][t]));
  return out;
}

void encode_map(const MapLayout& layout, const FMat& m, uint32_t* out) {
  int pos = 0;
  for (const auto& slot : layout.slots) {
    const auto& form = m[static_cast<size_t>(slot.row)]
                        [static_cast<size_t>(slot.col)];
    for (int k = 0; k < slot.len; ++k)
      out[pos++] = form.c[static_cast<size_t>(k)];
  }
}

// The (linear) action of one automorphism generator on the coefficient
// space of a map, as a dim x dim matrix over F_q (row-major), built by
// applying the composition to each basis map once.
struct ActionMatrix {
  int dim = 0;
  std::vector<uint32_t> m;
};

ActionMatrix action_matrix(const PrimeField& f, const MapLayout& layout,
                           const std::vector<int>& src,
                           const std::vector<int>& tgt, const FMat& h,
                           bool left_action) {
  ActionMatrix am;
  am.dim = layout.dim;
  am.m.assign(static_cast<size_t>(layout.dim) * layout.dim, 0);
  std::vector<uint32_t> col(static_cast<size_t>(layout.dim));
  for (int j = 0; j < layout.dim; ++j) {
    FMat phi = zero_map_matrix(f, src, tgt);
    int pos = 0;
    for (const auto& slot : layout.slots) {
      for (int k = 0; k < slot.len; ++k) {
        if (pos == j)
          phi[static_cast<size_t>(slot.row)][static_cast<size_t>(slot.col)]
              .c[static_cast<size_t>(k)] = 1;
        ++pos;
      }
    }
    const FMat out = left_action ? compose_left(f, h, phi, src, tgt)
                                 : compose_right(f, phi, h, src, tgt);
    encode_map(layout, out, col.data());
    for (int i = 0; i < layout.dim; ++i)
      am.m[static_cast<size_t>(i) * layout.dim + j] = col[static_cast<size_t>(
          i)];
  }
  return am;
}

void decode_digits(uint64_t idx, uint32_t q, int dim, uint32_t* out) {
  for (int i = 0; i < dim; ++i) {
    out[i] = static_cast<uint32_t>(idx % q);
    idx /= q;
  }
}

uint64_t encode_digits(const uint32_t* v, uint32_t q, int dim) {
  uint64_t idx = 0;
  for (int i = dim - 1; i >= 0; --i) idx = idx * q + v[i];
  return idx;
}

struct Orbit {
  uint64_t rep;
  long long size;
};

std::vector<Orbit> orbits_under(const std::vector<ActionMatrix>& gens,
                                uint32_t q, uint64_t space, int dim) {
  std::vector<bool> visited(space, false);
  std::vector<Orbit> out;
  std::vector<uint64_t> stack;
  std::vector<uint32_t> vin(static_cast<size_t>(dim)),
      vout(static_cast<size_t>(dim));
  for (uint64_t s0 = 0; s0 < space; ++s0) {
    if (visited[s0]) continue;
    visited[s0] = true;
    stack.push_back(s0);
    long long size = 0;
    while (!stack.empty()) {
      const uint64_t s = stack.back();
      stack.pop_back();
      ++size;
      decode_digits(s, q, dim, vin.data());
      for (const auto& g : gens) {
        for (int i = 0; i < dim; ++i) {
          uint64_t acc = 0;
          const uint32_t* row = g.m.data() + static_cast<size_t>(i) * dim;
          for (int j = 0; j < dim; ++j)
            acc += static_cast<uint64_t>(row[j]) * vin[static_cast<size_t>(j)];
          vout[static_cast<size_t>(i)] = static_cast<uint32_t>(acc % q);
        }
        const uint64_t t = encode_digits(vout.data(), q, dim);
        if (!visited[t]) {
          visited[t] = true;
          stack.push_back(t);
        }
      }
    }
    out.push_back({s0, size});
  }
  return out;
}

long long divide_by_automorphisms(long long n_stable,
                                  const std::vector<std::vector<int>>& blocks,
                                  uint32_t q) {
  unsigned __int128 num =
      static_cast<unsigned __int128>(n_stable) * (q - 1);
  unsigned __int128 den = 1;
  for (const auto& b : blocks)
    den *= static_cast<unsigned __int128>(block_aut_order(b, q));
  ensure(den != 0 && num % den == 0,
         "stable point count not divisible by the automorphism order");
  const unsigned __int128 res = num / den;
  ensure(res <= static_cast<unsigned __int128>(1) << 62, "count overflow");
  return static_cast<long long>(res);
}

uint64_t checked_pow(uint32_t q, int e, uint64_t cap, const char* what) {
  uint64_t s = 1;
  for (int i = 0; i < e; ++i) {
    s *= q;
    require(s <= cap, what);
  }
  return s;
}

long long count_mixed(const PrimeField& f,
                      const std::vector<std::vector<int>>& blocks,
                      uint32_t q) {
  const int n = static_cast<int>(blocks.size());
  std::vector<MapLayout> layouts;
  for (int i = 0; i + 1 < n; ++i)
    layouts.push_back(make_map_layout(blocks[static_cast<size_t>(i)],
                                      blocks[static_cast<size_t>(i + 1)]));
  int side = 0;
  for (int i = 1; i + 1 < n; ++i)
    if (layouts[static_cast<size_t>(i)].dim >
        layouts[static_cast<size_t>(side)].dim)
      side = i;
  const MapLayout& ls = layouts[static_cast<size_t>(side)];
  const uint64_t space =
      checked_pow(q, ls.dim, kOrbitSpaceCap, "orbit space too large");

  std::vector<ActionMatrix> gens;
  for (const auto& h :
       block_aut_generators(f, blocks[static_cast<size_t>(side)]))
    gens.push_back(action_matrix(f, ls, blocks[static_cast<size_t>(side)],
                                 blocks[static_cast<size_t>(side + 1)], h,
                                 /*left_action=*/false));
  for (const auto& h :
       block_aut_generators(f, blocks[static_cast<size_t>(side + 1)]))
    gens.push_back(action_matrix(f, ls, blocks[static_cast<size_t>(side)],
                                 blocks[static_cast<size_t>(side + 1)], h,
                                 /*left_action=*/true));

  const auto orbits = orbits_under(gens, q, space, ls.dim);
  {
    long long covered = 0;
    for (const auto& o : orbits) covered += o.size;
    ensure(covered == static_cast<long long>(space),
           "orbit sizes must cover the map space");
  }

  const bool fast = fast_checker_supports(blocks);
  auto base = make_zero_chain(f, blocks);
  const int other = side == 0 ? 1 : 0;  // meaningful only when n == 3
  const uint64_t inner_space =
      n == 3 ? checked_pow(q, layouts[static_cast<size_t>(other)].dim,
                           kInnerSpaceCap, "inner space too large")
             : 1;

  long long n_stable = 0;
  for (const auto& orbit : orbits) {
    apply_map_point(ls, orbit.rep, q, &base.maps[static_cast<size_t>(side)]);
    long long inner = 0;
    if (n == 2) {
      inner = (fast ? chain_is_stable_fast(f, base)
                    : chain_is_stable_reference(f, base))
                  ? 1
                  : 0;
    } else {
      const MapLayout& lo = layouts[static_cast<size_t>(other)];
#pragma omp parallel reduction(+ : inner)
      {
        auto scratch = base;
#pragma omp for schedule(static)
        for (long long idx = 0; idx < static_cast<long long>(inner_space);
             ++idx) {
          apply_map_point(lo, static_cast<uint64_t>(idx), q,
                          &scratch.maps[static_cast<size_t>(other)]);
          if (fast ? chain_is_stable_fast(f, scratch)
                   : chain_is_stable_reference(f, scratch))
            ++inner;
        }
      }
    }
    n_stable += checked_mul(orbit.size, inner);
  }
  return divide_by_automorphisms(n_stable, blocks, q);
}

void check_blocks_shape(const std::vector<std::vector<int>>& blocks,
                        int max_rank) {
  require(!blocks.empty(), "chain needs at least one block");
  for (const auto& b : blocks) {
    require(!b.empty() && static_cast<int>(b.size()) <= max_rank,
            "block rank out of the supported range");
    require(std::is_sorted(b.rbegin(), b.rend()),
            "block summands must be non-increasing");
  }
}

}  // namespace

long long block_aut_order(const std::vector<int>& degs, uint32_t q) {
  long long ord = 1;
  const size_t r = degs.size();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (degs[i] > degs[j])
        for (int t = 0; t <= degs[i] - degs[j]; ++t)
          ord = checked_mul(ord, q);
  size_t i = 0;
  while (i < r) {
    size_t j = i;
    while (j < r && degs[j] == degs[i]) ++j;
    const int s = static_cast<int>(j - i);
    // |GL_s(F_q)| = prod_{t=0}^{s-1} (q^s - q^t)
    long long qs = 1;
    for (int t = 0; t < s; ++t) qs = checked_mul(qs, q);
    long long qt = 1;
    for (int t = 0; t < s; ++t) {
      ord = checked_mul(ord, qs - qt);
      qt = checked_mul(qt, q);
    }
    i = j;
  }
  return ord;
}

int block_aut_dim(const std::vector<int>& degs) {
  int dim = 0;
  const size_t r = degs.size();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (degs[i] > degs[j]) dim += degs[i] - degs[j] + 1;
  size_t i = 0;
  while (i < r) {
    size_t j = i;
    while (j < r && degs[j] == degs[i]) ++j;
    const int s = static_cast<int>(j - i);
    dim += s * s;
    i = j;
  }
  return dim;
}

int expected_count_degree(const std::vector<std::vector<int>>& blocks) {
  int aut = 0;
  for (const auto& b : blocks) aut += block_aut_dim(b);
  return std::max(0, chain_space_dim(blocks) - aut + 1);
}

std::vector<uint32_t> choose_primes(int degree) {
  require(degree >= 0, "degree must be nonnegative");
  static const uint32_t kLadder[] = {2, 3, 5, 7, 11, 13, 17};
  const size_t need = static_cast<size_t>(degree) + 2;
  require(need <= std::size(kLadder),
          "counting polynomial degree exceeds the prime ladder");
  if (need > 5) {
    std::cerr << "note: extending the default prime set {2,3,5,7,11} to "
              << need << " primes for an expected degree of " << degree
              << "\n";
  }
  return std::vector<uint32_t>(kLadder, kLadder + need);
}

long long count_stable_chains(const std::vector<std::vector<int>>& blocks,
                              uint32_t q) {
  require(q <= 17, "q must be a prime at most 17");
  const PrimeField f(q);
  check_blocks_shape(blocks, 2);
  const int n = static_cast<int>(blocks.size());
  if (n == 1) return blocks[0].size() == 1 ? 1 : 0;
  if (all_rank_one(blocks)) {
    std::vector<int> dvec;
    int d = 0;
    for (const auto& b : blocks) {
      dvec.push_back(b[0]);
      d += b[0];
    }
    if (!admissible_degree_vector(dvec, d)) return 0;
    long long acc = 1;
    for (int i = 0; i + 1 < n; ++i) {
      const int k = -dvec[static_cast<size_t>(i)] +
                    dvec[static_cast<size_t>(i + 1)] + 2;
      acc = checked_mul(acc, geometric_q(k, q));
    }
    return acc;
  }
  require(n <= 3, "mixed shapes are supported up to three blocks");
  return count_mixed(f, blocks, q);
}

long long count_stable_chains_reference(
    const std::vector<std::vector<int>>& blocks, uint32_t q) {
  const PrimeField f(q);
  check_blocks_shape(blocks, 3);
  const int n = static_cast<int>(blocks.size());
  if (n == 1) return blocks[0].size() == 1 ? 1 : 0;

  std::vector<MapLayout> layouts;
  uint64_t space = 1;
  for (int i = 0; i + 1 < n; ++i) {
    layouts.push_back(make_map_layout(blocks[static_cast<size_t>(i)],
                                      blocks[static_cast<size_t>(i + 1)]));
    space *= checked_pow(q, layouts.back().dim, kReferenceSpaceCap,
                         "reference enumeration too large");
    require(space <= kReferenceSpaceCap, "reference enumeration too large");
  }

  auto chain = make_zero_chain(f, blocks);
  long long n_stable = 0;
  for (uint64_t idx = 0; idx < space; ++idx) {
    uint64_t v = idx;
    for (size_t i = 0; i < layouts.size(); ++i) {
      uint64_t span = 1;
      for (int k = 0; k < layouts[i].dim; ++k) span *= q;
      apply_map_point(layouts[i], v % span, q, &chain.maps[i]);
      v /= span;
    }
    if (chain_is_stable_reference(f, chain)) ++n_stable;
  }
  return divide_by_automorphisms(n_stable, blocks, q);
}

PolyZ interpolate_count_poly(
    const std::vector<std::pair<uint32_t, long long>>& counts, int degree) {
  require(degree >= 0, "degree must be nonnegative");
  const size_t need = static_cast<size_t>(degree) + 2;
  require(counts.size() >= need,
          "need at least degree + 2 sample points");
  for (size_t i = 0; i < counts.size(); ++i)
    for (size_t j = i + 1; j < counts.size(); ++j)
      require(counts[i].first != counts[j].first,
              "sample points must be distinct");

  const size_t m = static_cast<size_t>(degree) + 1;
  std::vector<Rational> acc(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    // Numerator polynomial prod_{j != i} (x - q_j).
    std::vector<Rational> num{Rational(1)};
    Rational den(1);
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Rational xj(static_cast<long long>(counts[j].first));
      std::vector<Rational> next(num.size() + 1, Rational(0));
      for (size_t k = 0; k < num.size(); ++k) {
        next[k + 1] += num[k];
        next[k] -= num[k] * xj;
      }
      num = std::move(next);
      den *= Rational(static_cast<long long>(counts[i].first)) - xj;
    }
    const Rational scale = Rational(counts[i].second) / den;
    for (size_t k = 0; k < num.size(); ++k) acc[k] += num[k] * scale;
  }

  PolyZ out;
  for (const auto& c : acc) {
    ensure(boost::multiprecision::denominator(c) == 1,
           "interpolated count polynomial must have integer coefficients");
    const Int numer = boost::multiprecision::numerator(c);
    ensure(numer >= 0,
           "interpolated count polynomial must have nonnegative "
           "coefficients");
    ensure(numer < (Int(1) << 62), "count polynomial coefficient overflow");
    out.c.push_back(numer.convert_to<long long>());
  }
  out = poly_trim(std::move(out));
  for (const auto& [q, n] : counts) {
    ensure(poly_eval_int(out, Int(q)) == Int(n),
           "interpolated count polynomial must fit every sample point");
  }
  return out;
}

CountRecord component_count_record(const std::vector<std::vector<int>>& blocks,
                                   const std::vector<uint32_t>* primes) {
  CountRecord rec;
  rec.component = component_key(blocks);
  const int degree = expected_count_degree(blocks);
  const std::vector<uint32_t> ps = primes ? *primes : choose_primes(degree);
  require(ps.size() >= static_cast<size_t>(degree) + 2,
          "need at least expected degree + 2 primes");
  for (const uint32_t q : ps)
    rec.counts.emplace_back(q, count_stable_chains(blocks, q));
  rec.q_poly = interpolate_count_poly(rec.counts, degree);
  rec.poincare = substitute_square(rec.q_poly);
  return rec;
}

PolyZ component_poincare_ff(const std::vector<std::vector<int>>& blocks) {
  return component_count_record(blocks).poincare;
}

}  // namespace cohiggs
