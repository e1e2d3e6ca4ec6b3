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

#include "cohiggs/chains.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "cohiggs/errors.hpp"
#include "cohiggs/stability.hpp"

namespace cohiggs {

long long floor_div_ll(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long ceil_div_ll(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

int ChainComponent::total_rank() const {
  int r = 0;
  for (const auto& b : blocks) r += static_cast<int>(b.size());
  return r;
}

int ChainComponent::total_degree() const {
  int d = 0;
  for (const auto& b : blocks)
    for (int a : b) d += a;
  return d;
}

std::vector<int> ChainComponent::block_ranks() const {
  std::vector<int> r;
  for (const auto& b : blocks) r.push_back(static_cast<int>(b.size()));
  return r;
}

std::vector<int> ChainComponent::block_degrees() const {
  std::vector<int> d;
  for (const auto& b : blocks) {
    int s = 0;
    for (int a : b) s += a;
    d.push_back(s);
  }
  return d;
}

std::string component_key(const std::vector<std::vector<int>>& blocks) {
  std::string key;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) key += '|';
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) key += ',';
      key += std::to_string(blocks[i][j]);
    }
  }
  return key;
}

std::vector<std::vector<int>> parse_component_key(const std::string& key) {
  require(!key.empty(), "empty component key");
  require(key.back() != '|' && key.back() != ',',
          "component key has an empty trailing segment");
  std::vector<std::vector<int>> blocks;
  std::stringstream outer(key);
  std::string blk;
  while (std::getline(outer, blk, '|')) {
    require(!blk.empty(), "component key has an empty block");
    std::vector<int> degs;
    std::stringstream inner(blk);
    std::string tok;
    while (std::getline(inner, tok, ',')) {
      require(!tok.empty(), "component key has an empty summand");
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw InputError("component key has a non-integer summand: " + tok);
      }
      require(pos == tok.size(),
              "component key has a non-integer summand: " + tok);
      degs.push_back(v);
    }
    require(std::is_sorted(degs.rbegin(), degs.rend()),
            "component key block must be non-increasing: " + blk);
    blocks.push_back(std::move(degs));
  }
  require(!blocks.empty(), "component key has no blocks");
  return blocks;
}

int morse_index(const ChainComponent& c) {
  const auto rr = c.block_ranks();
  const auto dd = c.block_degrees();
  const int n = static_cast<int>(rr.size());
  long long beta = 0;
  if (n > 2) {
    for (int i = 0; i + 2 < n; ++i)
      for (int j = i + 2; j < n; ++j)
        beta += 4LL * rr[static_cast<size_t>(i)] * rr[static_cast<size_t>(j)];
  }
  if (n > 1) {
    for (int i = 0; i + 1 < n; ++i) {
      const long long cross =
          -static_cast<long long>(rr[static_cast<size_t>(i + 1)]) *
              dd[static_cast<size_t>(i)] +
          static_cast<long long>(rr[static_cast<size_t>(i)]) *
              dd[static_cast<size_t>(i + 1)];
      beta -= 2LL * (cross + static_cast<long long>(rr[static_cast<size_t>(
                                 i)]) *
                                 rr[static_cast<size_t>(i + 1)]);
    }
  }
  ensure(beta >= 0 && beta % 2 == 0, "morse index must be a nonneg even int");
  return static_cast<int>(beta);
}

int morse_index_cohomological(const ChainComponent& c) {
  const auto h0 = [](long long m) { return std::max(0LL, m + 1); };
  const auto h1 = [](long long m) { return std::max(0LL, -m - 1); };
  const int n = static_cast<int>(c.blocks.size());
  long long acc = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a : c.blocks[static_cast<size_t>(i)]) {
        for (int b : c.blocks[static_cast<size_t>(j)]) {
          acc += -h0(b - a) + h1(b - a);
          if (j - i >= 2) acc += h0(b - a + 2) - h1(b - a + 2);
        }
      }
    }
  }
  acc *= 2;
  ensure(acc >= 0, "morse index must be nonnegative");
  return static_cast<int>(acc);
}

std::vector<std::vector<int>> stable_degree_vectors_1n(int r, int d,
                                                       int widen) {
  require(r >= 1, "rank must be positive");
  require(widen >= 0, "widen must be nonnegative");
  if (r == 1) return {{d}};
  const int lo =
      static_cast<int>(ceil_div_ll(d, r)) - 2 * (r - 1) - widen;
  const int hi =
      static_cast<int>(floor_div_ll(d, r)) + 2 * (r - 1) + widen;

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto ok_vector = [&](const std::vector<int>& v) {
    // Every consecutive map must admit a nonzero form.
    for (int i = 0; i + 1 < r; ++i)
      if (-v[static_cast<size_t>(i)] + v[static_cast<size_t>(i + 1)] + 2 < 0)
        return false;
    // Strict trailing-slope inequalities.
    long long tail = 0;
    for (int k = r; k >= 2; --k) {
      tail += v[static_cast<size_t>(k - 1)];
      if (tail * r >= static_cast<long long>(d) * (r - k + 1)) return false;
    }
    return true;
  };
  const std::function<void(int, long long)> rec = [&](int i,
                                                      long long rem) {
    if (i == r) {
      if (rem == 0 && ok_vector(cur)) out.push_back(cur);
      return;
    }
    const long long left = r - i - 1;
    for (int v = lo; v <= hi; ++v) {
      const long long rest = rem - v;
      if (rest < left * lo || rest > left * hi) continue;
      cur.push_back(v);
      rec(i + 1, rest);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

namespace {

// Sound rejection test: a subset of summands closed under all possible
// nonzero maps spans a saturated invariant subsheaf of every chain with
// this splitting type; if its slope reaches the total slope, the whole
// component is empty.
bool graph_rejects(const std::vector<std::vector<int>>& blocks, int r,
                   int d) {
  struct Node {
    int blk;
    int deg;
  };
  std::vector<Node> nodes;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int a : blocks[i]) nodes.push_back({static_cast<int>(i), a});
  const int m = static_cast<int>(nodes.size());
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    bool closed = true;
    long long sum = 0;
    int cnt = 0;
    for (int v = 0; closed && v < m; ++v) {
      if (!(mask >> v & 1u)) continue;
      sum += nodes[static_cast<size_t>(v)].deg;
      ++cnt;
      for (int w = 0; w < m; ++w) {
        if (mask >> w & 1u) continue;
        if (nodes[static_cast<size_t>(w)].blk ==
                nodes[static_cast<size_t>(v)].blk + 1 &&
            nodes[static_cast<size_t>(w)].deg -
                    nodes[static_cast<size_t>(v)].deg + 2 >=
                0) {
          closed = false;
          break;
        }
      }
    }
    if (closed && sum * r >= static_cast<long long>(d) * cnt) return true;
  }
  return false;
}

void compositions_rec(int rest, int n_min, std::vector<int>* cur,
                      std::vector<std::vector<int>>* out) {
  if (rest == 0) {
    if (static_cast<int>(cur->size()) >= n_min) out->push_back(*cur);
    return;
  }
  for (int p = 1; p <= rest; ++p) {
    cur->push_back(p);
    compositions_rec(rest - p, n_min, cur, out);
    cur->pop_back();
  }
}

void splittings_rec(const std::vector<int>& parts, int lo, int hi,
                    size_t slot, int block, int in_block, int cap,
                    long long rem, std::vector<std::vector<int>>* cur,
                    const std::function<void()>& emit) {
  if (block == static_cast<int>(parts.size())) {
    if (rem == 0) emit();
    return;
  }
  const int total_slots = [&] {
    int t = 0;
    for (int p : parts) t += p;
    return t;
  }();
  const long long left = total_slots - static_cast<long long>(slot) - 1;
  const int vhi = std::min(hi, cap);
  for (int v = lo; v <= vhi; ++v) {
    const long long rest = rem - v;
    if (rest < left * lo || rest > left * hi) continue;
    (*cur)[static_cast<size_t>(block)].push_back(v);
    const bool last_in_block =
        in_block + 1 == parts[static_cast<size_t>(block)];
    splittings_rec(parts, lo, hi, slot + 1,
                   last_in_block ? block + 1 : block,
                   last_in_block ? 0 : in_block + 1,
                   last_in_block ? hi : v, rest, cur, emit);
    (*cur)[static_cast<size_t>(block)].pop_back();
  }
}

}  // namespace

uint64_t component_seed(const std::string& key) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<ChainComponent> enumerate_components(int r, int d, int widen) {
  require(r >= 1, "rank must be positive");
  require(widen >= 0, "widen must be nonnegative");
  std::vector<ChainComponent> out;
  if (r == 1) {
    out.push_back({{{d}}, true});
    return out;
  }

  std::vector<std::vector<int>> comps;
  {
    std::vector<int> cur;
    compositions_rec(r, 2, &cur, &comps);
  }

  const int lo = static_cast<int>(ceil_div_ll(d, r)) - 2 * r - widen;
  const int hi = static_cast<int>(floor_div_ll(d, r)) + 2 * r + widen;
  int skipped_shapes = 0;

  for (const auto& parts : comps) {
    const bool all_ones =
        std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
    if (all_ones) {
      for (const auto& v : stable_degree_vectors_1n(r, d, widen)) {
        ChainComponent c;
        for (int a : v) c.blocks.push_back({a});
        c.certified = true;
        out.push_back(std::move(c));
      }
      continue;
    }
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p > 3; })) {
      ++skipped_shapes;
      continue;
    }
    std::vector<std::vector<int>> cur(parts.size());
    const auto emit = [&] {
      if (graph_rejects(cur, r, d)) return;
      const auto rep = find_stable_witness(cur, component_seed(
                                                    component_key(cur)));
      if (!rep.found) return;
      out.push_back({cur, r <= 4});
    };
    splittings_rec(parts, lo, hi, 0, 0, 0, hi, d, &cur, emit);
  }

  if (skipped_shapes > 0) {
    std::cerr << "note: rank " << r << " degree " << d << ": skipped "
              << skipped_shapes
              << " block-rank pattern(s) containing a block of rank >= 4 "
                 "(not supported); census is best-effort\n";
  }

  std::sort(out.begin(), out.end(),
            [](const ChainComponent& x, const ChainComponent& y) {
              if (x.blocks.size() != y.blocks.size())
                return x.blocks.size() < y.blocks.size();
              const auto rx = x.block_ranks();
              const auto ry = y.block_ranks();
              if (rx != ry) return rx < ry;
              std::vector<int> fx, fy;
              for (const auto& b : x.blocks)
                fx.insert(fx.end(), b.begin(), b.end());
              for (const auto& b : y.blocks)
                fy.insert(fy.end(), b.begin(), b.end());
              return fx > fy;
            });
  return out;
}

ChainComponent dualize(const ChainComponent& c) {
  ChainComponent out;
  out.certified = c.certified;
  for (auto it = c.blocks.rbegin(); it != c.blocks.rend(); ++it) {
    std::vector<int> b;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
      b.push_back(-*jt - 1);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

PolyZ component_poincare(const ChainComponent& c,
                         const PoincareOracle* oracle) {
  const auto rr = c.block_ranks();
  const bool all_ones =
      std::all_of(rr.begin(), rr.end(), [](int p) { return p == 1; });
  if (all_ones) {
    // A product of projective spaces, one per map.
    PolyZ p{{1}};
    for (size_t i = 0; i + 1 < c.blocks.size(); ++i) {
      const int k = -c.blocks[i][0] + c.blocks[i + 1][0] + 2;
      ensure(k >= 0, "component with an impossible map");
      p = poly_mul(p, substitute_square(geometric_poly(k)));
    }
    return p;
  }
  const std::string key = component_key(c.blocks);
  if (oracle != nullptr) {
    const auto it = oracle->find(key);
    if (it != oracle->end()) return it->second;
  }
  throw OracleMissingError("no Poincare oracle entry for component " + key);
}

PolyZ poincare_series_from(const std::vector<ChainComponent>& components,
                           const PoincareOracle* oracle) {
  PolyZ acc;
  for (const auto& c : components) {
    const int mu = morse_index(c);
    acc = poly_add(acc, poly_shift(component_poincare(c, oracle), mu));
  }
  return acc;
}

PolyZ poincare_series(int r, int d, const PoincareOracle* oracle) {
  return poincare_series_from(enumerate_components(r, d), oracle);
}

std::optional<PolyZ> published_poincare(int r, int d) {
  static const std::map<std::pair<int, int>, PolyZ> kTable = {
      {{2, -1}, {{1, 0, 1}}},
      {{3, -1}, {{1, 0, 1, 0, 3, 0, 4, 0, 3}}},
      {{4, -1},
       {{1, 0, 1, 0, 3, 0, 5, 0, 9, 0, 13, 0, 18, 0, 22, 0, 20, 0, 10}}},
      {{5, -1}, {{1, 0, 1, 0, 3, 0, 5,   0, 10,  0, 15,  0, 26,  0, 38,  0, 56,
                  0, 77, 0, 105, 0, 131, 0, 156, 0, 165, 0, 154, 0, 103, 0,
                  40}}},
  };
  auto it = kTable.find({r, d});
  if (it == kTable.end()) it = kTable.find({r, -d - r});
  if (it == kTable.end()) return std::nullopt;
  return it->second;
}

}  // namespace cohiggs
