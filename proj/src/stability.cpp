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

#include "cohiggs/stability.hpp"

#include <algorithm>
#include <random>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

long long ceil_div_ll(long long a, long long b) {
  // b > 0
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

template <class F>
bool matrix_is_zero(const F& f, const std::vector<std::vector<FormT<F>>>& m) {
  for (const auto& row : m)
    for (const auto& e : row)
      if (!form_is_zero(f, e)) return false;
  return true;
}

// Quotient of a form by a polynomial divisor of its coefficient part, with a
// prescribed (smaller) formal degree.
template <class F>
FormT<F> form_div_by_poly(const F& f, const FormT<F>& a,
                          const std::vector<typename F::Elem>& g,
                          int new_fdeg) {
  FormT<F> r = form_zero(f, new_fdeg);
  if (form_is_zero(f, a)) return r;
  auto q = pvec_div_exact(f, a.c, g);
  ensure(static_cast<int>(q.size()) <= new_fdeg + 1,
         "form_div_by_poly: quotient exceeds formal degree");
  for (size_t i = 0; i < q.size(); ++i) r.c[i] = q[i];
  return r;
}

// Saturated image line of a map from O(s) into a rank-2 block (b0, b1):
// the two entry forms divided by their full common divisor.  Requires the
// map nonzero.  Returns the inclusion forms and sets *deg.
template <class F>
std::pair<FormT<F>, FormT<F>> saturated_image_line(const F& f,
                                                   const FormT<F>& p0,
                                                   const FormT<F>& p1, int s,
                                                   int b0, int b1, int* deg) {
  std::vector<typename F::Elem> g;
  const int gdeg = common_divisor_degree(f, {p0, p1}, &g);
  ensure(gdeg >= 0, "saturated_image_line: zero map");
  const int t = s - 2 + gdeg;
  ensure(t <= b0, "saturated_image_line: degree above top summand");
  *deg = t;
  return {form_div_by_poly(f, p0, g, b0 - t),
          form_div_by_poly(f, p1, g, b1 - t)};
}

// Degree of the saturated kernel line of a map from a rank-2 block (a0, a1)
// onto O(e)(2), given by the row (u0, u1) != 0.
template <class F>
int saturated_kernel_degree(const F& f, const FormT<F>& u0, const FormT<F>& u1,
                            int a0, int a1, int e) {
  const int gdeg = common_divisor_degree(f, {u0, u1}, nullptr);
  ensure(gdeg >= 0, "saturated_kernel_degree: zero map");
  const int k = a0 + a1 - (e + 2) + gdeg;
  ensure(k <= a0, "saturated_kernel_degree: degree above top summand");
  return k;
}

}  // namespace

template <class F>
ChainDataT<F> make_zero_chain(const F& f,
                              const std::vector<std::vector<int>>& blocks) {
  require(!blocks.empty(), "chain needs at least one block");
  for (const auto& b : blocks) {
    require(!b.empty(), "chain block must be nonempty");
    require(std::is_sorted(b.rbegin(), b.rend()),
            "chain block summands must be non-increasing");
  }
  ChainDataT<F> cd;
  cd.blocks = blocks;
  for (size_t i = 0; i + 1 < blocks.size(); ++i) {
    std::vector<std::vector<FormT<F>>> m(blocks[i + 1].size());
    for (size_t s = 0; s < blocks[i + 1].size(); ++s) {
      for (size_t t = 0; t < blocks[i].size(); ++t)
        m[s].push_back(form_zero(f, blocks[i + 1][s] + 2 - blocks[i][t]));
    }
    cd.maps.push_back(std::move(m));
  }
  return cd;
}

template <class F>
void validate_chain(const F& f, const ChainDataT<F>& cd) {
  require(!cd.blocks.empty(), "chain needs at least one block");
  require(cd.maps.size() + 1 == cd.blocks.size(),
          "chain needs one map per adjacent block pair");
  for (const auto& b : cd.blocks) {
    require(!b.empty() && std::is_sorted(b.rbegin(), b.rend()),
            "chain block summands must be non-increasing");
  }
  for (size_t i = 0; i + 1 < cd.blocks.size(); ++i) {
    require(cd.maps[i].size() == cd.blocks[i + 1].size(),
            "chain map has wrong row count");
    for (size_t s = 0; s < cd.maps[i].size(); ++s) {
      require(cd.maps[i][s].size() == cd.blocks[i].size(),
              "chain map has wrong column count");
      for (size_t t = 0; t < cd.maps[i][s].size(); ++t) {
        const auto& e = cd.maps[i][s][t];
        const int fd = cd.blocks[i + 1][s] + 2 - cd.blocks[i][t];
        require(e.fdeg == fd, "chain map entry has wrong formal degree");
        require(static_cast<int>(e.c.size()) == std::max(0, fd + 1),
                "chain map entry has wrong coefficient count");
        (void)f;
      }
    }
  }
}

bool fast_checker_supports(const std::vector<std::vector<int>>& blocks) {
  int rank2 = 0;
  for (const auto& b : blocks) {
    if (b.size() > 2) return false;
    if (b.size() == 2) ++rank2;
  }
  return rank2 <= 1;
}

bool reference_checker_supports(const std::vector<std::vector<int>>& blocks) {
  for (const auto& b : blocks)
    if (b.size() > 3) return false;
  return true;
}

template <class F>
bool chain_is_stable_fast(const F& f, const ChainDataT<F>& cd) {
  require(fast_checker_supports(cd.blocks),
          "fast stability checker: shape not supported");
  const int n = static_cast<int>(cd.blocks.size());
  const int r = cd.total_rank();
  const int d = cd.total_degree();

  std::vector<char> map_zero(n > 1 ? n - 1 : 0, 0);
  for (int i = 0; i + 1 < n; ++i)
    map_zero[static_cast<size_t>(i)] = matrix_is_zero(f, cd.maps[i]) ? 1 : 0;

  // Per-block sub-object choice: 0 = zero; for rank-1 blocks 1 = full; for
  // the rank-2 block 1 = a line, 2 = full.
  std::vector<int> radix(n);
  for (int i = 0; i < n; ++i)
    radix[i] = static_cast<int>(cd.blocks[i].size()) + 1;
  std::vector<int> choice(n, 0);

  while (true) {
    int sumw = 0;
    long long fixed = 0;
    int line_block = -1;
    for (int i = 0; i < n; ++i) {
      if (choice[i] == 0) continue;
      const auto& b = cd.blocks[i];
      if (choice[i] == static_cast<int>(b.size())) {
        sumw += static_cast<int>(b.size());
        for (int a : b) fixed += a;
      } else {
        sumw += 1;
        line_block = i;
      }
    }

    bool proper = sumw > 0 && sumw < r;
    if (proper) {
      bool ok = true;
      bool has_t = false;
      FormT<F> t0, t1;
      int t_deg = 0;
      bool kernel_right = false;
      for (int i = 0; ok && i + 1 < n; ++i) {
        const bool l_zero = choice[i] == 0;
        const bool r_full =
            choice[i + 1] == static_cast<int>(cd.blocks[i + 1].size());
        if (l_zero || r_full) continue;
        const bool l_line = line_block == i;
        const bool r_zero = choice[i + 1] == 0;
        if (r_zero) {
          if (l_line) {
            kernel_right = true;
          } else if (!map_zero[static_cast<size_t>(i)]) {
            ok = false;
          }
        } else {
          // Right choice is the line in the rank-2 block; left is a full
          // rank-1 block (two rank-2 blocks are excluded by support).
          ensure(!l_line, "fast stability checker: adjacent line choices");
          if (map_zero[static_cast<size_t>(i)]) continue;
          ensure(cd.blocks[i].size() == 1 && cd.blocks[i + 1].size() == 2,
                 "fast stability checker: unexpected block ranks");
          auto im = saturated_image_line(
              f, cd.maps[i][0][0], cd.maps[i][1][0], cd.blocks[i][0],
              cd.blocks[i + 1][0], cd.blocks[i + 1][1], &t_deg);
          t0 = std::move(im.first);
          t1 = std::move(im.second);
          has_t = true;
        }
      }

      if (ok) {
        long long line_deg = 0;
        if (line_block >= 0) {
          const auto& bl = cd.blocks[line_block];
          const bool out_zero =
              line_block + 1 >= n ||
              map_zero[static_cast<size_t>(line_block)] != 0;
          if (has_t) {
            line_deg = t_deg;
            if (kernel_right && !out_zero) {
              // The forced image line must also be killed by the next map.
              const auto& u0 = cd.maps[line_block][0][0];
              const auto& u1 = cd.maps[line_block][0][1];
              auto w = form_add(f, form_mul(f, u0, t0), form_mul(f, u1, t1));
              if (!form_is_zero(f, w)) ok = false;
            }
          } else if (kernel_right && !out_zero) {
            line_deg = saturated_kernel_degree(
                f, cd.maps[line_block][0][0], cd.maps[line_block][0][1], bl[0],
                bl[1], cd.blocks[line_block + 1][0]);
          } else {
            line_deg = bl[0];  // free line: the top summand
          }
        }
        if (ok) {
          const long long total = fixed + (line_block >= 0 ? line_deg : 0);
          if (total * r >= static_cast<long long>(d) * sumw) return false;
        }
      }
    }

    // Next choice vector.
    int i = 0;
    while (i < n) {
      if (++choice[i] < radix[i]) break;
      choice[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return true;
}

MapLayout make_map_layout(const std::vector<int>& src,
                          const std::vector<int>& tgt) {
  MapLayout l;
  l.src = src;
  l.tgt = tgt;
  for (size_t s = 0; s < tgt.size(); ++s) {
    for (size_t t = 0; t < src.size(); ++t) {
      const int fd = tgt[s] + 2 - src[t];
      if (fd < 0) continue;
      l.slots.push_back({static_cast<int>(s), static_cast<int>(t), fd + 1});
      l.dim += fd + 1;
    }
  }
  return l;
}

void apply_map_point(const MapLayout& layout, uint64_t index, uint32_t q,
                     std::vector<std::vector<FormT<PrimeField>>>* matrix) {
  for (const auto& slot : layout.slots) {
    auto& form = (*matrix)[static_cast<size_t>(slot.row)]
                          [static_cast<size_t>(slot.col)];
    for (int k = 0; k < slot.len; ++k) {
      form.c[static_cast<size_t>(k)] = static_cast<uint32_t>(index % q);
      index /= q;
    }
  }
}

int chain_space_dim(const std::vector<std::vector<int>>& blocks) {
  int dim = 0;
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    dim += make_map_layout(blocks[i], blocks[i + 1]).dim;
  return dim;
}

namespace {

// ----- reference checker -----

struct SubCand {
  enum Kind { kZero, kFull, kLine, kColine } kind;
  int w;
  int deg;
  // kLine: inclusion forms per summand, fdeg a_j - deg.
  // kColine: quotient forms per summand, fdeg tq - a_j, deg = sum(a) - tq.
  std::vector<FormT<PrimeField>> forms;
};

constexpr uint64_t kCandidateCap = 2'000'000;
constexpr uint64_t kComboCap = 20'000'000;

bool pvec_equal(const PrimeField& f, const std::vector<uint32_t>& a,
                const std::vector<uint32_t>& b) {
  const size_t m = std::max(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    const uint32_t x = i < a.size() ? a[i] : 0;
    const uint32_t y = i < b.size() ? b[i] : 0;
    if (!f.is_zero(f.sub(x, y))) return false;
  }
  return true;
}

// Enumerates coprime form tuples with given per-summand formal degrees, up
// to scalar (first nonzero coefficient = 1).
std::vector<std::vector<FormT<PrimeField>>> enumerate_coprime_tuples(
    const PrimeField& f, const std::vector<int>& fdegs) {
  std::vector<int> lens;
  uint64_t total = 1;
  for (int fd : fdegs) {
    const int len = std::max(0, fd + 1);
    lens.push_back(len);
    for (int k = 0; k < len; ++k) {
      total *= f.p;
      require(total <= kCandidateCap, "sub-object enumeration too large");
    }
  }
  std::vector<std::vector<FormT<PrimeField>>> out;
  std::vector<uint32_t> digits;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    digits.clear();
    bool seen_nonzero = false;
    bool canonical = true;
    for (int k = 0; k < static_cast<int>(lens.size()); ++k) {
      for (int j = 0; j < lens[static_cast<size_t>(k)]; ++j) {
        const uint32_t c = static_cast<uint32_t>(v % f.p);
        v /= f.p;
        if (!seen_nonzero && c != 0) {
          seen_nonzero = true;
          if (c != 1) canonical = false;
        }
        digits.push_back(c);
      }
    }
    if (!seen_nonzero || !canonical) continue;
    std::vector<FormT<PrimeField>> forms;
    size_t pos = 0;
    for (size_t k = 0; k < fdegs.size(); ++k) {
      auto fm = form_zero(f, fdegs[k]);
      for (auto& c : fm.c) c = digits[pos++];
      forms.push_back(std::move(fm));
    }
    if (common_divisor_degree(f, forms, nullptr) != 0) continue;
    out.push_back(std::move(forms));
  }
  return out;
}

std::vector<SubCand> candidate_subobjects(const PrimeField& f,
                                          const std::vector<int>& degs, int w,
                                          int min_deg) {
  const int rank = static_cast<int>(degs.size());
  std::vector<SubCand> out;
  if (w == 0) {
    out.push_back({SubCand::kZero, 0, 0, {}});
    return out;
  }
  if (w == rank) {
    int d = 0;
    for (int a : degs) d += a;
    out.push_back({SubCand::kFull, rank, d, {}});
    return out;
  }
  if (w == 1) {
    for (int t = min_deg; t <= degs[0]; ++t) {
      std::vector<int> fdegs;
      for (int a : degs) fdegs.push_back(a - t);
      for (auto& forms : enumerate_coprime_tuples(f, fdegs))
        out.push_back({SubCand::kLine, 1, t, std::move(forms)});
    }
    return out;
  }
  // w == 2, rank == 3: rank-2 saturated subbundles, presented by the coprime
  // quotient map onto O(tq); deg W = sum(degs) - tq.
  ensure(w == 2 && rank == 3, "candidate_subobjects: unsupported choice");
  int total = 0;
  for (int a : degs) total += a;
  const int max_deg = degs[0] + degs[1];
  for (int wd = min_deg; wd <= max_deg; ++wd) {
    const int tq = total - wd;
    std::vector<int> fdegs;
    for (int a : degs) fdegs.push_back(tq - a);
    for (auto& forms : enumerate_coprime_tuples(f, fdegs))
      out.push_back({SubCand::kColine, 2, wd, std::move(forms)});
  }
  return out;
}

// Does the form vector v (one form per target summand) lie in the candidate
// subobject of the target block?
bool vector_in_subobject(const PrimeField& f,
                         const std::vector<FormT<PrimeField>>& v,
                         const SubCand& wp) {
  switch (wp.kind) {
    case SubCand::kFull:
      return true;
    case SubCand::kZero:
      for (const auto& x : v)
        if (!form_is_zero(f, x)) return false;
      return true;
    case SubCand::kLine: {
      for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = i + 1; j < v.size(); ++j) {
          const auto lhs = form_mul(f, v[i], wp.forms[j]);
          const auto rhs = form_mul(f, v[j], wp.forms[i]);
          if (!pvec_equal(f, lhs.c, rhs.c)) return false;
        }
      }
      return true;
    }
    case SubCand::kColine: {
      std::vector<uint32_t> acc;
      for (size_t s = 0; s < v.size(); ++s) {
        const auto prod = form_mul(f, wp.forms[s], v[s]);
        if (acc.size() < prod.c.size()) acc.resize(prod.c.size(), 0);
        for (size_t k = 0; k < prod.c.size(); ++k)
          acc[k] = f.add(acc[k], prod.c[k]);
      }
      for (uint32_t x : acc)
        if (x != 0) return false;
      return true;
    }
  }
  return false;
}

// Is the form row x (one form per source summand) proportional to lambda as
// a polynomial row (i.e. does it kill ker lambda)?
bool row_kills_kernel(const PrimeField& f,
                      const std::vector<FormT<PrimeField>>& x,
                      const std::vector<FormT<PrimeField>>& lambda) {
  for (size_t t = 0; t < x.size(); ++t) {
    for (size_t u = t + 1; u < x.size(); ++u) {
      const auto lhs = form_mul(f, x[t], lambda[u]);
      const auto rhs = form_mul(f, x[u], lambda[t]);
      if (!pvec_equal(f, lhs.c, rhs.c)) return false;
    }
  }
  return true;
}

bool sub_compatible(const PrimeField& f,
                    const std::vector<std::vector<FormT<PrimeField>>>& m,
                    const SubCand& w, const SubCand& wp) {
  if (w.kind == SubCand::kZero || wp.kind == SubCand::kFull) return true;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  if (w.kind == SubCand::kColine) {
    // W = ker(lambda).  phi(W) <= W' iff every row of the composite
    // (quotient by W') . phi kills ker(lambda), i.e. is proportional to
    // lambda.
    std::vector<std::vector<FormT<PrimeField>>> derived;
    if (wp.kind == SubCand::kZero) {
      for (size_t s = 0; s < rows; ++s) derived.push_back(m[s]);
    } else if (wp.kind == SubCand::kLine) {
      for (size_t s1 = 0; s1 < rows; ++s1) {
        for (size_t s2 = s1 + 1; s2 < rows; ++s2) {
          std::vector<FormT<PrimeField>> x;
          for (size_t t = 0; t < cols; ++t) {
            auto a = form_mul(f, wp.forms[s2], m[s1][t]);
            const auto b = form_mul(f, wp.forms[s1], m[s2][t]);
            for (size_t k = 0; k < a.c.size(); ++k)
              a.c[k] = f.sub(a.c[k], b.c[k]);
            x.push_back(std::move(a));
          }
          derived.push_back(std::move(x));
        }
      }
    } else {  // kColine
      std::vector<FormT<PrimeField>> x;
      for (size_t t = 0; t < cols; ++t) {
        FormT<PrimeField> acc;
        bool first = true;
        for (size_t s = 0; s < rows; ++s) {
          auto prod = form_mul(f, wp.forms[s], m[s][t]);
          if (first) {
            acc = std::move(prod);
            first = false;
          } else {
            for (size_t k = 0; k < acc.c.size(); ++k)
              acc.c[k] = f.add(acc.c[k], prod.c[k]);
          }
        }
        x.push_back(std::move(acc));
      }
      derived.push_back(std::move(x));
    }
    for (const auto& x : derived)
      if (!row_kills_kernel(f, x, w.forms)) return false;
    return true;
  }
  // W contributes explicit generator columns.
  std::vector<std::vector<FormT<PrimeField>>> gens;
  if (w.kind == SubCand::kFull) {
    for (size_t t = 0; t < cols; ++t) {
      std::vector<FormT<PrimeField>> col;
      for (size_t s = 0; s < rows; ++s) col.push_back(m[s][t]);
      gens.push_back(std::move(col));
    }
  } else {  // kLine
    std::vector<FormT<PrimeField>> col;
    for (size_t s = 0; s < rows; ++s) {
      FormT<PrimeField> acc;
      bool first = true;
      for (size_t t = 0; t < cols; ++t) {
        auto prod = form_mul(f, m[s][t], w.forms[t]);
        if (first) {
          acc = std::move(prod);
          first = false;
        } else {
          for (size_t k = 0; k < acc.c.size(); ++k)
            acc.c[k] = f.add(acc.c[k], prod.c[k]);
        }
      }
      col.push_back(std::move(acc));
    }
    gens.push_back(std::move(col));
  }
  for (const auto& v : gens)
    if (!vector_in_subobject(f, v, wp)) return false;
  return true;
}

}  // namespace

bool chain_is_stable_reference(const PrimeField& f, const ChainP& cd) {
  require(reference_checker_supports(cd.blocks),
          "reference stability checker: block rank above 3");
  validate_chain(f, cd);
  const int n = static_cast<int>(cd.blocks.size());
  const int r = cd.total_rank();
  const int d = cd.total_degree();

  std::vector<int> w(n, 0);
  while (true) {
    int sumw = 0;
    for (int i = 0; i < n; ++i) sumw += w[i];
    if (sumw > 0 && sumw < r) {
      // Maximum possible degree contribution per block for this pattern.
      std::vector<long long> maxc(n, 0);
      long long maxc_total = 0;
      for (int i = 0; i < n; ++i) {
        const auto& b = cd.blocks[i];
        long long m = 0;
        for (int k = 0; k < w[i]; ++k) m += b[static_cast<size_t>(k)];
        maxc[i] = m;
        maxc_total += m;
      }
      // Candidate lists, with degree floors below which a sub-chain cannot
      // reach the destabilizing threshold even with all other blocks maxed.
      std::vector<std::vector<SubCand>> lists(n);
      bool feasible = true;
      uint64_t combos = 1;
      for (int i = 0; i < n && feasible; ++i) {
        const long long rest = maxc_total - maxc[i];
        const long long tmin =
            ceil_div_ll(static_cast<long long>(d) * sumw - r * rest, r);
        lists[i] = candidate_subobjects(
            f, cd.blocks[i], w[i],
            static_cast<int>(std::max<long long>(tmin, -64)));
        if (lists[i].empty()) feasible = false;
        combos *= std::max<uint64_t>(lists[i].size(), 1);
        require(combos <= kComboCap, "sub-chain enumeration too large");
      }
      if (feasible) {
        std::vector<size_t> pick(n, 0);
        while (true) {
          long long total = 0;
          for (int i = 0; i < n; ++i) total += lists[i][pick[i]].deg;
          if (total * r >= static_cast<long long>(d) * sumw) {
            bool compat = true;
            for (int i = 0; compat && i + 1 < n; ++i)
              compat = sub_compatible(f, cd.maps[i], lists[i][pick[i]],
                                      lists[i + 1][pick[i + 1]]);
            if (compat) return false;
          }
          int i = 0;
          while (i < n) {
            if (++pick[i] < lists[i].size()) break;
            pick[i] = 0;
            ++i;
          }
          if (i == n) break;
        }
      }
    }
    int i = 0;
    while (i < n) {
      if (++w[i] <= static_cast<int>(cd.blocks[i].size())) break;
      w[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return true;
}

namespace {

template <class F, class Picker>
void fill_chain(const F& f, ChainDataT<F>* cd, Picker pick) {
  for (auto& m : cd->maps)
    for (auto& row : m)
      for (auto& e : row)
        for (auto& c : e.c) c = pick();
  (void)f;
}

}  // namespace

WitnessReport find_stable_witness(const std::vector<std::vector<int>>& blocks,
                                  uint64_t seed) {
  require(fast_checker_supports(blocks) || reference_checker_supports(blocks),
          "witness search: shape not supported");
  WitnessReport rep;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  if (fast_checker_supports(blocks)) {
    const RatField fq;
    for (long long bound : {3LL, 9LL, 27LL, 81LL, 243LL, 729LL}) {
      for (int k = 0; k < 4; ++k) {
        auto cq = make_zero_chain(fq, blocks);
        fill_chain(fq, &cq, [&]() {
          const long long v =
              static_cast<long long>(rng() % (2 * bound + 1)) - bound;
          return Rational(v);
        });
        if (chain_is_stable_fast(fq, cq)) {
          rep.found = true;
          return rep;
        }
      }
    }
  }
  if (!reference_checker_supports(blocks)) return rep;

  const int dim = chain_space_dim(blocks);
  for (uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    // Full scans when the space is small enough; the caps keep the census
    // runtime bounded.
    uint64_t size = 1;
    bool overflow = false;
    for (int i = 0; i < dim; ++i) {
      size *= p;
      if (size > (p == 2 ? 65536u : 20000u)) {
        overflow = true;
        break;
      }
    }
    try {
      if (!overflow) {
        std::vector<MapLayout> layouts;
        for (size_t i = 0; i + 1 < blocks.size(); ++i)
          layouts.push_back(make_map_layout(blocks[i], blocks[i + 1]));
        auto cp = make_zero_chain(f, blocks);
        for (uint64_t idx = 0; idx < size; ++idx) {
          uint64_t v = idx;
          for (size_t i = 0; i < layouts.size(); ++i) {
            uint64_t span = 1;
            for (int k = 0; k < layouts[i].dim; ++k) span *= p;
            apply_map_point(layouts[i], v % span, p, &cp.maps[i]);
            v /= span;
          }
          if (chain_is_stable_reference(f, cp)) {
            rep.found = true;
            return rep;
          }
        }
        rep.exhaustive = true;
      } else {
        for (int k = 0; k < 60; ++k) {
          auto cp = make_zero_chain(f, blocks);
          fill_chain(f, &cp, [&]() {
            return static_cast<uint32_t>(rng() % p);
          });
          if (chain_is_stable_reference(f, cp)) {
            rep.found = true;
            return rep;
          }
        }
      }
    } catch (const InputError&) {
      // Cost guard tripped inside the reference checker for this prime;
      // fall through to the next prime.
    }
  }
  return rep;
}

template ChainDataT<RatField> make_zero_chain(
    const RatField&, const std::vector<std::vector<int>>&);
template ChainDataT<PrimeField> make_zero_chain(
    const PrimeField&, const std::vector<std::vector<int>>&);
template void validate_chain(const RatField&, const ChainDataT<RatField>&);
template void validate_chain(const PrimeField&, const ChainDataT<PrimeField>&);
template bool chain_is_stable_fast(const RatField&,
                                   const ChainDataT<RatField>&);
template bool chain_is_stable_fast(const PrimeField&,
                                   const ChainDataT<PrimeField>&);

}  // namespace cohiggs
