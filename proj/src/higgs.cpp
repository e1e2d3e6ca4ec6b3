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

#include "cohiggs/higgs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

constexpr int kMaxExpansionRank = 8;  // Leibniz expansion stays desk-scale

// Determinant of the square submatrix rows x cols of a matrix of sections,
// where entry (i, j) has twist m[i] - m[j] + shift.  Every Leibniz term is a
// section of twist sum(m[rows]) - sum(m[cols]) + shift * k, so the result is
// accumulated at exactly that twist.
Section minor_det(const std::vector<Section>& e, const SplittingType& m,
                  int shift, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  const int r = static_cast<int>(m.size());
  const int k = static_cast<int>(rows.size());
  int twist = shift * k;
  for (int i : rows) twist += m[static_cast<size_t>(i)];
  for (int j : cols) twist -= m[static_cast<size_t>(j)];
  Section acc = zero_section(twist);
  std::vector<int> perm(static_cast<size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)])
          ++inversions;
    Section term = constant_section(0, (inversions % 2 == 0) ? 1 : -1);
    bool zero = false;
    for (int i = 0; i < k && !zero; ++i) {
      const Section& entry =
          e[static_cast<size_t>(rows[static_cast<size_t>(i)]) *
                static_cast<size_t>(r) +
            static_cast<size_t>(cols[static_cast<size_t>(
                perm[static_cast<size_t>(i)])])];
      if (is_zero(entry)) zero = true;
      else term = section_mul(term, entry);
    }
    if (!zero) acc = section_add(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Matrix product where A has entry twists m_i - m_k + sa and B has
// m_k - m_j + sb; the result lives on the grid m_i - m_j + sa + sb.
std::vector<Section> mat_mul(const std::vector<Section>& a,
                             const std::vector<Section>& b,
                             const SplittingType& m, int sa, int sb) {
  const size_t r = m.size();
  std::vector<Section> out;
  out.reserve(r * r);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      Section acc = zero_section(m[i] - m[j] + sa + sb);
      for (size_t k = 0; k < r; ++k) {
        const Section& x = a[i * r + k];
        const Section& y = b[k * r + j];
        if (is_zero(x) || is_zero(y)) continue;
        acc = section_add(acc, section_mul(x, y));
      }
      out.push_back(std::move(acc));
    }
  }
  return out;
}

void validate_grid(const std::vector<Section>& e, const SplittingType& m,
                   int shift, const char* what) {
  const size_t r = m.size();
  require(e.size() == r * r, std::string(what) + ": wrong entry count");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Section& s = e[i * r + j];
      require(s.twist == m[i] - m[j] + shift,
              std::string(what) + ": entry twist off the grid");
      require(s.c.size() ==
                  static_cast<size_t>(std::max(0, s.twist + 1)),
              std::string(what) + ": entry coefficient length invalid");
    }
}

}  // namespace

SplittingType make_splitting(std::vector<int> m) {
  require(!m.empty(), "splitting type must have rank >= 1");
  std::sort(m.begin(), m.end(), std::greater<int>());
  return m;
}

int splitting_rank(const SplittingType& t) { return static_cast<int>(t.size()); }

int splitting_degree(const SplittingType& t) {
  return std::accumulate(t.begin(), t.end(), 0);
}

HiggsField zero_higgs(SplittingType t) {
  SplittingType m = make_splitting(std::move(t));
  HiggsField h;
  h.m = m;
  const size_t r = m.size();
  h.e.reserve(r * r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      h.e.push_back(zero_section(m[i] - m[j] + 2));
  return h;
}

Automorphism identity_automorphism(SplittingType t) {
  SplittingType m = make_splitting(std::move(t));
  Automorphism a;
  a.m = m;
  const size_t r = m.size();
  a.e.reserve(r * r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      a.e.push_back(i == j ? constant_section(0, 1)
                           : zero_section(m[i] - m[j]));
  return a;
}

void validate_higgs(const HiggsField& h) {
  require(!h.m.empty(), "Higgs field with empty splitting");
  require(std::is_sorted(h.m.begin(), h.m.end(), std::greater<int>()),
          "Higgs field splitting must be sorted non-increasing");
  validate_grid(h.e, h.m, 2, "HiggsField");
}

void validate_automorphism(const Automorphism& a) {
  require(!a.m.empty(), "automorphism with empty splitting");
  require(std::is_sorted(a.m.begin(), a.m.end(), std::greater<int>()),
          "automorphism splitting must be sorted non-increasing");
  validate_grid(a.e, a.m, 0, "Automorphism");
}

AdmissibleReport admissible_report(const SplittingType& t) {
  SplittingType m = make_splitting(t);
  AdmissibleReport rep;
  rep.admissible = true;
  for (size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] - m[i + 1] > 2) {
      rep.admissible = false;
      rep.first_violated_gap = std::make_pair(m[i], m[i + 1]);
      break;
    }
  }
  return rep;
}

bool admits_semistable(const SplittingType& t) {
  return admissible_report(t).admissible;
}

HiggsField canonical_stable_higgs(const SplittingType& t) {
  SplittingType m = make_splitting(t);
  require(admits_semistable(m), "inadmissible splitting type");
  const int r = static_cast<int>(m.size());
  HiggsField h = zero_higgs(m);
  for (int i = 0; i + 1 < r; ++i) {
    // Subdiagonal 1: twist m_{i+1} - m_i + 2 >= 0 exactly by admissibility.
    h.at(i + 1, i) = constant_section(m[static_cast<size_t>(i + 1)] -
                                          m[static_cast<size_t>(i)] + 2,
                                      1);
  }
  // Corner z: twist m_1 - m_r + 2 >= 2 since the splitting is sorted.
  h.at(0, r - 1) =
      monomial_section(m.front() - m.back() + 2, 1);
  validate_higgs(h);
  return h;
}

CharCoeffs char_coeffs(const HiggsField& phi) {
  validate_higgs(phi);
  const int r = phi.rank();
  require(r <= kMaxExpansionRank, "characteristic expansion capped at rank 8");
  CharCoeffs out;
  out.rho.reserve(static_cast<size_t>(r));
  // det(eta I - phi) = sum_k (-1)^k e_k eta^{r-k} with e_k the sum of
  // principal k x k minors, so rho_k = (-1)^{k+1} e_k.
  for (int k = 1; k <= r; ++k) {
    Section ek = zero_section(2 * k);
    std::vector<int> idx(static_cast<size_t>(k));
    // Enumerate k-subsets of {0..r-1} in lexicographic order.
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ek = section_add(ek, minor_det(phi.e, phi.m, 2, idx, idx));
      int pos = k - 1;
      while (pos >= 0 &&
             idx[static_cast<size_t>(pos)] == r - k + pos)
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < k; ++q)
        idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
    out.rho.push_back(k % 2 == 1 ? ek : section_neg(ek));
    ensure(out.rho.back().twist == 2 * k, "char coefficient twist mismatch");
  }
  return out;
}

Rational automorphism_det(const Automorphism& a) {
  validate_automorphism(a);
  const int r = a.rank();
  require(r <= kMaxExpansionRank, "determinant expansion capped at rank 8");
  std::vector<int> all(static_cast<size_t>(r));
  std::iota(all.begin(), all.end(), 0);
  Section det = minor_det(a.e, a.m, 0, all, all);
  ensure(det.twist == 0, "automorphism determinant must have twist 0");
  return det.c.empty() ? Rational(0) : det.c[0];
}

Automorphism automorphism_inverse(const Automorphism& a) {
  const Rational det = automorphism_det(a);
  require(det != 0, "automorphism is not invertible");
  const int r = a.rank();
  Automorphism inv;
  inv.m = a.m;
  inv.e.resize(static_cast<size_t>(r) * static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      // inv(j, i) = (-1)^{i+j} * minor(delete row i, col j) / det.
      std::vector<int> rows, cols;
      for (int q = 0; q < r; ++q) {
        if (q != i) rows.push_back(q);
        if (q != j) cols.push_back(q);
      }
      Section cof = rows.empty() ? constant_section(0, 1)
                                 : minor_det(a.e, a.m, 0, rows, cols);
      if ((i + j) % 2 == 1) cof = section_neg(cof);
      inv.e[static_cast<size_t>(j) * static_cast<size_t>(r) +
            static_cast<size_t>(i)] = section_scale(cof, 1 / det);
    }
  }
  validate_automorphism(inv);
  return inv;
}

HiggsField conjugate(const HiggsField& phi, const Automorphism& psi) {
  validate_higgs(phi);
  require(psi.m == phi.m, "conjugation with mismatched splittings");
  Automorphism psi_inv = automorphism_inverse(psi);
  HiggsField out;
  out.m = phi.m;
  std::vector<Section> tmp = mat_mul(psi.e, phi.e, phi.m, 0, 2);
  out.e = mat_mul(tmp, psi_inv.e, phi.m, 2, 0);
  validate_higgs(out);
  return out;
}

std::pair<Section, HiggsField> trace_split(const HiggsField& phi) {
  validate_higgs(phi);
  const int r = phi.rank();
  Section tr = zero_section(2);
  for (int i = 0; i < r; ++i) tr = section_add(tr, phi.at(i, i));
  HiggsField traceless = phi;
  const Section shift = section_scale(tr, Rational(1) / r);
  for (int i = 0; i < r; ++i)
    traceless.at(i, i) = section_sub(traceless.at(i, i), shift);
  return {tr, traceless};
}

HiggsField twist_bundle(const HiggsField& phi, int n) {
  HiggsField out = phi;
  for (auto& mi : out.m) mi += n;
  return out;
}

bool spectral_smooth_r2(const CharCoeffs& rho) {
  require(rho.rank() == 2, "spectral smoothness test is rank-2 only");
  require(is_zero(rho.rho[0]), "spectral smoothness test needs rho_1 = 0");
  const Section& r2 = rho.rho[1];
  require(r2.twist == 4, "rho_2 must be a section of O(4)");
  if (is_zero(r2)) return false;  // nilpotent cone
  return squarefree_info(r2).is_squarefree;
}

}  // namespace cohiggs
