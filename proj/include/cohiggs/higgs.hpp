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

#ifndef COHIGGS_HIGGS_HPP_
#define COHIGGS_HIGGS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "cohiggs/section.hpp"

namespace cohiggs {

// A splitting type: the multiset (m_1 >= m_2 >= ... >= m_r) of a direct sum
// of line bundles O(m_1) + ... + O(m_r).  Construction sorts.
using SplittingType = std::vector<int>;

SplittingType make_splitting(std::vector<int> m);
int splitting_rank(const SplittingType& t);
int splitting_degree(const SplittingType& t);

// A Higgs field on the split bundle: entry (i, j) is a section of
// O(m_i - m_j + 2) (row index = target summand).  Entries whose twist is
// negative are forced to zero by the section representation itself.
struct HiggsField {
  SplittingType m;
  std::vector<Section> e;  // row-major r x r

  int rank() const { return static_cast<int>(m.size()); }
  const Section& at(int i, int j) const {
    return e[static_cast<size_t>(i) * m.size() + static_cast<size_t>(j)];
  }
  Section& at(int i, int j) {
    return e[static_cast<size_t>(i) * m.size() + static_cast<size_t>(j)];
  }
  bool operator==(const HiggsField& o) const = default;
};

// A bundle automorphism of the split bundle: entry (i, j) is a section of
// O(m_i - m_j); block upper-triangular with respect to the sorted splitting
// because negative twists carry only the zero section.  Invertibility is
// witnessed by a nonzero rational determinant (a section of O(0)).
struct Automorphism {
  SplittingType m;
  std::vector<Section> e;  // row-major r x r

  int rank() const { return static_cast<int>(m.size()); }
  const Section& at(int i, int j) const {
    return e[static_cast<size_t>(i) * m.size() + static_cast<size_t>(j)];
  }
  Section& at(int i, int j) {
    return e[static_cast<size_t>(i) * m.size() + static_cast<size_t>(j)];
  }
};

// Characteristic coefficients (rho_1, ..., rho_r), rho_k a section of O(2k),
// in the spectral-equation convention
//   det(eta I - phi) = eta^r - rho_1 eta^{r-1} - ... - rho_r,
// pinned at rank 2 by rho_2 = -det(phi) = a^2 + bc.
struct CharCoeffs {
  std::vector<Section> rho;

  int rank() const { return static_cast<int>(rho.size()); }
  bool operator==(const CharCoeffs& o) const = default;
};

HiggsField zero_higgs(SplittingType t);
Automorphism identity_automorphism(SplittingType t);

// Checks the twist grid and coefficient lengths of every entry.
void validate_higgs(const HiggsField& h);
void validate_automorphism(const Automorphism& a);

// Splitting admissibility (existence of a semistable Higgs field): every
// consecutive sorted gap is at most 2.  The report carries the first
// violated gap for diagnostics.
struct AdmissibleReport {
  bool admissible = false;
  std::optional<std::pair<int, int>> first_violated_gap;
};
AdmissibleReport admissible_report(const SplittingType& t);
bool admits_semistable(const SplittingType& t);

// The canonical stable Higgs field on an admissible splitting: subdiagonal
// entries are the section 1, the (1, r) corner is the section z, all other
// entries vanish.  At rank 1 the corner is the diagonal, i.e. the field is
// multiplication by z.  Its characteristic coefficients are (0, ..., 0, z)
// for every rank.
HiggsField canonical_stable_higgs(const SplittingType& t);

// Exact expansion of det(eta I - phi) into characteristic coefficients via
// sums of principal minors; validated for twist correctness.
CharCoeffs char_coeffs(const HiggsField& phi);

// Determinant of an automorphism as an exact rational (twist-0 section).
Rational automorphism_det(const Automorphism& a);
// Adjugate-based exact inverse; requires det != 0.
Automorphism automorphism_inverse(const Automorphism& a);

// psi phi psi^{-1}, exactly; characteristic coefficients are unchanged.
HiggsField conjugate(const HiggsField& phi, const Automorphism& psi);

// (trace, traceless part): trace = rho_1, traceless = phi - (trace/r) Id.
std::pair<Section, HiggsField> trace_split(const HiggsField& phi);

// Tensor the underlying bundle by O(n): shifts every splitting summand by n,
// leaves every entry (and hence the twist grid and char coefficients) alone.
HiggsField twist_bundle(const HiggsField& phi, int n);

// Rank-2 trace-free smoothness of the spectral curve: rho_2 has 4 distinct
// projective zeros.  rho_2 = 0 (the nilpotent cone) returns false.
bool spectral_smooth_r2(const CharCoeffs& rho);

}  // namespace cohiggs

#endif  // COHIGGS_HIGGS_HPP_
