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

#ifndef COHIGGS_JSON_IO_HPP_
#define COHIGGS_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "cohiggs/chains.hpp"
#include "cohiggs/ffcount.hpp"
#include "cohiggs/higgs.hpp"
#include "cohiggs/poincare.hpp"
#include "cohiggs/rank2.hpp"
#include "cohiggs/rational.hpp"
#include "cohiggs/section.hpp"

namespace cohiggs {

using Json = nlohmann::json;

// Serialization conventions, shared by the CLI and the on-disk cache:
//  - scalar rationals are canonical "p/q" strings ("p" when integral);
//  - rational entries inside coefficient arrays are JSON numbers when they
//    are integers of magnitude below 2^53, and "p/q" strings otherwise;
//  - projective points are "[u:v]" strings with v in {0, 1};
//  - twists of serialized sections are implied by context where a schema
//    fixes them (matrix entries, characteristic coefficients, rho).
// Parsers accept both spellings of rationals.  Objects serialize with keys
// in sorted order, so canonical_dump is byte-stable.

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json coeffs_to_json(const std::vector<Rational>& c);
std::vector<Rational> coeffs_from_json(const Json& j);

Json section_to_json(const Section& s);
Section section_from_json(const Json& j);

// Coefficient list alone; the twist comes from the schema.
Json section_coeffs_to_json(const Section& s);
Section section_from_coeffs_json(int twist, const Json& j);

Json proj_point_to_json(const ProjPoint& p);
ProjPoint proj_point_from_json(const Json& j);

Json higgs_to_json(const HiggsField& phi);
HiggsField higgs_from_json(const Json& j);

Json char_coeffs_to_json(const CharCoeffs& c);
CharCoeffs char_coeffs_from_json(const Json& j);

Json spoint_to_json(const SPoint& p);
SPoint spoint_from_json(const Json& j);

Json polyz_to_json(const PolyZ& p);
PolyZ polyz_from_json(const Json& j);

Json component_to_json(const ChainComponent& c);
ChainComponent component_from_json(const Json& j);

Json count_record_to_json(const CountRecord& r);
CountRecord count_record_from_json(const Json& j);

// Compact dump with sorted keys; parse-then-dump is the identity on its
// own output.
std::string canonical_dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace cohiggs

#endif  // COHIGGS_JSON_IO_HPP_
