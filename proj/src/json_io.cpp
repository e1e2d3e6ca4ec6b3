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

#include "cohiggs/json_io.hpp"

#include <cmath>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

constexpr long long kSafeIntBound = 1LL << 53;

bool fits_json_number(const Rational& x) {
  if (denominator(x) != 1) return false;
  const Int n = numerator(x);
  return n > -Int(kSafeIntBound) && n < Int(kSafeIntBound);
}

const Json& expect_object(const Json& j, const char* what) {
  require(j.is_object(), std::string(what) + ": expected a JSON object");
  return j;
}

const Json& expect_array(const Json& j, const char* what) {
  require(j.is_array(), std::string(what) + ": expected a JSON array");
  return j;
}

const Json& expect_field(const Json& j, const char* key, const char* what) {
  expect_object(j, what);
  const auto it = j.find(key);
  require(it != j.end(),
          std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int expect_int(const Json& j, const char* what) {
  require(j.is_number_integer(),
          std::string(what) + ": expected an integer");
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("rational: expected an integer or a \"p/q\" string");
}

Json coeffs_to_json(const std::vector<Rational>& c) {
  Json arr = Json::array();
  for (const auto& x : c) {
    if (fits_json_number(x)) {
      arr.push_back(numerator(x).convert_to<long long>());
    } else {
      arr.push_back(to_string(x));
    }
  }
  return arr;
}

std::vector<Rational> coeffs_from_json(const Json& j) {
  expect_array(j, "coefficients");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json section_to_json(const Section& s) {
  Json j;
  j["twist"] = s.twist;
  j["coeffs"] = coeffs_to_json(s.c);
  return j;
}

Section section_from_json(const Json& j) {
  const int twist = expect_int(expect_field(j, "twist", "section"),
                               "section twist");
  return make_section(twist,
                      coeffs_from_json(expect_field(j, "coeffs", "section")));
}

Json section_coeffs_to_json(const Section& s) { return coeffs_to_json(s.c); }

Section section_from_coeffs_json(int twist, const Json& j) {
  return make_section(twist, coeffs_from_json(j));
}

Json proj_point_to_json(const ProjPoint& p) { return to_string(p); }

ProjPoint proj_point_from_json(const Json& j) {
  require(j.is_string(), "projective point: expected a \"[u:v]\" string");
  return parse_proj_point(j.get<std::string>());
}

Json higgs_to_json(const HiggsField& phi) {
  Json j;
  j["m"] = phi.m;
  Json rows = Json::array();
  for (int i = 0; i < phi.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < phi.rank(); ++k)
      row.push_back(section_coeffs_to_json(phi.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

HiggsField higgs_from_json(const Json& j) {
  const Json& jm = expect_field(j, "m", "higgs field");
  expect_array(jm, "higgs field splitting");
  std::vector<int> m;
  for (const auto& e : jm) m.push_back(expect_int(e, "higgs field splitting"));
  HiggsField phi = zero_higgs(make_splitting(m));
  const Json& rows = expect_field(j, "entries", "higgs field");
  expect_array(rows, "higgs field entries");
  require(static_cast<int>(rows.size()) == phi.rank(),
          "higgs field entries: wrong row count");
  for (int i = 0; i < phi.rank(); ++i) {
    const Json& row = rows[static_cast<size_t>(i)];
    expect_array(row, "higgs field entries row");
    require(static_cast<int>(row.size()) == phi.rank(),
            "higgs field entries: wrong column count");
    for (int k = 0; k < phi.rank(); ++k) {
      const int twist = phi.m[static_cast<size_t>(i)] -
                        phi.m[static_cast<size_t>(k)] + 2;
      phi.at(i, k) =
          section_from_coeffs_json(twist, row[static_cast<size_t>(k)]);
    }
  }
  validate_higgs(phi);
  return phi;
}

Json char_coeffs_to_json(const CharCoeffs& c) {
  Json j;
  Json arr = Json::array();
  for (const auto& s : c.rho) arr.push_back(section_coeffs_to_json(s));
  j["rho"] = std::move(arr);
  return j;
}

CharCoeffs char_coeffs_from_json(const Json& j) {
  const Json& arr = expect_field(j, "rho", "characteristic coefficients");
  expect_array(arr, "characteristic coefficients");
  CharCoeffs out;
  int k = 1;
  for (const auto& e : arr) {
    out.rho.push_back(section_from_coeffs_json(2 * k, e));
    ++k;
  }
  return out;
}

Json spoint_to_json(const SPoint& p) {
  Json j;
  j["z0"] = proj_point_to_json(p.z0);
  j["y0"] = rational_to_json(p.y0);
  j["rho"] = section_coeffs_to_json(p.rho);
  return j;
}

SPoint spoint_from_json(const Json& j) {
  SPoint p;
  p.z0 = proj_point_from_json(expect_field(j, "z0", "moduli point"));
  p.y0 = rational_from_json(expect_field(j, "y0", "moduli point"));
  p.rho = section_from_coeffs_json(4, expect_field(j, "rho", "moduli point"));
  validate_spoint(p);
  return p;
}

Json polyz_to_json(const PolyZ& p) {
  Json arr = Json::array();
  for (long long c : p.c) arr.push_back(c);
  return arr;
}

PolyZ polyz_from_json(const Json& j) {
  expect_array(j, "integer polynomial");
  PolyZ p;
  for (const auto& e : j) {
    require(e.is_number_integer(),
            "integer polynomial: expected integer coefficients");
    p.c.push_back(e.get<long long>());
  }
  return poly_trim(std::move(p));
}

Json component_to_json(const ChainComponent& c) {
  Json j;
  j["component"] = component_key(c.blocks);
  j["blocks"] = c.blocks;
  j["rank"] = c.total_rank();
  j["degree"] = c.total_degree();
  j["morse"] = morse_index(c);
  j["certified"] = c.certified;
  return j;
}

ChainComponent component_from_json(const Json& j) {
  ChainComponent c;
  const Json& blocks = expect_field(j, "blocks", "component");
  expect_array(blocks, "component blocks");
  for (const auto& b : blocks) {
    expect_array(b, "component block");
    std::vector<int> degs;
    for (const auto& e : b) degs.push_back(expect_int(e, "component block"));
    c.blocks.push_back(std::move(degs));
  }
  const Json& cert = expect_field(j, "certified", "component");
  require(cert.is_boolean(), "component: \"certified\" must be a boolean");
  c.certified = cert.get<bool>();
  // The key is redundant but must agree when present.
  const auto it = j.find("component");
  if (it != j.end()) {
    require(it->is_string() &&
                it->get<std::string>() == component_key(c.blocks),
            "component: key does not match blocks");
  }
  return c;
}

Json count_record_to_json(const CountRecord& r) {
  Json j;
  j["component"] = r.component;
  Json counts = Json::array();
  for (const auto& [q, n] : r.counts)
    counts.push_back(Json::array({q, n}));
  j["counts"] = std::move(counts);
  j["q_poly"] = polyz_to_json(r.q_poly);
  j["poincare"] = polyz_to_json(r.poincare);
  return j;
}

CountRecord count_record_from_json(const Json& j) {
  CountRecord r;
  const Json& key = expect_field(j, "component", "count record");
  require(key.is_string(), "count record: \"component\" must be a string");
  r.component = key.get<std::string>();
  const Json& counts = expect_field(j, "counts", "count record");
  expect_array(counts, "count record counts");
  for (const auto& e : counts) {
    expect_array(e, "count record sample");
    require(e.size() == 2 && e[0].is_number_integer() &&
                e[1].is_number_integer(),
            "count record sample: expected [q, N]");
    r.counts.emplace_back(e[0].get<uint32_t>(), e[1].get<long long>());
  }
  r.q_poly = polyz_from_json(expect_field(j, "q_poly", "count record"));
  r.poincare = polyz_from_json(expect_field(j, "poincare", "count record"));
  return r;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace cohiggs
