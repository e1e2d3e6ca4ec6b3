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

// Command-line front end.  Every computation is exact; numeric output is
// rationals, polynomials with integer coefficients, or point counts.
//
// Exit codes: 0 success, 2 malformed input, 3 missing Poincare oracle,
// 4 internal invariant failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohiggs/cache.hpp"
#include "cohiggs/chains.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/ffcount.hpp"
#include "cohiggs/higgs.hpp"
#include "cohiggs/json_io.hpp"
#include "cohiggs/poincare.hpp"
#include "cohiggs/rank2.hpp"
#include "cohiggs/rational.hpp"
#include "cohiggs/section.hpp"

namespace {

using cohiggs::CensusCache;
using cohiggs::ChainComponent;
using cohiggs::CountRecord;
using cohiggs::HiggsField;
using cohiggs::Json;
using cohiggs::PoincareOracle;
using cohiggs::PolyZ;
using cohiggs::Rational;
using cohiggs::Section;
using cohiggs::SPoint;
using cohiggs::require;

// Reads the JSON payload from the positional argument, or from stdin when
// the argument is "-" or omitted.
Json payload_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg != "-") {
    text = arg;
  } else {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  return cohiggs::parse_json(text);
}

void print_json(const Json& j) { std::cout << cohiggs::canonical_dump(j) << "\n"; }

// Ascending-power rendering of a section in the affine coordinate z,
// matching the polynomial printer: "1 + 3z^2".
std::string section_str(const Section& s) {
  if (cohiggs::is_zero(s)) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < s.c.size(); ++k) {
    const Rational& a = s.c[k];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Rational mag = neg ? Rational(-a) : a;
    std::string term;
    if (k == 0) {
      term = cohiggs::to_string(mag);
    } else {
      const std::string var = (k == 1) ? "z" : "z^" + std::to_string(k);
      term = (mag == 1) ? var : cohiggs::to_string(mag) + var;
    }
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

void print_higgs_text(const HiggsField& phi) {
  std::cout << "splitting:";
  for (int mi : phi.m) std::cout << " " << mi;
  std::cout << "\n";
  const int r = phi.rank();
  for (int i = 0; i < r; ++i) {
    std::cout << "[ ";
    for (int j = 0; j < r; ++j) {
      if (j > 0) std::cout << " | ";
      std::cout << section_str(phi.at(i, j));
    }
    std::cout << " ]\n";
  }
}

// ---------------------------------------------------------------------------
// Payload schemas for the rank-2 normal forms.  Twists are fixed by the
// normalized splitting, so payloads carry coefficient lists only.

HiggsField odd_from_payload(const Json& j) {
  require(j.is_object() && j.contains("a") && j.contains("b") && j.contains("c"),
          "expected an object with coefficient lists \"a\", \"b\", \"c\"");
  return cohiggs::odd_higgs(cohiggs::section_from_coeffs_json(2, j.at("a")),
                            cohiggs::section_from_coeffs_json(3, j.at("b")),
                            cohiggs::section_from_coeffs_json(1, j.at("c")));
}

HiggsField even_e11_from_payload(const Json& j) {
  require(j.is_object() && j.contains("a") && j.contains("b") && j.contains("c"),
          "expected an object with coefficient lists \"a\", \"b\", \"c\"");
  return cohiggs::even_e11_higgs(
      cohiggs::section_from_coeffs_json(2, j.at("a")),
      cohiggs::section_from_coeffs_json(4, j.at("b")),
      cohiggs::section_from_coeffs_json(0, j.at("c")));
}

HiggsField even_e0_from_payload(const Json& j) {
  require(j.is_object() && j.contains("e00") && j.contains("e01") &&
              j.contains("e10"),
          "expected an object with coefficient lists \"e00\", \"e01\", \"e10\"");
  return cohiggs::even_e0_higgs(
      cohiggs::section_from_coeffs_json(2, j.at("e00")),
      cohiggs::section_from_coeffs_json(2, j.at("e01")),
      cohiggs::section_from_coeffs_json(2, j.at("e10")));
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void run_admissible(const std::vector<int>& m, const std::string& format) {
  const auto t = cohiggs::make_splitting(m);
  const auto rep = cohiggs::admissible_report(t);
  if (format == "json") {
    Json j;
    j["admissible"] = rep.admissible;
    if (rep.first_violated_gap) {
      j["gap"] = {rep.first_violated_gap->first, rep.first_violated_gap->second};
    } else {
      j["gap"] = nullptr;
    }
    print_json(j);
  } else if (rep.admissible) {
    std::cout << "true\n";
  } else {
    std::cout << "false, gap (" << rep.first_violated_gap->first << ","
              << rep.first_violated_gap->second << ")\n";
  }
}

void run_canonical_higgs(const std::vector<int>& m, const std::string& format) {
  const HiggsField phi =
      cohiggs::canonical_stable_higgs(cohiggs::make_splitting(m));
  if (format == "text") {
    print_higgs_text(phi);
  } else {
    print_json(cohiggs::higgs_to_json(phi));
  }
}

void run_charpoly(const std::string& payload, const std::string& format) {
  const HiggsField phi = cohiggs::higgs_from_json(payload_json(payload));
  const auto cc = cohiggs::char_coeffs(phi);
  if (format == "text") {
    for (int k = 1; k <= cc.rank(); ++k) {
      std::cout << "rho[" << k << "] = " << section_str(cc.rho[k - 1]) << "\n";
    }
  } else {
    print_json(cohiggs::char_coeffs_to_json(cc));
  }
}

void run_spectral_smooth(const std::string& payload, const std::string& format) {
  const Json j = payload_json(payload);
  cohiggs::CharCoeffs cc;
  if (j.is_object() && j.contains("rho")) {
    cc = cohiggs::char_coeffs_from_json(j);
  } else {
    cc = cohiggs::char_coeffs(cohiggs::higgs_from_json(j));
  }
  const bool smooth = cohiggs::spectral_smooth_r2(cc);
  if (format == "json") {
    Json out;
    out["smooth"] = smooth;
    print_json(out);
  } else {
    std::cout << (smooth ? "true" : "false") << "\n";
  }
}

void run_to_s(const std::string& payload, const std::string& format) {
  const SPoint p = cohiggs::to_S(odd_from_payload(payload_json(payload)));
  if (format == "text") {
    std::cout << "z0 = " << cohiggs::to_string(p.z0) << "\n";
    std::cout << "y0 = " << cohiggs::to_string(p.y0) << "\n";
    std::cout << "rho = " << section_str(p.rho) << "\n";
  } else {
    print_json(cohiggs::spoint_to_json(p));
  }
}

void run_from_s(const std::string& payload, const std::string& format) {
  const SPoint p = cohiggs::spoint_from_json(payload_json(payload));
  const HiggsField phi = cohiggs::from_S(p);
  if (format == "text") {
    std::cout << "a = " << section_str(phi.at(0, 0)) << "\n";
    std::cout << "b = " << section_str(phi.at(0, 1)) << "\n";
    std::cout << "c = " << section_str(phi.at(1, 0)) << "\n";
  } else {
    Json j;
    j["a"] = cohiggs::section_coeffs_to_json(phi.at(0, 0));
    j["b"] = cohiggs::section_coeffs_to_json(phi.at(0, 1));
    j["c"] = cohiggs::section_coeffs_to_json(phi.at(1, 0));
    print_json(j);
  }
}

void run_normalize_even(const std::string& payload, const std::string& format) {
  const Section rho =
      cohiggs::normalize_even_E11(even_e11_from_payload(payload_json(payload)));
  if (format == "text") {
    std::cout << "rho = " << section_str(rho) << "\n";
  } else {
    Json j;
    j["rho"] = cohiggs::section_coeffs_to_json(rho);
    print_json(j);
  }
}

void run_classify_e0(const std::string& payload, const std::string& format) {
  const auto cls =
      cohiggs::classify_even_E0(even_e0_from_payload(payload_json(payload)));
  if (format == "text") {
    std::cout << "stable = " << (cls.stable ? "true" : "false") << "\n";
    if (cls.graded) std::cout << "graded = " << section_str(*cls.graded) << "\n";
    if (cls.eigenvector) {
      std::cout << "eigenvector = " << cohiggs::to_string(*cls.eigenvector)
                << "\n";
    }
  } else {
    Json j;
    j["stable"] = cls.stable;
    j["graded"] =
        cls.graded ? cohiggs::section_coeffs_to_json(*cls.graded) : Json(nullptr);
    j["eigenvector"] = cls.eigenvector
                           ? Json(cohiggs::to_string(*cls.eigenvector))
                           : Json(nullptr);
    print_json(j);
  }
}

void check_rank_guard(int r, int max_rank) {
  require(r >= 1, "total rank must be positive");
  require(r <= max_rank,
          "total rank " + std::to_string(r) + " exceeds --max-rank " +
              std::to_string(max_rank));
}

void run_chains_list(int r, int d, int widen, int max_rank,
                     const std::string& out, const std::string& format) {
  check_rank_guard(r, max_rank);
  std::optional<CensusCache> cache;
  std::vector<ChainComponent> comps;
  bool from_cache = false;
  if (!out.empty()) {
    cache.emplace(out);
    if (cache->has_census(r, d)) {
      comps = cache->census(r, d);
      from_cache = true;
    }
  }
  if (!from_cache) comps = cohiggs::enumerate_components(r, d, widen);
  if (cache) cache->put_census(r, d, comps);
  if (format == "text") {
    for (const auto& c : comps) {
      std::cout << cohiggs::component_key(c.blocks)
                << "  morse=" << cohiggs::morse_index(c)
                << (c.certified ? "" : "  [uncertified]") << "\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& c : comps) arr.push_back(cohiggs::component_to_json(c));
    print_json(arr);
  }
}

void run_betti(int r, int d, const std::string& oracle_path, int max_rank,
               const std::string& format) {
  check_rank_guard(r, max_rank);
  require(std::gcd(r, std::abs(d)) == 1,
          "gcd(r, d) != 1: the coprime moduli census does not apply");
  std::vector<ChainComponent> comps;
  std::unique_ptr<CensusCache> cache;
  PoincareOracle oracle;
  const PoincareOracle* oracle_ptr = nullptr;
  if (!oracle_path.empty()) {
    cache = std::make_unique<CensusCache>(oracle_path);
    oracle = cache->oracle();
    oracle_ptr = &oracle;
    if (cache->has_census(r, d)) comps = cache->census(r, d);
  }
  if (comps.empty()) comps = cohiggs::enumerate_components(r, d);
  const PolyZ series = cohiggs::poincare_series_from(comps, oracle_ptr);
  if (format == "json") {
    print_json(cohiggs::polyz_to_json(series));
  } else {
    std::cout << cohiggs::poly_to_string(series, "x") << "\n";
  }
}

void run_dualize(const std::string& key, const std::string& format) {
  ChainComponent c;
  c.blocks = cohiggs::parse_component_key(key);
  const ChainComponent dual = cohiggs::dualize(c);
  const std::string dual_key = cohiggs::component_key(dual.blocks);
  if (format == "json") {
    Json j;
    j["component"] = dual_key;
    j["morse"] = cohiggs::morse_index(dual);
    print_json(j);
  } else {
    std::cout << dual_key << "\n";
  }
}

void print_count_record(const CountRecord& rec, const std::string& format) {
  if (format == "text") {
    std::cout << "component: " << rec.component << "\n";
    for (const auto& [q, n] : rec.counts) {
      std::cout << "count q=" << q << ": " << n << "\n";
    }
    std::cout << "q_poly = " << cohiggs::poly_to_string(rec.q_poly, "q") << "\n";
    std::cout << "poincare = " << cohiggs::poly_to_string(rec.poincare, "x")
              << "\n";
  } else {
    print_json(cohiggs::count_record_to_json(rec));
  }
}

void run_ffcount(const std::string& key, const std::vector<uint32_t>& primes,
                 const std::string& out, const std::string& format) {
  const auto blocks = cohiggs::parse_component_key(key);
  const std::string canonical_key = cohiggs::component_key(blocks);
  static const std::vector<uint32_t> kSupported = {2, 3, 5, 7, 11, 13, 17};
  for (uint32_t p : primes) {
    require(std::find(kSupported.begin(), kSupported.end(), p) !=
                kSupported.end(),
            "unsupported prime " + std::to_string(p) +
                " (supported: 2 3 5 7 11 13 17)");
  }
  std::optional<CensusCache> cache;
  if (!out.empty()) {
    cache.emplace(out);
    if (cache->has_count_record(canonical_key)) {
      print_count_record(cache->count_record(canonical_key), format);
      return;
    }
  }
  const CountRecord rec = cohiggs::component_count_record(
      blocks, primes.empty() ? nullptr : &primes);
  if (cache) cache->put_count_record(rec);
  print_count_record(rec, format);
}

// Shared option bundles, allocated per subcommand and kept alive by the
// callback closures.
struct SplittingOpts {
  std::vector<int> m;
  std::string format = "text";
};

struct PayloadOpts {
  std::string payload;
  std::string format = "json";
};

struct BettiOpts {
  int r = 0;
  int d = 0;
  std::string oracle;
  int max_rank = 4;
  std::string format = "text";
};

void add_format_option(CLI::App* sub, std::string& fmt) {
  sub->add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_payload_option(CLI::App* sub, std::string& payload) {
  sub->add_option("payload", payload,
                  "JSON payload ('-' or omitted reads stdin)");
}

void add_betti_subcommand(CLI::App* parent) {
  auto st = std::make_shared<BettiOpts>();
  auto* sub = parent->add_subcommand(
      "betti", "Poincare series of the moduli space for coprime (rank, degree)");
  sub->add_option("rank", st->r, "total rank")->required();
  sub->add_option("degree", st->d, "total degree")->required();
  sub->add_option("--oracle", st->oracle,
                  "cache file supplying census and count records");
  sub->add_option("--max-rank", st->max_rank, "guard on the total rank")
      ->check(CLI::Range(1, 6));
  add_format_option(sub, st->format);
  sub->callback(
      [st] { run_betti(st->r, st->d, st->oracle, st->max_rank, st->format); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic workbench for co-Higgs bundles on the projective "
      "line"};
  app.require_subcommand(1);

  {
    auto st = std::make_shared<SplittingOpts>();
    auto* sub = app.add_subcommand(
        "admissible", "Does the splitting type admit a semistable Higgs field?");
    sub->add_option("type", st->m, "splitting type (summand degrees)")
        ->required()
        ->expected(-1);
    add_format_option(sub, st->format);
    sub->callback([st] { run_admissible(st->m, st->format); });
  }

  {
    auto st = std::make_shared<SplittingOpts>();
    st->format = "json";
    auto* sub = app.add_subcommand(
        "canonical-higgs",
        "Canonical stable Higgs field on an admissible splitting");
    sub->add_option("type", st->m, "splitting type (summand degrees)")
        ->required()
        ->expected(-1);
    add_format_option(sub, st->format);
    sub->callback([st] { run_canonical_higgs(st->m, st->format); });
  }

  {
    auto st = std::make_shared<PayloadOpts>();
    auto* sub = app.add_subcommand(
        "charpoly", "Characteristic coefficients of a Higgs field");
    add_payload_option(sub, st->payload);
    add_format_option(sub, st->format);
    sub->callback([st] { run_charpoly(st->payload, st->format); });
  }

  {
    auto st = std::make_shared<PayloadOpts>();
    st->format = "text";
    auto* sub = app.add_subcommand(
        "spectral-smooth",
        "Is the rank-2 spectral curve smooth? (Higgs field or rho payload)");
    add_payload_option(sub, st->payload);
    add_format_option(sub, st->format);
    sub->callback([st] { run_spectral_smooth(st->payload, st->format); });
  }

  {
    auto* rank2 = app.add_subcommand(
        "rank2", "Rank-2 normal forms and moduli coordinates");
    rank2->require_subcommand(1);

    auto to_s = std::make_shared<PayloadOpts>();
    auto* sub_to = rank2->add_subcommand(
        "to-s", "Moduli coordinates (z0, y0, rho) of an odd-degree field");
    add_payload_option(sub_to, to_s->payload);
    add_format_option(sub_to, to_s->format);
    sub_to->callback([to_s] { run_to_s(to_s->payload, to_s->format); });

    auto from_s = std::make_shared<PayloadOpts>();
    auto* sub_from = rank2->add_subcommand(
        "from-s", "Representative odd-degree field with c = z - z0");
    add_payload_option(sub_from, from_s->payload);
    add_format_option(sub_from, from_s->format);
    sub_from->callback(
        [from_s] { run_from_s(from_s->payload, from_s->format); });

    auto norm = std::make_shared<PayloadOpts>();
    auto* sub_norm = rank2->add_subcommand(
        "normalize-even", "Normal form of an even-degree field off the E11 wall");
    add_payload_option(sub_norm, norm->payload);
    add_format_option(sub_norm, norm->format);
    sub_norm->callback(
        [norm] { run_normalize_even(norm->payload, norm->format); });

    auto cls = std::make_shared<PayloadOpts>();
    auto* sub_cls = rank2->add_subcommand(
        "classify-e0", "Stability classification on the balanced splitting");
    add_payload_option(sub_cls, cls->payload);
    add_format_option(sub_cls, cls->format);
    sub_cls->callback([cls] { run_classify_e0(cls->payload, cls->format); });
  }

  {
    auto* chains = app.add_subcommand(
        "chains", "Fixed-point components of the scaling action");
    chains->require_subcommand(1);

    struct ListOpts {
      int r = 0;
      int d = 0;
      int widen = 0;
      int max_rank = 4;
      std::string out;
      std::string format = "json";
    };
    auto lst = std::make_shared<ListOpts>();
    auto* sub_list =
        chains->add_subcommand("list", "Census of nonempty components");
    sub_list->add_option("rank", lst->r, "total rank")->required();
    sub_list->add_option("degree", lst->d, "total degree")->required();
    sub_list->add_option("--widen", lst->widen,
                         "extra width for the enumeration windows")
        ->check(CLI::Range(0, 8));
    sub_list->add_option("--max-rank", lst->max_rank, "guard on the total rank")
        ->check(CLI::Range(1, 6));
    sub_list->add_option("--out", lst->out,
                         "cache file to read/append the census (write-once)");
    add_format_option(sub_list, lst->format);
    sub_list->callback([lst] {
      run_chains_list(lst->r, lst->d, lst->widen, lst->max_rank, lst->out,
                      lst->format);
    });

    add_betti_subcommand(chains);

    struct DualOpts {
      std::string key;
      std::string format = "text";
    };
    auto dl = std::make_shared<DualOpts>();
    auto* sub_dual = chains->add_subcommand(
        "dualize", "Component key of the dual (degree-reflected) component");
    sub_dual->add_option("component", dl->key, "component key, e.g. 0|0,0|-1")
        ->required();
    add_format_option(sub_dual, dl->format);
    sub_dual->callback([dl] { run_dualize(dl->key, dl->format); });
  }

  add_betti_subcommand(&app);

  {
    struct FFOpts {
      std::string key;
      std::vector<uint32_t> primes;
      std::string out;
      std::string format = "json";
    };
    auto ff = std::make_shared<FFOpts>();
    auto* sub = app.add_subcommand(
        "ffcount",
        "Point counts over prime fields, counting polynomial, Poincare "
        "polynomial");
    sub->add_option("component", ff->key, "component key, e.g. 0,0|-1")
        ->required();
    sub->add_option("--primes", ff->primes,
                    "primes to count over (default: chosen automatically)");
    sub->add_option("--out", ff->out,
                    "cache file to read/append the record (idempotent per key)");
    add_format_option(sub, ff->format);
    sub->callback([ff] { run_ffcount(ff->key, ff->primes, ff->out, ff->format); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cohiggs::kExitInputError;
  } catch (const cohiggs::OracleMissingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cohiggs::kExitOracleMissing;
  } catch (const cohiggs::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cohiggs::kExitInputError;
  } catch (const cohiggs::Json::exception& e) {
    std::cerr << "error: malformed payload: " << e.what() << "\n";
    return cohiggs::kExitInputError;
  } catch (const cohiggs::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return cohiggs::kExitInvariantFailure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cohiggs::kExitInvariantFailure;
  }
  return cohiggs::kExitOk;
}
