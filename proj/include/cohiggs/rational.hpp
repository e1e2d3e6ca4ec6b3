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

#ifndef COHIGGS_RATIONAL_HPP_
#define COHIGGS_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cohiggs/errors.hpp"

namespace cohiggs {

// All module arithmetic is exact.  cpp_rational keeps numerator/denominator
// in lowest terms with the denominator positive, which is exactly the
// canonical "p/q with q > 0" form the serialization layer requires.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", or "p/q" (q > 0 after normalization).  Whitespace is not
// accepted: the canonical form must round-trip byte-identically.
Rational parse_rational(const std::string& text);

}  // namespace cohiggs

#endif  // COHIGGS_RATIONAL_HPP_
