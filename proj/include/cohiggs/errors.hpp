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

#ifndef COHIGGS_ERRORS_HPP_
#define COHIGGS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cohiggs {

// Error taxonomy shared by every module.  The CLI maps each class onto a
// distinct process exit code so scripts can tell bad input apart from a
// missing oracle table or a broken internal invariant.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleMissingError : std::runtime_error {
  explicit OracleMissingError(const std::string& what)
      : std::runtime_error(what) {}
};

struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitOracleMissing = 3;
inline constexpr int kExitInvariantFailure = 4;

// Require an input-level precondition; violations are the caller's fault.
inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

// Assert an internal invariant; violations are a bug in this library.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace cohiggs

#endif  // COHIGGS_ERRORS_HPP_
