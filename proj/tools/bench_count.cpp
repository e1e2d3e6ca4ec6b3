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

// Benchmark: the orbit-sliced (OpenMP-parallel) point-counting kernel
// against the serial brute-force reference.  Both must agree wherever the
// reference is feasible; the reference enumerates the full map space and is
// kept for testing, not for production counts.

#include <chrono>
#include <exception>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "cohiggs/chains.hpp"
#include "cohiggs/errors.hpp"
#include "cohiggs/ffcount.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Case {
  std::string key;
  uint32_t q;
};

}  // namespace

int main() {
  const std::vector<Case> cases = {
      {"0|-1", 5},        {"0|-1", 17},      {"0|0|-1", 5},
      {"0,0|0|-1", 3},    {"0,0|0|-1", 5},   {"1,0|0|-2", 3},
      {"0|0,0|-1", 3},    {"1|0,-1|-1", 3},  {"1|0|-1,-1", 3},
  };

  std::cout << std::left << std::setw(14) << "component" << std::right
            << std::setw(4) << "q" << std::setw(14) << "kernel"
            << std::setw(10) << "ms" << std::setw(14) << "reference"
            << std::setw(10) << "ms" << std::setw(8) << "agree" << "\n";

  bool all_agree = true;
  for (const auto& c : cases) {
    const auto blocks = cohiggs::parse_component_key(c.key);

    const auto t0 = Clock::now();
    const long long fast = cohiggs::count_stable_chains(blocks, c.q);
    const double fast_ms = ms_since(t0);

    std::cout << std::left << std::setw(14) << c.key << std::right
              << std::setw(4) << c.q << std::setw(14) << fast << std::setw(10)
              << std::fixed << std::setprecision(1) << fast_ms;

    try {
      const auto t1 = Clock::now();
      const long long ref = cohiggs::count_stable_chains_reference(blocks, c.q);
      const double ref_ms = ms_since(t1);
      const bool agree = (ref == fast);
      all_agree = all_agree && agree;
      std::cout << std::setw(14) << ref << std::setw(10) << ref_ms
                << std::setw(8) << (agree ? "yes" : "NO") << "\n";
    } catch (const cohiggs::InputError&) {
      std::cout << std::setw(14) << "-" << std::setw(10) << "-" << std::setw(8)
                << "-" << "\n";
    }
  }

  if (!all_agree) {
    std::cerr << "MISMATCH between kernel and reference\n";
    return 1;
  }
  return 0;
}
