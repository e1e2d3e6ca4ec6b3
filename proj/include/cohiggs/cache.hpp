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

#ifndef COHIGGS_CACHE_HPP_
#define COHIGGS_CACHE_HPP_

#include <map>
#include <string>
#include <vector>

#include "cohiggs/chains.hpp"
#include "cohiggs/ffcount.hpp"

namespace cohiggs {

// Append-only JSON-lines store for census lists and counting records.
// Every line is one object carrying "kind" ("census" or "count") and
// "version"; lines whose version differs from the current one are ignored
// on load, so bumping the version invalidates the whole file in place.
// Writes append under an exclusive file lock and are write-once per key: a
// duplicate put with identical content is a no-op, a conflicting one is an
// invariant failure.
class CensusCache {
 public:
  static const char* version();

  explicit CensusCache(std::string path);

  // (Re)reads the file; missing files load as empty.
  void load();

  bool has_census(int r, int d) const;
  std::vector<ChainComponent> census(int r, int d) const;
  void put_census(int r, int d, const std::vector<ChainComponent>& comps);

  bool has_count_record(const std::string& component) const;
  CountRecord count_record(const std::string& component) const;
  void put_count_record(const CountRecord& rec);

  // Poincare oracle assembled from every loaded count record.
  PoincareOracle oracle() const;

  const std::string& path() const { return path_; }

 private:
  void append_line(const std::string& line);

  std::string path_;
  std::map<std::string, std::vector<ChainComponent>> censuses_;
  std::map<std::string, CountRecord> counts_;
};

}  // namespace cohiggs

#endif  // COHIGGS_CACHE_HPP_
