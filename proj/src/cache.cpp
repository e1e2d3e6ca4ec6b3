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

#include "cohiggs/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "cohiggs/errors.hpp"
#include "cohiggs/json_io.hpp"

namespace cohiggs {

namespace {

std::string census_key(int r, int d) {
  return std::to_string(r) + "," + std::to_string(d);
}

}  // namespace

const char* CensusCache::version() { return "1"; }

CensusCache::CensusCache(std::string path) : path_(std::move(path)) {
  load();
}

void CensusCache::load() {
  censuses_.clear();
  counts_.clear();
  std::ifstream in(path_);
  if (!in) return;  // a missing cache file is an empty cache
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = parse_json(line);
    } catch (const InputError& e) {
      throw InputError("cache " + path_ + " line " + std::to_string(lineno) +
                       ": " + e.what());
    }
    if (!j.is_object()) {
      throw InputError("cache " + path_ + " line " + std::to_string(lineno) +
                       ": expected an object");
    }
    const auto ver = j.find("version");
    if (ver == j.end() || !ver->is_string() ||
        ver->get<std::string>() != version()) {
      continue;  // stale line from an older layout
    }
    const auto kind = j.find("kind");
    require(kind != j.end() && kind->is_string(),
            "cache line is missing \"kind\"");
    if (*kind == "census") {
      const int r = j.at("rank").get<int>();
      const int d = j.at("degree").get<int>();
      std::vector<ChainComponent> comps;
      for (const auto& e : j.at("items")) comps.push_back(component_from_json(e));
      censuses_[census_key(r, d)] = std::move(comps);
    } else if (*kind == "count") {
      CountRecord rec = count_record_from_json(j.at("record"));
      counts_[rec.component] = std::move(rec);
    } else {
      throw InputError("cache " + path_ + " line " + std::to_string(lineno) +
                       ": unknown kind");
    }
  }
}

void CensusCache::append_line(const std::string& line) {
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  require(fd >= 0, "cannot open cache file for writing: " + path_);
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw InputError("cannot lock cache file: " + path_);
  }
  const std::string payload = line + "\n";
  const ssize_t written = ::write(fd, payload.data(), payload.size());
  ::flock(fd, LOCK_UN);
  ::close(fd);
  require(written == static_cast<ssize_t>(payload.size()),
          "short write to cache file: " + path_);
}

bool CensusCache::has_census(int r, int d) const {
  return censuses_.count(census_key(r, d)) > 0;
}

std::vector<ChainComponent> CensusCache::census(int r, int d) const {
  const auto it = censuses_.find(census_key(r, d));
  require(it != censuses_.end(), "census not cached");
  return it->second;
}

void CensusCache::put_census(int r, int d,
                             const std::vector<ChainComponent>& comps) {
  const auto it = censuses_.find(census_key(r, d));
  if (it != censuses_.end()) {
    // Write-once: a matching entry is a no-op, a conflicting one is a bug.
    const auto& old = it->second;
    bool same = old.size() == comps.size();
    for (size_t i = 0; same && i < old.size(); ++i)
      same = old[i].blocks == comps[i].blocks &&
             old[i].certified == comps[i].certified;
    ensure(same, "cache census rewrite with different content");
    return;
  }
  Json j;
  j["kind"] = "census";
  j["version"] = version();
  j["rank"] = r;
  j["degree"] = d;
  Json items = Json::array();
  for (const auto& c : comps) items.push_back(component_to_json(c));
  j["items"] = std::move(items);
  append_line(canonical_dump(j));
  censuses_[census_key(r, d)] = comps;
}

bool CensusCache::has_count_record(const std::string& component) const {
  return counts_.count(component) > 0;
}

CountRecord CensusCache::count_record(const std::string& component) const {
  const auto it = counts_.find(component);
  require(it != counts_.end(), "count record not cached");
  return it->second;
}

void CensusCache::put_count_record(const CountRecord& rec) {
  const auto it = counts_.find(rec.component);
  if (it != counts_.end()) {
    const auto& old = it->second;
    ensure(old.counts == rec.counts && old.q_poly == rec.q_poly &&
               old.poincare == rec.poincare,
           "cache count rewrite with different content");
    return;
  }
  Json j;
  j["kind"] = "count";
  j["version"] = version();
  j["record"] = count_record_to_json(rec);
  append_line(canonical_dump(j));
  counts_[rec.component] = rec;
}

PoincareOracle CensusCache::oracle() const {
  PoincareOracle out;
  for (const auto& [key, rec] : counts_) out[key] = rec.poincare;
  return out;
}

}  // namespace cohiggs
