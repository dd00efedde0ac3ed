// Copyright 2026 The semdd Authors.
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

// Piecewise-linear cross-species age maps and their registry.

#pragma once

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace semdd::bridge {

// map(x) = intercept + slope * x for x >= threshold, 0 otherwise.
struct AgeMap {
  std::string name;
  std::string from_species;
  std::string to_species;
  double threshold = 0;
  double intercept = 0;
  double slope = 1;
  std::string input_units;
  std::string output_units;
  std::string citation;

  friend bool operator==(const AgeMap&, const AgeMap&) = default;
};

inline constexpr std::string_view kHumanToRodent = "human-to-rodent";
inline constexpr std::string_view kRodentToHuman = "rodent-to-human";

// Throws std::domain_error for non-finite ages.
double map_age(const AgeMap& map, double age);

// Reasons `map` is unusable; empty if it is fine.
std::vector<std::string> validate_map(const AgeMap& map);

// The two default gross linear maps between human years and rodent
// postnatal days. They are independent approximations, not inverses.
AgeMap default_human_to_rodent();
AgeMap default_rodent_to_human();

nlohmann::json to_json(const AgeMap& map);
AgeMap age_map_from_json(const nlohmann::json& j);

class MapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Safe for concurrent readers; register_map takes an exclusive lock.
class MapRegistry {
 public:
  MapRegistry() = default;
  MapRegistry(const MapRegistry& other);
  MapRegistry& operator=(const MapRegistry& other);

  static MapRegistry with_defaults();

  // Throws MapError on a duplicate name or an invalid map.
  std::string register_map(AgeMap map);
  // Throws MapError for unknown names.
  AgeMap get(std::string_view name) const;
  bool contains(std::string_view name) const;
  // Sorted by name.
  std::vector<AgeMap> list() const;

  // {"maps": [...]}
  nlohmann::json catalog() const;
  static MapRegistry from_catalog(const nlohmann::json& j);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, AgeMap, std::less<>> maps_;
};

}  // namespace semdd::bridge
