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

#include "semdd/bridge/age_map.hpp"

#include <cmath>
#include <mutex>

namespace semdd::bridge {

double map_age(const AgeMap& map, double age) {
  if (!std::isfinite(age)) throw std::domain_error("age must be finite");
  if (age < map.threshold) return 0.0;
  return map.intercept + map.slope * age;
}

std::vector<std::string> validate_map(const AgeMap& m) {
  std::vector<std::string> errors;
  if (m.name.empty()) errors.push_back("map name is empty");
  if (m.from_species.empty() || m.to_species.empty()) errors.push_back("species must be non-empty");
  if (!std::isfinite(m.threshold) || !std::isfinite(m.intercept) || !std::isfinite(m.slope)) {
    errors.push_back("coefficients must be finite");
  }
  if (!(m.slope > 0)) errors.push_back("slope must be positive");
  if (m.input_units.empty() || m.output_units.empty()) errors.push_back("units must be non-empty");
  return errors;
}

AgeMap default_human_to_rodent() {
  return AgeMap{std::string(kHumanToRodent),
                "Homo sapiens",
                "Sprague-Dawley",
                0.0,
                7.5,
                2.1,
                "postnatal years",
                "postnatal days",
                "Default gross linear map, human age (years) to rodent postnatal day: "
                "7.5 + 2.1 * age for age >= 0."};
}

AgeMap default_rodent_to_human() {
  return AgeMap{std::string(kRodentToHuman),
                "Sprague-Dawley",
                "Homo sapiens",
                7.0,
                -3.5,
                0.5,
                "postnatal days",
                "postnatal years",
                "Default gross linear map, rodent postnatal day to human age (years): "
                "-3.5 + 0.5 * age for age >= 7, otherwise 0."};
}

nlohmann::json to_json(const AgeMap& m) {
  return {{"name", m.name},           {"from_species", m.from_species}, {"to_species", m.to_species},
          {"threshold", m.threshold}, {"intercept", m.intercept},       {"slope", m.slope},
          {"input_units", m.input_units}, {"output_units", m.output_units}, {"citation", m.citation}};
}

AgeMap age_map_from_json(const nlohmann::json& j) {
  try {
    AgeMap m;
    m.name = j.at("name").get<std::string>();
    m.from_species = j.at("from_species").get<std::string>();
    m.to_species = j.at("to_species").get<std::string>();
    m.threshold = j.at("threshold").get<double>();
    m.intercept = j.at("intercept").get<double>();
    m.slope = j.at("slope").get<double>();
    m.input_units = j.at("input_units").get<std::string>();
    m.output_units = j.at("output_units").get<std::string>();
    m.citation = j.value("citation", std::string());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw MapError(std::string("malformed age map: ") + e.what());
  }
}

MapRegistry::MapRegistry(const MapRegistry& other) {
  std::shared_lock lock(other.mutex_);
  maps_ = other.maps_;
}

MapRegistry& MapRegistry::operator=(const MapRegistry& other) {
  if (this == &other) return *this;
  std::map<std::string, AgeMap, std::less<>> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.maps_;
  }
  std::unique_lock lock(mutex_);
  maps_ = std::move(copy);
  return *this;
}

MapRegistry MapRegistry::with_defaults() {
  MapRegistry r;
  r.register_map(default_human_to_rodent());
  r.register_map(default_rodent_to_human());
  return r;
}

std::string MapRegistry::register_map(AgeMap map) {
  auto errors = validate_map(map);
  if (!errors.empty()) {
    std::string msg = "invalid age map '" + map.name + "':";
    for (const auto& e : errors) msg += " " + e + ";";
    throw MapError(msg);
  }
  std::unique_lock lock(mutex_);
  if (maps_.contains(map.name)) throw MapError("age map '" + map.name + "' is already registered");
  std::string name = map.name;
  maps_.emplace(name, std::move(map));
  return name;
}

AgeMap MapRegistry::get(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = maps_.find(name);
  if (it == maps_.end()) throw MapError("unknown age map '" + std::string(name) + "'");
  return it->second;
}

bool MapRegistry::contains(std::string_view name) const {
  std::shared_lock lock(mutex_);
  return maps_.find(name) != maps_.end();
}

std::vector<AgeMap> MapRegistry::list() const {
  std::shared_lock lock(mutex_);
  std::vector<AgeMap> out;
  for (const auto& [name, m] : maps_) out.push_back(m);
  return out;
}

nlohmann::json MapRegistry::catalog() const {
  nlohmann::json maps = nlohmann::json::array();
  for (const auto& m : list()) maps.push_back(to_json(m));
  return {{"maps", std::move(maps)}};
}

MapRegistry MapRegistry::from_catalog(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("maps") || !j["maps"].is_array()) {
    throw MapError("map catalog must be an object with a 'maps' array");
  }
  MapRegistry r;
  for (const auto& m : j["maps"]) r.register_map(age_map_from_json(m));
  return r;
}

}  // namespace semdd::bridge
