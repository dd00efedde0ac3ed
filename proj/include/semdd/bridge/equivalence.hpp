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

// Cross-species equivalent subjects: the comparable-age query, generated for
// any registered map.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdd/bridge/age_map.hpp"
#include "semdd/rdf/graph_store.hpp"

namespace semdd::bridge {

// How subjects of one species are identified and which units their
// ncit:age values carry.
struct SpeciesProfile {
  std::string species;
  std::string id_predicate;  // qualified name
  std::string age_units;
};

// Sprague-Dawley: cuci:animalNumber, postnatal days.
// Homo sapiens: ncit:subjectID, postnatal years.
const std::vector<SpeciesProfile>& default_species_profiles();
std::optional<SpeciesProfile> find_profile(std::string_view species,
                                           const std::vector<SpeciesProfile>& profiles = default_species_profiles());

struct EquivalencePair {
  std::string from_subject;
  double from_age = 0;
  std::string from_units;
  double mapped_age = 0;
  std::string mapped_units;
  std::string to_subject;
  double to_age = 0;
  std::string to_units;
  std::string map_name;
  double tolerance = 0;
};

class EquivalenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// SPARQL text for `map` and `tolerance`. Tolerance 0 filters with `=`,
// anything else with |to_age - mapped_age| <= tolerance. Projects
// ?from_id ?from_age ?mapped_age ?to_id ?to_age.
std::string equivalence_query(const AgeMap& map, double tolerance,
                              const std::vector<SpeciesProfile>& profiles = default_species_profiles());

// Runs equivalence_query. Throws EquivalenceError for a negative tolerance,
// unknown species, or map units that disagree with the species' age units.
std::vector<EquivalencePair> equivalent_subjects(const rdf::GraphStore& store, const AgeMap& map, double tolerance,
                                                 const std::vector<SpeciesProfile>& profiles =
                                                     default_species_profiles());

// Number formatting used in generated queries: always a decimal literal.
std::string decimal_literal(double v);

}  // namespace semdd::bridge
