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

#include "semdd/bridge/equivalence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "semdd/query/executor.hpp"

namespace semdd::bridge {

const std::vector<SpeciesProfile>& default_species_profiles() {
  static const std::vector<SpeciesProfile> profiles{
      {"Sprague-Dawley", "cuci:animalNumber", "postnatal days"},
      {"Homo sapiens", "ncit:subjectID", "postnatal years"},
  };
  return profiles;
}

std::optional<SpeciesProfile> find_profile(std::string_view species, const std::vector<SpeciesProfile>& profiles) {
  for (const auto& p : profiles) {
    if (p.species == species) return p;
  }
  return std::nullopt;
}

std::string decimal_literal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  std::string s(buf, ptr);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

SpeciesProfile require_profile(std::string_view species, const std::vector<SpeciesProfile>& profiles) {
  auto p = find_profile(species, profiles);
  if (!p) throw EquivalenceError("no species profile for '" + std::string(species) + "'");
  return *p;
}

double number(const std::optional<rdf::Term>& t) {
  if (!t) return std::nan("");
  auto n = rdf::numeric_value(*t);
  return n ? static_cast<double>(n->value) : std::nan("");
}

}  // namespace

std::string equivalence_query(const AgeMap& map, double tolerance, const std::vector<SpeciesProfile>& profiles) {
  if (!(tolerance >= 0) || !std::isfinite(tolerance)) {
    throw EquivalenceError("tolerance must be a finite number >= 0");
  }
  SpeciesProfile from = require_profile(map.from_species, profiles);
  SpeciesProfile to = require_profile(map.to_species, profiles);

  std::string q;
  q += "SELECT DISTINCT ?from_id ?from_age ?mapped_age ?to_id ?to_age WHERE {\n";
  q += "  ?from_agent rdf:type prov:Agent ;\n";
  q += "    ncit:species " + quote(from.species) + " ;\n";
  q += "    " + from.id_predicate + " ?from_id .\n";
  q += "  ?from_entity prov:wasGeneratedBy/prov:wasAssociatedWith ?from_agent ;\n";
  q += "    ncit:age ?from_age .\n";
  q += "  BIND(IF(?from_age >= " + decimal_literal(map.threshold) + ", (" + decimal_literal(map.intercept) +
       " + " + decimal_literal(map.slope) + " * ?from_age), 0) AS ?mapped_age)\n";
  q += "  ?to_agent rdf:type prov:Agent ;\n";
  q += "    ncit:species " + quote(to.species) + " ;\n";
  q += "    " + to.id_predicate + " ?to_id .\n";
  q += "  ?to_activity prov:wasAssociatedWith ?to_agent .\n";
  q += "  ?to_entity prov:wasGeneratedBy ?to_activity ;\n";
  q += "    ncit:age ?to_age .\n";
  if (tolerance == 0) {
    q += "  FILTER(?to_age = ?mapped_age)\n";
  } else {
    std::string tol = decimal_literal(tolerance);
    q += "  FILTER(?to_age >= ?mapped_age - " + tol + " && ?to_age <= ?mapped_age + " + tol + ")\n";
  }
  q += "}\nORDER BY ?from_id ?to_id\n";
  return q;
}

std::vector<EquivalencePair> equivalent_subjects(const rdf::GraphStore& store, const AgeMap& map, double tolerance,
                                                 const std::vector<SpeciesProfile>& profiles) {
  std::string text = equivalence_query(map, tolerance, profiles);
  SpeciesProfile from = require_profile(map.from_species, profiles);
  SpeciesProfile to = require_profile(map.to_species, profiles);
  if (map.input_units != from.age_units) {
    throw EquivalenceError("map '" + map.name + "' expects " + map.input_units + " but " + from.species +
                           " ages are in " + from.age_units);
  }
  if (map.output_units != to.age_units) {
    throw EquivalenceError("map '" + map.name + "' produces " + map.output_units + " but " + to.species +
                           " ages are in " + to.age_units);
  }

  auto result = query::run_query(text, store);
  std::vector<EquivalencePair> out;
  for (const auto& row : result.table.rows) {
    EquivalencePair p;
    p.from_subject = row[0] ? row[0]->value : "";
    p.from_age = number(row[1]);
    p.from_units = from.age_units;
    p.mapped_age = number(row[2]);
    p.mapped_units = map.output_units;
    p.to_subject = row[3] ? row[3]->value : "";
    p.to_age = number(row[4]);
    p.to_units = to.age_units;
    p.map_name = map.name;
    p.tolerance = tolerance;
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const EquivalencePair& a, const EquivalencePair& b) {
    return std::tie(a.from_subject, a.to_subject) < std::tie(b.from_subject, b.to_subject);
  });
  return out;
}

}  // namespace semdd::bridge
