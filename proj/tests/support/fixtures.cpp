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

#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "semdd/prov/builtin_schemas.hpp"
#include "semdd/prov/csv.hpp"
#include "semdd/prov/transform.hpp"
#include "semdd/rdf/snapshot.hpp"

namespace semdd::testkit {

std::string data_path(const std::string& relative) { return std::string(SEMDD_SOURCE_DIR) + "/data/" + relative; }

std::string read_data(const std::string& relative) { return rdf::read_file(data_path(relative)); }

void load_fixture(rdf::GraphStore& store) {
  const std::pair<const char*, const std::string*> parts[] = {
      {"rodent-imaging", &kRodentGraph}, {"human-assessment", &kHumanGraph}, {"heart-rate", &kHeartGraph}};
  for (const auto& [name, graph] : parts) {
    auto table = prov::parse_csv(read_data(std::string("fixtures/") + name + ".csv"));
    auto triples = prov::transform(table, *prov::builtin_schema(name));
    store.ensure_graph(*graph);
    store.insert_all(*graph, triples);
  }
}

rdf::GraphStore fixture_store() {
  rdf::GraphStore s;
  load_fixture(s);
  return s;
}

std::string age_match_query() { return read_data("queries/rodent-child-age-match.rq"); }

std::vector<std::pair<std::string, std::string>> brute_force_age_pairs() {
  auto rodents = prov::parse_csv(read_data("fixtures/rodent-imaging.csv"));
  auto humans = prov::parse_csv(read_data("fixtures/human-assessment.csv"));
  std::set<std::pair<std::string, double>> rodent_ages;
  for (const auto& r : rodents.rows) rodent_ages.emplace(r[0], std::strtod(r[2].c_str(), nullptr));
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [rid, days] : rodent_ages) {
    double years = days >= 7 ? -3.5 + 0.5 * days : 0.0;
    for (const auto& h : humans.rows) {
      if (std::strtod(h[1].c_str(), nullptr) == years) out.emplace(rid, h[0]);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace semdd::testkit
