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

// Shared fixture: 3 rodents and 4 humans pushed through the built-in
// schemas, plus helpers for reading repository data files.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semdd/rdf/graph_store.hpp"

namespace semdd::testkit {

std::string data_path(const std::string& relative);
std::string read_data(const std::string& relative);

inline const std::string kRodentGraph = "http://conte.uci.edu/graph/rodent-imaging";
inline const std::string kHumanGraph = "http://conte.uci.edu/graph/human-assessment";
inline const std::string kHeartGraph = "http://conte.uci.edu/graph/heart-rate";

// ETL of data/fixtures/*.csv into the three graphs above.
void load_fixture(rdf::GraphStore& store);
rdf::GraphStore fixture_store();

// The rodent/child age-matching query, text as shipped in data/queries.
std::string age_match_query();

// Expected (rodent id, child id) pairs of the fixture, computed by brute
// force over the fixture CSVs with the rodent-to-human formula.
std::vector<std::pair<std::string, std::string>> brute_force_age_pairs();

}  // namespace semdd::testkit
