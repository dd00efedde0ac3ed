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

// Random graphs and queries for oracle comparison and round-trip tests.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "semdd/rdf/graph_store.hpp"

namespace semdd::testkit {

struct RandomGraph {
  // (graph name, triple); a triple may appear in several graphs.
  std::vector<std::pair<std::string, rdf::Triple>> quads;
  std::vector<rdf::Triple> triples() const;
  void load_into(rdf::GraphStore& store) const;
};

// Vocabulary: ex:s*, ex:p0..ex:p5, a few blank nodes, xsd:integer 0..9,
// xsd:decimal x.5 and short strings. No value has two lexical forms, so
// results do not depend on which side of a value-space join is kept.
RandomGraph random_graph(std::mt19937_64& rng, std::size_t triples, std::size_t graphs = 2);

// Query over the random-graph vocabulary. `ordered` is set when the
// row order is fully determined (ORDER BY over every projected variable).
struct RandomQuery {
  std::string text;
  bool ordered = false;
  // ORDER BY keys as (projected column, descending).
  std::vector<std::pair<std::string, bool>> order_columns;
};
RandomQuery random_query(std::mt19937_64& rng);

// Graphs exercising the Turtle writer: odd strings, language tags, numeric
// forms, blank nodes, IRIs needing escapes.
std::vector<rdf::Triple> random_turtle_graph(std::mt19937_64& rng, std::size_t triples);

}  // namespace semdd::testkit
