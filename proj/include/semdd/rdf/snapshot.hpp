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

// Loading Turtle documents into a store and whole-store persistence.
//
// A snapshot directory holds one Turtle file per named graph plus
// `manifest.json`:
//
//   {
//     "format": "semdd-snapshot/1",
//     "prefixes": {"prov": "http://www.w3.org/ns/prov#", ...},
//     "blank_scope_counter": 3,
//     "graphs": [{"iri": "urn:...", "file": "graph-0000.ttl", "triples": 14}]
//   }

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semdd/rdf/graph_store.hpp"

namespace semdd::rdf {

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses `text` and inserts its triples into `graph`. Blank node labels are
// rewritten to store-unique labels; prefixes the store does not know yet are
// registered. Returns the number of new triples. Throws turtle::ParseError.
std::size_t load_turtle(GraphStore& store, std::string_view text, std::string_view graph);
std::size_t load_turtle_file(GraphStore& store, const std::filesystem::path& file,
                             std::string_view graph);

void save_snapshot(const GraphStore& store, const std::filesystem::path& dir);
GraphStore load_snapshot(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, std::string_view contents);

}  // namespace semdd::rdf
