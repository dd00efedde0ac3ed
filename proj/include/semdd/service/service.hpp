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

// Transport-independent service operations. The HTTP layer in http.hpp is a
// thin JSON adapter over this class.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/bridge/age_map.hpp"
#include "semdd/bridge/equivalence.hpp"
#include "semdd/query/results.hpp"
#include "semdd/rdf/graph_store.hpp"
#include "semdd/service/catalog.hpp"

namespace semdd::service {

// One graph of the manifest: either a Turtle file or a CSV table pushed
// through an object-model schema (built-in name or JSON file).
struct GraphSource {
  std::string graph;
  std::string turtle;
  std::string csv;
  std::string schema;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = ".";
  std::vector<GraphSource> graphs;
  std::size_t result_cap = 100000;
};

// Relative paths in the manifest resolve against `base` (the config file's
// directory) when data_dir itself is relative.
ServiceConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base = {});
ServiceConfig load_config(const std::filesystem::path& file);

class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, std::string message)
      : std::runtime_error(message), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }
  std::optional<std::size_t> line;
  std::optional<std::size_t> column;
  nlohmann::json to_json() const;

 private:
  int status_;
  std::string code_;
};

struct SubjectRow {
  std::string subject_id;
  std::string species;
  std::string agent;
  std::vector<std::string> data_types;
  std::vector<std::string> ages;  // lexical forms, ascending by value
};

struct QueryResponse {
  std::string sparql;  // exactly the text executed
  query::ResultTable table;
  double elapsed_ms = 0;
  std::map<std::string, TermDefinition> annotations;
};

struct Selection {
  std::vector<std::string> subjects;
  std::vector<std::string> data_types;
};

class Service {
 public:
  explicit Service(ServiceConfig config = {});

  const ServiceConfig& config() const { return config_; }
  rdf::SharedStore& store() { return store_; }
  const rdf::SharedStore& store() const { return store_; }
  bridge::MapRegistry& maps() { return maps_; }
  const TermRegistry& terms() const { return terms_; }

  // Loads every manifest graph, plus the snapshot in data_dir if one exists.
  void load_configured_graphs();
  std::size_t load_turtle(std::string_view text, std::string_view graph);
  std::size_t load_triples(const std::vector<rdf::Triple>& triples, std::string_view graph);

  // Sorted by (species, subject id).
  std::vector<SubjectRow> list_subjects() const;

  QueryResponse run_query(const std::string& text) const;
  QueryResponse run_template(const std::string& id, const nlohmann::json& params) const;
  std::string export_csv(const std::string& text) const;
  std::string export_csv(const Selection& selection) const;
  TermDefinition term_definition(std::string_view qname) const;
  nlohmann::json map_catalog() const;
  nlohmann::json cross_species(const std::string& map, double tolerance) const;

 private:
  ServiceConfig config_;
  rdf::SharedStore store_;
  bridge::MapRegistry maps_;
  TermRegistry terms_;
};

nlohmann::json to_json(const SubjectRow& row);
nlohmann::json to_json(const std::vector<SubjectRow>& rows);
nlohmann::json to_json(const QueryResponse& response);
Selection selection_from_json(const nlohmann::json& j);

}  // namespace semdd::service
