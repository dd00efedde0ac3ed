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

#include "semdd/prov/builtin_schemas.hpp"

#include <array>
#include <utility>

namespace semdd::prov {

namespace {

// ROI attribute names (region, slice, hemisphere, area, faMean) are our own
// fixture vocabulary, not a published model.
constexpr std::string_view kRodentImaging = R"json({
  "name": "rodent-imaging",
  "description": "Rodent DTI segmentation: animal agent, early-life stressor, demographics and ROI tracing statistics. One CSV row per animal x region x slice x hemisphere.",
  "namespaces": {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "prov": "http://www.w3.org/ns/prov#",
    "ncit": "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#",
    "cuci": "http://conte.uci.edu/terms#",
    "conte": "http://conte.uci.edu/id/"
  },
  "nodes": [
    {
      "id": "animal",
      "kind": "agent",
      "iri": "conte:rodent/{animalNumber}",
      "attributes": [
        {"predicate": "ncit:species", "column": "species", "datatype": "xsd:string"},
        {"predicate": "cuci:animalNumber", "column": "animalNumber", "datatype": "xsd:string"}
      ]
    },
    {
      "id": "assessment",
      "kind": "activity",
      "iri": "conte:rodent/{animalNumber}/assessment",
      "description": "One assessment activity per animal."
    },
    {
      "id": "demographics",
      "kind": "entity",
      "iri": "conte:rodent/{animalNumber}/demographics",
      "requires": ["age"],
      "attributes": [
        {"predicate": "ncit:age", "column": "age", "datatype": "xsd:integer", "units": "postnatal days"}
      ]
    },
    {
      "id": "stressor",
      "kind": "entity",
      "iri": "conte:rodent/{animalNumber}/early-life-stressor",
      "types": ["cuci:EarlyLifeStressor"],
      "requires": ["condition"],
      "attributes": [
        {"predicate": "cuci:condition", "column": "condition", "datatype": "xsd:string"}
      ]
    },
    {
      "id": "roi_tracing",
      "kind": "activity",
      "iri": "conte:rodent/{animalNumber}/roi-tracing",
      "requires": ["region"]
    },
    {
      "id": "roi_slice",
      "kind": "entity",
      "iri": "conte:rodent/{animalNumber}/roi/{region}/slice/{slice}",
      "types": ["cuci:RoiSliceStatistics"],
      "attributes": [
        {"predicate": "cuci:region", "column": "region", "datatype": "xsd:string"},
        {"predicate": "cuci:slice", "column": "slice", "datatype": "xsd:integer"}
      ]
    },
    {
      "id": "roi_slice_hemisphere",
      "kind": "entity",
      "iri": "conte:rodent/{animalNumber}/roi/{region}/slice/{slice}/{hemisphere}",
      "types": ["cuci:RoiSliceHemisphereStatistics"],
      "attributes": [
        {"predicate": "cuci:region", "column": "region", "datatype": "xsd:string"},
        {"predicate": "cuci:slice", "column": "slice", "datatype": "xsd:integer"},
        {"predicate": "cuci:hemisphere", "column": "hemisphere", "datatype": "xsd:string"},
        {"predicate": "cuci:area", "column": "area", "datatype": "xsd:decimal", "units": "mm^2"},
        {"predicate": "cuci:faMean", "column": "faMean", "datatype": "xsd:decimal"}
      ]
    }
  ],
  "edges": [
    {"from": "assessment", "relation": "wasAssociatedWith", "to": "animal"},
    {"from": "demographics", "relation": "wasGeneratedBy", "to": "assessment"},
    {"from": "stressor", "relation": "wasGeneratedBy", "to": "assessment"},
    {"from": "roi_tracing", "relation": "wasAssociatedWith", "to": "animal"},
    {"from": "roi_slice", "relation": "wasGeneratedBy", "to": "roi_tracing"},
    {"from": "roi_slice_hemisphere", "relation": "wasGeneratedBy", "to": "roi_tracing"}
  ]
})json";

constexpr std::string_view kHumanAssessment = R"json({
  "name": "human-assessment",
  "description": "Human subject agent, assessment activity and demographics entity carrying the age.",
  "namespaces": {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "prov": "http://www.w3.org/ns/prov#",
    "ncit": "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#",
    "cuci": "http://conte.uci.edu/terms#",
    "conte": "http://conte.uci.edu/id/"
  },
  "nodes": [
    {
      "id": "subject",
      "kind": "agent",
      "iri": "conte:human/{subjectID}",
      "attributes": [
        {"predicate": "ncit:species", "value": "Homo sapiens", "datatype": "xsd:string"},
        {"predicate": "ncit:subjectID", "column": "subjectID", "datatype": "xsd:string"}
      ]
    },
    {
      "id": "assessment",
      "kind": "activity",
      "iri": "conte:human/{subjectID}/assessment"
    },
    {
      "id": "demographics",
      "kind": "entity",
      "iri": "conte:human/{subjectID}/demographics",
      "requires": ["age"],
      "attributes": [
        {"predicate": "ncit:age", "column": "age", "datatype": "xsd:decimal", "units": "postnatal years"}
      ]
    }
  ],
  "edges": [
    {"from": "assessment", "relation": "wasAssociatedWith", "to": "subject"},
    {"from": "demographics", "relation": "wasGeneratedBy", "to": "assessment"}
  ]
})json";

// The subject node repeats the human-assessment template so both graphs name
// the same agent for a given subjectID.
constexpr std::string_view kHeartRate = R"json({
  "name": "heart-rate",
  "description": "Heart-rate recordings: one entity per subject and time point.",
  "namespaces": {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "prov": "http://www.w3.org/ns/prov#",
    "ncit": "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#",
    "cuci": "http://conte.uci.edu/terms#",
    "conte": "http://conte.uci.edu/id/"
  },
  "nodes": [
    {
      "id": "subject",
      "kind": "agent",
      "iri": "conte:human/{subjectID}",
      "attributes": [
        {"predicate": "ncit:species", "value": "Homo sapiens", "datatype": "xsd:string"},
        {"predicate": "ncit:subjectID", "column": "subjectID", "datatype": "xsd:string"}
      ]
    },
    {
      "id": "recording",
      "kind": "activity",
      "iri": "conte:human/{subjectID}/heart-rate-recording",
      "types": ["cuci:HeartRateRecording"]
    },
    {
      "id": "measurement",
      "kind": "entity",
      "iri": "conte:human/{subjectID}/heart-rate/{timePoint}",
      "types": ["cuci:HeartRateMeasurement"],
      "requires": ["heartRate"],
      "attributes": [
        {"predicate": "cuci:timePoint", "column": "timePoint", "datatype": "xsd:integer"},
        {"predicate": "cuci:heartRate", "column": "heartRate", "datatype": "xsd:decimal", "units": "beats per minute"}
      ]
    }
  ],
  "edges": [
    {"from": "recording", "relation": "wasAssociatedWith", "to": "subject"},
    {"from": "measurement", "relation": "wasGeneratedBy", "to": "recording"}
  ]
})json";

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kSchemas{{
    {"rodent-imaging", kRodentImaging},
    {"human-assessment", kHumanAssessment},
    {"heart-rate", kHeartRate},
}};

}  // namespace

std::vector<std::string> builtin_schema_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : kSchemas) out.emplace_back(name);
  return out;
}

std::string_view builtin_schema_text(std::string_view name) {
  for (const auto& [n, text] : kSchemas) {
    if (n == name) return text;
  }
  return {};
}

std::optional<ObjectModelSchema> builtin_schema(std::string_view name) {
  auto text = builtin_schema_text(name);
  if (text.empty()) return std::nullopt;
  return load_schema(text);
}

std::vector<ObjectModelSchema> builtin_schemas() {
  std::vector<ObjectModelSchema> out;
  for (const auto& [name, text] : kSchemas) out.push_back(load_schema(text));
  return out;
}

}  // namespace semdd::prov
