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

// Namespace registry. Every namespace IRI the system hard-codes lives here.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semdd::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kProv = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kNcit = "http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#";
// Project-local terms that no existing terminology defines.
inline constexpr std::string_view kCuci = "http://conte.uci.edu/terms#";
// Instance data minted by the ETL.
inline constexpr std::string_view kConte = "http://conte.uci.edu/id/";

// Graph used for documents loaded without an explicit graph IRI.
inline constexpr std::string_view kDefaultGraph = "urn:semdd:graph:default";

inline std::string rdf(std::string_view local) { return std::string(kRdf).append(local); }
inline std::string xsd(std::string_view local) { return std::string(kXsd).append(local); }
inline std::string prov(std::string_view local) { return std::string(kProv).append(local); }
inline std::string ncit(std::string_view local) { return std::string(kNcit).append(local); }
inline std::string cuci(std::string_view local) { return std::string(kCuci).append(local); }

inline const std::string kRdfType = rdf("type");
inline const std::string kRdfLangString = rdf("langString");
inline const std::string kXsdString = xsd("string");
inline const std::string kXsdInteger = xsd("integer");
inline const std::string kXsdDecimal = xsd("decimal");
inline const std::string kXsdDouble = xsd("double");
inline const std::string kXsdBoolean = xsd("boolean");

// (prefix, namespace) pairs registered in every new store.
inline std::vector<std::pair<std::string, std::string>> standard_prefixes() {
  return {{"rdf", std::string(kRdf)},   {"rdfs", std::string(kRdfs)},
          {"xsd", std::string(kXsd)},   {"prov", std::string(kProv)},
          {"ncit", std::string(kNcit)}, {"cuci", std::string(kCuci)},
          {"conte", std::string(kConte)}};
}

}  // namespace semdd::vocab
