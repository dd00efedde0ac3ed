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

// Synthetic graphs of an exact size, shaped like the built-in object models.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semdd/prov/csv.hpp"
#include "semdd/rdf/graph_store.hpp"

namespace semdd::bench {

// Accepts the built-in schema names plus the aliases "rodent"
// (rodent-imaging) and "human" (human-assessment).
std::string canonical_shape(std::string_view shape);

// Source rows for subject `index`: rodent-imaging has 8 ROI rows per animal,
// heart-rate 4 time points per subject, human-assessment one row.
prov::SourceTable synth_rows(std::string_view shape, std::size_t first, std::size_t count, std::uint64_t seed);

// Triples produced by one subject.
std::size_t template_size(std::string_view shape);

// Inserts exactly `n` triples into `graph`: whole subject replicas plus the
// sorted prefix of one more. Throws std::invalid_argument if n is below
// template_size(shape).
void synth_graph(rdf::GraphStore& store, std::string_view graph, std::size_t n, std::string_view shape,
                 std::uint64_t seed = 42);

}  // namespace semdd::bench
