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

// Repeated timed queries over synthetic graphs.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "semdd/rdf/graph_store.hpp"

namespace semdd::bench {

struct GraphSpec {
  std::string name;
  std::string shape;
  std::size_t triples = 0;
};

struct BenchQuery {
  std::string label;
  std::string graph;  // GraphSpec name
  std::string text;
};

struct BenchmarkSpec {
  std::vector<GraphSpec> graphs;
  std::vector<BenchQuery> queries;
  int repetitions = 10;
  int warmup = 1;
  std::uint64_t seed = 42;
  bool optimize = true;
};

// Throws std::invalid_argument on a malformed spec (repetitions < 2,
// unknown graph names, ...).
BenchmarkSpec bench_spec_from_json(const nlohmann::json& j);
BenchmarkSpec load_bench_spec(std::string_view json_text);
nlohmann::json to_json(const BenchmarkSpec& spec);

struct BenchmarkRecord {
  std::string label;
  std::size_t graph_size = 0;
  std::size_t return_size = 0;
  double elapsed_ms = 0;
};

struct BenchOutcome {
  std::vector<BenchmarkRecord> records;
  std::vector<std::string> errors;  // one per failed label
};

// Called after each graph is synthesized and after each label completes.
using BenchProgress = std::function<void(const std::string& message)>;

// Synthesizes each graph into its own store (dropped after its last query)
// and times `repetitions` executions per query after `warmup` untimed ones.
// Only plan execution is timed.
BenchOutcome run_bench(const BenchmarkSpec& spec, const BenchProgress& progress = {});

// Same, against caller-provided stores keyed by graph name.
BenchOutcome run_bench(const BenchmarkSpec& spec, const std::map<std::string, const rdf::GraphStore*>& stores,
                       const BenchProgress& progress = {});

struct QuerySummary {
  std::string label;
  std::size_t graph_size = 0;
  std::size_t return_size = 0;
  std::size_t n = 0;
  double mean_ms = 0;
  double sd_ms = 0;  // sample SD
};

// One row per label in order of first appearance. Labels with fewer than two
// records get sd_ms = NaN.
std::vector<QuerySummary> summarize(const std::vector<BenchmarkRecord>& records);

// Columns: label, graph_size, return_size, elapsed_ms.
std::string records_to_csv(const std::vector<BenchmarkRecord>& records);
std::vector<BenchmarkRecord> records_from_csv(std::string_view text);

}  // namespace semdd::bench
