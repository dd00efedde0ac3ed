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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "semdd/query/planner.hpp"
#include "semdd/query/results.hpp"
#include "semdd/rdf/graph_store.hpp"

namespace semdd::query {

struct ExecutionStats {
  std::vector<std::size_t> step_rows;  // rows after each plan step
  std::size_t result_rows = 0;
  double elapsed_ms = 0;  // plan execution only, parsing excluded

  std::size_t peak_rows() const;
  std::size_t total_intermediate() const;
};

struct QueryResult {
  ResultTable table;
  ExecutionStats stats;
};

// Single-threaded; any number of executions may share a store as long as no
// writer runs at the same time.
QueryResult execute(const Plan& plan, const rdf::GraphStore& store);

// Parse, plan and execute.
QueryResult run_query(std::string_view text, const rdf::GraphStore& store, PlanOptions options = {});

// One line per step with estimated and, given stats, actual row counts.
std::string explain(const Plan& plan, const ExecutionStats* stats = nullptr);

}  // namespace semdd::query
