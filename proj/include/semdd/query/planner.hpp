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

// Join ordering. A plan is a flat list of scan / filter / extend steps over
// rows of term ids, followed by grouping, ordering and projection.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semdd/query/algebra.hpp"
#include "semdd/rdf/graph_store.hpp"

namespace semdd::query {

enum class StepKind { Scan, Filter, Extend };

struct PlanStep {
  StepKind kind = StepKind::Scan;

  // Scan
  std::array<PatternTerm, 3> pattern;
  std::array<int, 3> slots{-1, -1, -1};            // -1 for constant positions
  std::array<std::vector<rdf::TermId>, 3> constants;  // value class of each constant
  int path_index = -1;  // which sequence path this pattern was rewritten from

  // Filter / Extend, variable slots resolved
  Expr expr;
  int target = -1;
  std::vector<int> masked;  // Extend: slots not in scope at the BIND

  // Rows expected after this step.
  double estimate = 0;
};

struct PlanOutput {
  std::string name;
  int slot = -1;             // non-grouped: row slot holding the value
  std::optional<Expr> expr;  // grouped: evaluated per group
};

struct Plan {
  bool optimized = true;
  std::vector<std::string> slot_names;
  std::vector<PlanStep> steps;

  bool grouped = false;
  std::vector<int> group_slots;
  std::vector<Expr> aggregates;  // referenced by Expr::aggregate_index
  // Non-grouped SELECT expressions, evaluated after the steps.
  std::vector<PlanStep> select_extends;
  std::vector<PlanOutput> outputs;
  // Grouped queries order over outputs followed by unprojected group keys.
  std::vector<int> extra_key_slots;
  std::vector<OrderKey> order;

  bool distinct = false;
  std::size_t offset = 0;
  std::optional<std::size_t> limit;

  rdf::PrefixMap prefixes;  // for explain()

  std::vector<std::string> variables() const;
  std::size_t scan_count() const;
};

struct PlanOptions {
  bool optimize = true;
};

// Fresh variables introduced by sequence-path rewriting. '#' cannot start a
// variable name in query text, so these never clash with user variables.
std::string path_variable(std::size_t path, std::size_t step);

Plan plan_query(const Query& q, const rdf::GraphStore& store, PlanOptions options = {});

}  // namespace semdd::query
