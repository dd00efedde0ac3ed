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

// Parsed query and its algebra tree.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semdd/rdf/term.hpp"

namespace semdd::query {

// Variable names are stored without the leading '?'.
struct Variable {
  std::string name;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, rdf::Term>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// s p1/p2/.../pn o
struct PathPattern {
  PatternTerm subject;
  std::vector<rdf::Term> steps;
  PatternTerm object;
  friend bool operator==(const PathPattern&, const PathPattern&) = default;
};

enum class ExprKind : std::uint8_t { Constant, Variable, Unary, Binary, If, Aggregate };

enum class Op : std::uint8_t {
  // unary
  Not, Negate, Plus,
  // binary
  Or, And, Eq, Ne, Lt, Le, Gt, Ge, Add, Sub, Mul, Div,
};

enum class AggregateFn : std::uint8_t { Count, Sum, Avg, Min, Max };

struct Expr {
  ExprKind kind = ExprKind::Constant;
  Op op = Op::Not;
  AggregateFn aggregate = AggregateFn::Count;
  bool distinct = false;     // aggregates
  bool count_star = false;   // COUNT(*)
  rdf::Term constant;        // Constant
  std::string variable;      // Variable
  int slot = -1;             // Variable: row slot, resolved by the planner
  int aggregate_index = -1;  // Aggregate: index into the group's results
  std::vector<Expr> args;

  static Expr make_constant(rdf::Term t);
  static Expr make_variable(std::string name);
  static Expr make_unary(Op op, Expr arg);
  static Expr make_binary(Op op, Expr lhs, Expr rhs);
  static Expr make_if(Expr cond, Expr then_branch, Expr else_branch);

  bool has_aggregate() const;
  // Variables referenced outside aggregates (and, with `include_aggregated`,
  // inside them too).
  void collect_variables(std::set<std::string>& out, bool include_aggregated = true) const;
};

std::string to_string(const Expr& e);

struct FilterClause {
  Expr condition;
};

struct BindClause {
  Expr expr;
  Variable target;
};

using GroupElement = std::variant<TriplePattern, PathPattern, FilterClause, BindClause>;

struct SelectItem {
  Variable var;
  std::optional<Expr> expr;
};

struct OrderKey {
  Expr expr;
  bool descending = false;
};

// ---------------------------------------------------------------------------
// Algebra

struct AlgebraNode;
using AlgebraPtr = std::shared_ptr<const AlgebraNode>;

enum class AlgebraOp : std::uint8_t {
  Bgp, SequencePath, Filter, Extend, Join, Project, Distinct, OrderBy, Slice, Group,
};

struct AlgebraNode {
  AlgebraOp op = AlgebraOp::Bgp;
  std::vector<AlgebraPtr> children;
  std::vector<TriplePattern> patterns;  // Bgp
  std::optional<PathPattern> path;      // SequencePath
  std::vector<Expr> exprs;              // Filter (1), Extend (1), Group aggregates
  std::vector<Variable> vars;           // Extend target, Project, Group keys
  std::vector<OrderKey> order;          // OrderBy
  std::size_t offset = 0;               // Slice
  std::optional<std::size_t> limit;     // Slice
};

std::size_t count_nodes(const AlgebraNode& root, AlgebraOp op);
// S-expression rendering, e.g. (project (?x) (bgp ...)).
std::string to_string(const AlgebraNode& root);

// ---------------------------------------------------------------------------

struct Query {
  std::string text;
  std::vector<std::pair<std::string, std::string>> prefix_decls;
  bool distinct = false;
  bool select_all = false;
  std::vector<SelectItem> select;
  std::vector<GroupElement> where;
  std::vector<Variable> group_by;
  std::vector<OrderKey> order_by;
  std::size_t offset = 0;
  std::optional<std::size_t> limit;
  AlgebraPtr algebra;

  bool is_grouped() const;
  // Variables bound somewhere in WHERE, in order of first appearance.
  std::vector<std::string> where_variables() const;
  // Column names of the result table.
  std::vector<std::string> projected_variables() const;
};

// Builds the algebra for a parsed query (called by the parser).
AlgebraPtr build_algebra(const Query& q);

std::string to_string(const PatternTerm& t);
std::string to_string(const TriplePattern& t);
std::string to_string(const PathPattern& t);

}  // namespace semdd::query
