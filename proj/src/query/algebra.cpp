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

#include "semdd/query/algebra.hpp"

#include <algorithm>

namespace semdd::query {

Expr Expr::make_constant(rdf::Term t) {
  Expr e;
  e.kind = ExprKind::Constant;
  e.constant = std::move(t);
  return e;
}

Expr Expr::make_variable(std::string name) {
  Expr e;
  e.kind = ExprKind::Variable;
  e.variable = std::move(name);
  return e;
}

Expr Expr::make_unary(Op op, Expr arg) {
  Expr e;
  e.kind = ExprKind::Unary;
  e.op = op;
  e.args.push_back(std::move(arg));
  return e;
}

Expr Expr::make_binary(Op op, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = ExprKind::Binary;
  e.op = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::make_if(Expr cond, Expr then_branch, Expr else_branch) {
  Expr e;
  e.kind = ExprKind::If;
  e.args.push_back(std::move(cond));
  e.args.push_back(std::move(then_branch));
  e.args.push_back(std::move(else_branch));
  return e;
}

bool Expr::has_aggregate() const {
  if (kind == ExprKind::Aggregate) return true;
  return std::any_of(args.begin(), args.end(), [](const Expr& a) { return a.has_aggregate(); });
}

void Expr::collect_variables(std::set<std::string>& out, bool include_aggregated) const {
  if (kind == ExprKind::Variable) out.insert(variable);
  if (kind == ExprKind::Aggregate && !include_aggregated) return;
  for (const auto& a : args) a.collect_variables(out, include_aggregated);
}

namespace {

const char* op_symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::Negate: return "-";
    case Op::Plus: return "+";
    case Op::Or: return "||";
    case Op::And: return "&&";
    case Op::Eq: return "=";
    case Op::Ne: return "!=";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
  }
  return "?";
}

const char* aggregate_name(AggregateFn fn) {
  switch (fn) {
    case AggregateFn::Count: return "COUNT";
    case AggregateFn::Sum: return "SUM";
    case AggregateFn::Avg: return "AVG";
    case AggregateFn::Min: return "MIN";
    case AggregateFn::Max: return "MAX";
  }
  return "?";
}

const char* op_name(AlgebraOp op) {
  switch (op) {
    case AlgebraOp::Bgp: return "bgp";
    case AlgebraOp::SequencePath: return "path";
    case AlgebraOp::Filter: return "filter";
    case AlgebraOp::Extend: return "extend";
    case AlgebraOp::Join: return "join";
    case AlgebraOp::Project: return "project";
    case AlgebraOp::Distinct: return "distinct";
    case AlgebraOp::OrderBy: return "order";
    case AlgebraOp::Slice: return "slice";
    case AlgebraOp::Group: return "group";
  }
  return "?";
}

AlgebraPtr make_node(AlgebraNode node) { return std::make_shared<const AlgebraNode>(std::move(node)); }

AlgebraPtr wrap(AlgebraOp op, AlgebraPtr child) {
  AlgebraNode n;
  n.op = op;
  n.children.push_back(std::move(child));
  return make_node(std::move(n));
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Constant: return rdf::to_string(e.constant);
    case ExprKind::Variable: return "?" + e.variable;
    case ExprKind::Unary: return std::string(op_symbol(e.op)) + "(" + to_string(e.args[0]) + ")";
    case ExprKind::Binary:
      return "(" + to_string(e.args[0]) + " " + op_symbol(e.op) + " " + to_string(e.args[1]) + ")";
    case ExprKind::If:
      return "IF(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ", " +
             to_string(e.args[2]) + ")";
    case ExprKind::Aggregate: {
      std::string s = std::string(aggregate_name(e.aggregate)) + "(";
      if (e.distinct) s += "DISTINCT ";
      s += e.count_star ? "*" : to_string(e.args[0]);
      return s + ")";
    }
  }
  return "?";
}

std::string to_string(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
  return rdf::to_string(std::get<rdf::Term>(t));
}

std::string to_string(const TriplePattern& t) {
  return to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object);
}

std::string to_string(const PathPattern& t) {
  std::string s = to_string(t.subject) + " ";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (i > 0) s += "/";
    s += rdf::to_string(t.steps[i]);
  }
  return s + " " + to_string(t.object);
}

std::size_t count_nodes(const AlgebraNode& root, AlgebraOp op) {
  std::size_t n = root.op == op ? 1 : 0;
  for (const auto& c : root.children) n += count_nodes(*c, op);
  return n;
}

std::string to_string(const AlgebraNode& root) {
  std::string s = "(";
  s += op_name(root.op);
  switch (root.op) {
    case AlgebraOp::Bgp:
      for (const auto& p : root.patterns) s += " [" + to_string(p) + "]";
      break;
    case AlgebraOp::SequencePath:
      s += " [" + to_string(*root.path) + "]";
      break;
    case AlgebraOp::Filter:
      for (const auto& e : root.exprs) s += " " + to_string(e);
      break;
    case AlgebraOp::Extend:
      s += " ?" + root.vars[0].name + " " + to_string(root.exprs[0]);
      break;
    case AlgebraOp::Project:
    case AlgebraOp::Group:
      s += " (";
      for (std::size_t i = 0; i < root.vars.size(); ++i) s += (i ? " ?" : "?") + root.vars[i].name;
      s += ")";
      for (const auto& e : root.exprs) s += " " + to_string(e);
      break;
    case AlgebraOp::OrderBy:
      for (const auto& k : root.order) s += std::string(k.descending ? " desc " : " asc ") + to_string(k.expr);
      break;
    case AlgebraOp::Slice:
      s += " " + std::to_string(root.offset) + " " + (root.limit ? std::to_string(*root.limit) : "_");
      break;
    case AlgebraOp::Join:
    case AlgebraOp::Distinct:
      break;
  }
  for (const auto& c : root.children) s += " " + to_string(*c);
  return s + ")";
}

bool Query::is_grouped() const {
  if (!group_by.empty()) return true;
  return std::any_of(select.begin(), select.end(),
                     [](const SelectItem& item) { return item.expr && item.expr->has_aggregate(); });
}

std::vector<std::string> Query::where_variables() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  auto add_term = [&](const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) add(v->name);
  };
  for (const auto& el : where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) {
      add_term(tp->subject);
      add_term(tp->predicate);
      add_term(tp->object);
    } else if (const auto* pp = std::get_if<PathPattern>(&el)) {
      add_term(pp->subject);
      add_term(pp->object);
    } else if (const auto* b = std::get_if<BindClause>(&el)) {
      add(b->target.name);
    }
  }
  return out;
}

std::vector<std::string> Query::projected_variables() const {
  if (select_all) return where_variables();
  std::vector<std::string> out;
  for (const auto& item : select) out.push_back(item.var.name);
  return out;
}

AlgebraPtr build_algebra(const Query& q) {
  AlgebraPtr acc;
  std::vector<TriplePattern> bgp;
  std::vector<Expr> filters;

  auto join = [&](AlgebraPtr rhs) {
    if (!acc) {
      acc = std::move(rhs);
      return;
    }
    AlgebraNode n;
    n.op = AlgebraOp::Join;
    n.children = {acc, std::move(rhs)};
    acc = make_node(std::move(n));
  };
  auto flush = [&] {
    if (bgp.empty()) return;
    AlgebraNode n;
    n.op = AlgebraOp::Bgp;
    n.patterns = std::move(bgp);
    bgp.clear();
    join(make_node(std::move(n)));
  };

  for (const auto& el : q.where) {
    if (const auto* tp = std::get_if<TriplePattern>(&el)) {
      bgp.push_back(*tp);
    } else if (const auto* pp = std::get_if<PathPattern>(&el)) {
      flush();
      AlgebraNode n;
      n.op = AlgebraOp::SequencePath;
      n.path = *pp;
      join(make_node(std::move(n)));
    } else if (const auto* b = std::get_if<BindClause>(&el)) {
      flush();
      if (!acc) acc = make_node(AlgebraNode{});
      AlgebraNode n;
      n.op = AlgebraOp::Extend;
      n.children.push_back(acc);
      n.exprs.push_back(b->expr);
      n.vars.push_back(b->target);
      acc = make_node(std::move(n));
    } else if (const auto* f = std::get_if<FilterClause>(&el)) {
      filters.push_back(f->condition);
    }
  }
  flush();
  if (!acc) acc = make_node(AlgebraNode{});

  if (!filters.empty()) {
    AlgebraNode n;
    n.op = AlgebraOp::Filter;
    n.children.push_back(acc);
    n.exprs = std::move(filters);
    acc = make_node(std::move(n));
  }

  if (q.is_grouped()) {
    AlgebraNode n;
    n.op = AlgebraOp::Group;
    n.children.push_back(acc);
    n.vars = q.group_by;
    for (const auto& item : q.select) {
      if (item.expr) n.exprs.push_back(*item.expr);
    }
    acc = make_node(std::move(n));
  } else {
    for (const auto& item : q.select) {
      if (!item.expr) continue;
      AlgebraNode n;
      n.op = AlgebraOp::Extend;
      n.children.push_back(acc);
      n.exprs.push_back(*item.expr);
      n.vars.push_back(item.var);
      acc = make_node(std::move(n));
    }
  }

  if (!q.order_by.empty()) {
    AlgebraNode n;
    n.op = AlgebraOp::OrderBy;
    n.children.push_back(acc);
    n.order = q.order_by;
    acc = make_node(std::move(n));
  }

  {
    AlgebraNode n;
    n.op = AlgebraOp::Project;
    n.children.push_back(acc);
    for (const auto& v : q.projected_variables()) n.vars.push_back(Variable{v});
    acc = make_node(std::move(n));
  }
  if (q.distinct) acc = wrap(AlgebraOp::Distinct, acc);
  if (q.offset > 0 || q.limit) {
    AlgebraNode n;
    n.op = AlgebraOp::Slice;
    n.children.push_back(acc);
    n.offset = q.offset;
    n.limit = q.limit;
    acc = make_node(std::move(n));
  }
  return acc;
}

}  // namespace semdd::query
