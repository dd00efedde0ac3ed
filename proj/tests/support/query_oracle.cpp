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

#include "query_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace semdd::testkit {

using query::Expr;
using query::ExprKind;
using query::Op;
using rdf::Term;

namespace {

const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";
const std::string kXsdInteger = kXsd + "integer";
const std::string kXsdDecimal = kXsd + "decimal";
const std::string kXsdDouble = kXsd + "double";

using Binding = std::map<std::string, Term>;

// 0 integer, 1 decimal, 2 double
struct Num {
  int type;
  long double v;
};

std::optional<Num> as_num(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  int type = -1;
  if (t.datatype == kXsdInteger) type = 0;
  if (t.datatype == kXsdDecimal) type = 1;
  if (t.datatype == kXsdDouble) type = 2;
  if (type < 0 || t.value.empty()) return std::nullopt;
  const char* s = t.value.c_str();
  char* end = nullptr;
  long double v = std::strtold(s, &end);
  if (*end != '\0') return std::nullopt;
  if (type == 0 && t.value.find_first_of(".eE") != std::string::npos) return std::nullopt;
  return Num{type, v};
}

Term num_term(int type, long double v) {
  char buf[64];
  if (type == 0) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return Term::literal(buf, kXsd + "integer");
  }
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  std::string s = buf;
  if (type == 1 && s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return Term::literal(s, kXsd + (type == 1 ? "decimal" : "double"));
}

Term bool_term(bool b) { return Term::literal(b ? "true" : "false", kXsd + "boolean"); }

bool is_str(const Term& t) {
  return t.is_literal() && (t.datatype == kXsd + "string" || !t.language.empty());
}
bool is_bool(const Term& t) { return t.is_literal() && t.datatype == kXsd + "boolean"; }
std::optional<bool> bool_of(const Term& t) {
  if (t.value == "true" || t.value == "1") return true;
  if (t.value == "false" || t.value == "0") return false;
  return std::nullopt;
}

bool same_value(const Term& a, const Term& b) {
  if (!a.is_literal() || !b.is_literal()) return a == b;
  auto x = as_num(a), y = as_num(b);
  if (x && y) return x->v == y->v;
  return a == b;
}

std::optional<bool> ebv(const std::optional<Term>& t) {
  if (!t || !t->is_literal()) return std::nullopt;
  if (is_bool(*t)) return bool_of(*t).value_or(false);
  if (t->datatype == kXsd + "integer" || t->datatype == kXsd + "decimal" || t->datatype == kXsd + "double") {
    auto n = as_num(*t);
    return n && n->v != 0 && !std::isnan(n->v);
  }
  if (is_str(*t)) return !t->value.empty();
  return std::nullopt;
}

std::optional<bool> equal(const Term& a, const Term& b) {
  if (!a.is_literal() || !b.is_literal()) return a == b;
  auto x = as_num(a), y = as_num(b);
  if (x && y) return x->v == y->v;
  if (is_bool(a) && is_bool(b) && bool_of(a) && bool_of(b)) return *bool_of(a) == *bool_of(b);
  if (a == b) return true;
  if (x || y || is_str(a) || is_str(b) || is_bool(a) || is_bool(b)) return false;
  return std::nullopt;
}

std::optional<bool> less(const Term& a, const Term& b) {
  if (!a.is_literal() || !b.is_literal()) return std::nullopt;
  auto x = as_num(a), y = as_num(b);
  if (x && y) return x->v < y->v;
  if (a.datatype == kXsd + "string" && b.datatype == kXsd + "string") return a.value < b.value;
  if (is_bool(a) && is_bool(b) && bool_of(a) && bool_of(b)) return !*bool_of(a) && *bool_of(b);
  return std::nullopt;
}

int cmp3(auto a, auto b) { return a < b ? -1 : (b < a ? 1 : 0); }

struct Context {
  const Binding* row = nullptr;
  const std::vector<const Binding*>* group = nullptr;
};

std::optional<Term> eval(const Expr& e, const Context& ctx);

std::optional<Term> aggregate(const Expr& e, const Context& ctx) {
  static const std::vector<const Binding*> none;
  const auto& members = ctx.group ? *ctx.group : none;
  if (e.count_star) {
    if (!e.distinct) return num_term(0, static_cast<long double>(members.size()));
    std::set<Binding> seen;
    for (const auto* m : members) seen.insert(*m);
    return num_term(0, static_cast<long double>(seen.size()));
  }
  std::vector<Term> vals;
  for (const auto* m : members) {
    if (auto v = eval(e.args[0], Context{m, nullptr})) vals.push_back(*v);
  }
  if (e.distinct) {
    std::vector<Term> uniq;
    for (const auto& v : vals) {
      if (std::find(uniq.begin(), uniq.end(), v) == uniq.end()) uniq.push_back(v);
    }
    vals = uniq;
  }
  switch (e.aggregate) {
    case query::AggregateFn::Count: return num_term(0, static_cast<long double>(vals.size()));
    case query::AggregateFn::Sum:
    case query::AggregateFn::Avg: {
      if (vals.empty()) return num_term(0, 0);
      int type = 0;
      long double total = 0;
      for (const auto& v : vals) {
        auto n = as_num(v);
        if (!n) return std::nullopt;
        type = std::max(type, n->type);
        total += n->v;
      }
      if (e.aggregate == query::AggregateFn::Sum) return num_term(type, total);
      return num_term(std::max(type, 1), total / static_cast<long double>(vals.size()));
    }
    case query::AggregateFn::Min:
    case query::AggregateFn::Max: {
      if (vals.empty()) return std::nullopt;
      Term best = vals[0];
      for (const auto& v : vals) {
        int c = oracle_order(v, best);
        if (e.aggregate == query::AggregateFn::Min ? c < 0 : c > 0) best = v;
      }
      return best;
    }
  }
  return std::nullopt;
}

std::optional<Term> eval(const Expr& e, const Context& ctx) {
  switch (e.kind) {
    case ExprKind::Constant: return e.constant;
    case ExprKind::Variable: {
      if (!ctx.row) return std::nullopt;
      auto it = ctx.row->find(e.variable);
      if (it == ctx.row->end()) return std::nullopt;
      return it->second;
    }
    case ExprKind::Aggregate: return aggregate(e, ctx);
    case ExprKind::If: {
      auto c = ebv(eval(e.args[0], ctx));
      if (!c) return std::nullopt;
      return eval(e.args[*c ? 1 : 2], ctx);
    }
    case ExprKind::Unary: {
      if (e.op == Op::Not) {
        auto b = ebv(eval(e.args[0], ctx));
        if (!b) return std::nullopt;
        return bool_term(!*b);
      }
      auto v = eval(e.args[0], ctx);
      if (!v) return std::nullopt;
      auto n = as_num(*v);
      if (!n) return std::nullopt;
      return num_term(n->type, e.op == Op::Negate ? -n->v : n->v);
    }
    case ExprKind::Binary: break;
  }
  if (e.op == Op::And || e.op == Op::Or) {
    bool want = e.op == Op::Or;
    auto l = ebv(eval(e.args[0], ctx));
    auto r = ebv(eval(e.args[1], ctx));
    if ((l && *l == want) || (r && *r == want)) return bool_term(want);
    if (!l || !r) return std::nullopt;
    return bool_term(!want);
  }
  auto l = eval(e.args[0], ctx);
  auto r = eval(e.args[1], ctx);
  if (!l || !r) return std::nullopt;
  switch (e.op) {
    case Op::Eq:
    case Op::Ne: {
      auto eq = equal(*l, *r);
      if (!eq) return std::nullopt;
      return bool_term(e.op == Op::Eq ? *eq : !*eq);
    }
    case Op::Lt: {
      auto x = less(*l, *r);
      return x ? std::optional<Term>(bool_term(*x)) : std::nullopt;
    }
    case Op::Gt: {
      auto x = less(*r, *l);
      return x ? std::optional<Term>(bool_term(*x)) : std::nullopt;
    }
    case Op::Le: {
      auto x = less(*r, *l);
      return x ? std::optional<Term>(bool_term(!*x)) : std::nullopt;
    }
    case Op::Ge: {
      auto x = less(*l, *r);
      return x ? std::optional<Term>(bool_term(!*x)) : std::nullopt;
    }
    default: break;
  }
  auto a = as_num(*l), b = as_num(*r);
  if (!a || !b) return std::nullopt;
  int type = std::max(a->type, b->type);
  switch (e.op) {
    case Op::Add: return num_term(type, a->v + b->v);
    case Op::Sub: return num_term(type, a->v - b->v);
    case Op::Mul: return num_term(type, a->v * b->v);
    case Op::Div:
      type = std::max(type, 1);
      if (b->v == 0 && type != 2) return std::nullopt;
      return num_term(type, a->v / b->v);
    default: return std::nullopt;
  }
}

// Extends `row` so that position `pt` holds `value`; false on conflict.
bool unify(Binding& row, const query::PatternTerm& pt, const Term& value) {
  if (const auto* c = std::get_if<Term>(&pt)) return same_value(*c, value);
  const auto& name = std::get<query::Variable>(pt).name;
  auto it = row.find(name);
  if (it == row.end()) {
    row.emplace(name, value);
    return true;
  }
  return same_value(it->second, value);
}

// unify() without binding anything; lets the scan skip copying rows that
// cannot match.
bool compatible(const Binding& row, const query::PatternTerm& pt, const Term& value) {
  if (const auto* c = std::get_if<Term>(&pt)) return same_value(*c, value);
  auto it = row.find(std::get<query::Variable>(pt).name);
  return it == row.end() || same_value(it->second, value);
}

}  // namespace

int oracle_order(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (!a || !b) return cmp3(a.has_value(), b.has_value());
  auto rank = [](const Term& t) { return t.is_blank() ? 0 : (t.is_iri() ? 1 : 2); };
  if (int c = cmp3(rank(*a), rank(*b))) return c;
  if (!a->is_literal()) return cmp3(a->value, b->value);
  auto x = as_num(*a), y = as_num(*b);
  if (x && y) {
    if (x->v != y->v) return x->v < y->v ? -1 : 1;
  } else if (x || y) {
    return x ? -1 : 1;
  }
  if (int c = cmp3(a->value, b->value)) return c;
  if (int c = cmp3(a->datatype, b->datatype)) return c;
  return cmp3(a->language, b->language);
}

OracleTable oracle_evaluate(const query::Query& q, const std::vector<rdf::Triple>& input, std::size_t row_limit) {
  std::vector<rdf::Triple> data = input;
  std::sort(data.begin(), data.end());
  data.erase(std::unique(data.begin(), data.end()), data.end());

  std::vector<Binding> rows{Binding{}};
  std::vector<const Expr*> filters;
  auto check = [&](std::size_t n) {
    if (n > row_limit) throw std::length_error("oracle row limit exceeded");
  };

  for (const auto& el : q.where) {
    if (const auto* tp = std::get_if<query::TriplePattern>(&el)) {
      std::vector<Binding> next;
      for (const auto& row : rows) {
        for (const auto& t : data) {
          if (!compatible(row, tp->predicate, t.predicate) || !compatible(row, tp->subject, t.subject) ||
              !compatible(row, tp->object, t.object)) {
            continue;
          }
          Binding b = row;
          if (unify(b, tp->subject, t.subject) && unify(b, tp->predicate, t.predicate) &&
              unify(b, tp->object, t.object)) {
            next.push_back(std::move(b));
            check(next.size());
          }
        }
      }
      rows = std::move(next);
    } else if (const auto* pp = std::get_if<query::PathPattern>(&el)) {
      std::vector<Binding> next;
      for (const auto& row : rows) {
        // Walk every chain s -p1-> n1 -p2-> ... -pn-> o.
        std::vector<std::pair<Binding, Term>> frontier;
        for (const auto& t : data) {
          if (!same_value(t.predicate, pp->steps[0]) || !compatible(row, pp->subject, t.subject)) continue;
          Binding b = row;
          if (!unify(b, pp->subject, t.subject)) continue;
          frontier.emplace_back(std::move(b), t.object);
        }
        for (std::size_t k = 1; k < pp->steps.size(); ++k) {
          std::vector<std::pair<Binding, Term>> step;
          for (const auto& [b, node] : frontier) {
            for (const auto& t : data) {
              if (same_value(t.subject, node) && same_value(t.predicate, pp->steps[k])) step.emplace_back(b, t.object);
            }
            check(step.size());
          }
          frontier = std::move(step);
        }
        for (auto& [b, end] : frontier) {
          if (unify(b, pp->object, end)) next.push_back(std::move(b));
        }
        check(next.size());
      }
      rows = std::move(next);
    } else if (const auto* bind = std::get_if<query::BindClause>(&el)) {
      std::vector<Binding> next;
      for (auto& row : rows) {
        auto v = eval(bind->expr, Context{&row, nullptr});
        auto it = row.find(bind->target.name);
        if (it == row.end()) {
          if (v) row.emplace(bind->target.name, *v);
          next.push_back(std::move(row));
        } else if (!v || same_value(it->second, *v)) {
          next.push_back(std::move(row));
        }
      }
      rows = std::move(next);
    } else {
      filters.push_back(&std::get<query::FilterClause>(el).condition);
    }
  }
  std::erase_if(rows, [&](const Binding& b) {
    for (const auto* f : filters) {
      if (!ebv(eval(*f, Context{&b, nullptr})).value_or(false)) return true;
    }
    return false;
  });

  OracleTable out;
  out.variables = q.projected_variables();
  std::vector<Binding> solutions;

  if (q.is_grouped()) {
    std::vector<std::pair<std::vector<std::optional<Term>>, std::vector<const Binding*>>> groups;
    for (const auto& r : rows) {
      std::vector<std::optional<Term>> key;
      for (const auto& v : q.group_by) {
        auto it = r.find(v.name);
        key.push_back(it == r.end() ? std::nullopt : std::optional<Term>(it->second));
      }
      auto g = std::find_if(groups.begin(), groups.end(), [&](const auto& x) { return x.first == key; });
      if (g == groups.end()) {
        groups.push_back({key, {}});
        g = groups.end() - 1;
      }
      g->second.push_back(&r);
    }
    if (groups.empty() && q.group_by.empty()) groups.push_back({{}, {}});
    for (const auto& [key, members] : groups) {
      Binding keys;
      for (std::size_t i = 0; i < q.group_by.size(); ++i) {
        if (key[i]) keys.emplace(q.group_by[i].name, *key[i]);
      }
      Binding sol = keys;
      for (const auto& item : q.select) {
        std::optional<Term> v;
        if (item.expr) {
          v = eval(*item.expr, Context{&keys, &members});
        } else if (auto it = keys.find(item.var.name); it != keys.end()) {
          v = it->second;
        }
        if (v) sol.insert_or_assign(item.var.name, *v);
      }
      solutions.push_back(std::move(sol));
    }
  } else {
    for (auto& r : rows) {
      for (const auto& item : q.select) {
        if (!item.expr) continue;
        if (auto v = eval(*item.expr, Context{&r, nullptr})) r.insert_or_assign(item.var.name, *v);
      }
    }
    solutions = std::move(rows);
  }

  if (!q.order_by.empty()) {
    struct Key {
      std::optional<Term> v;
      bool error;
    };
    std::vector<std::pair<std::vector<Key>, std::size_t>> keyed;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      std::vector<Key> ks;
      for (const auto& k : q.order_by) {
        auto v = eval(k.expr, Context{&solutions[i], nullptr});
        ks.push_back({v, !v && k.expr.kind != ExprKind::Variable});
      }
      keyed.emplace_back(std::move(ks), i);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
      for (std::size_t k = 0; k < q.order_by.size(); ++k) {
        const auto& x = a.first[k];
        const auto& y = b.first[k];
        if (x.error || y.error) {
          if (x.error != y.error) return y.error;
          continue;
        }
        int c = oracle_order(x.v, y.v);
        if (q.order_by[k].descending) c = -c;
        if (c) return c < 0;
      }
      return false;
    });
    std::vector<Binding> sorted;
    for (const auto& [ks, i] : keyed) sorted.push_back(solutions[i]);
    solutions = std::move(sorted);
  }

  for (const auto& s : solutions) {
    std::vector<std::optional<Term>> row;
    for (const auto& v : out.variables) {
      auto it = s.find(v);
      row.push_back(it == s.end() ? std::nullopt : std::optional<Term>(it->second));
    }
    if (q.distinct && std::find(out.rows.begin(), out.rows.end(), row) != out.rows.end()) continue;
    out.rows.push_back(std::move(row));
  }
  std::size_t begin = std::min(q.offset, out.rows.size());
  std::size_t end = q.limit ? std::min(out.rows.size(), begin + *q.limit) : out.rows.size();
  out.rows = {out.rows.begin() + static_cast<std::ptrdiff_t>(begin), out.rows.begin() + static_cast<std::ptrdiff_t>(end)};
  return out;
}

std::string cell_key(const std::optional<Term>& t) {
  if (!t) return "U";
  if (auto n = as_num(*t)) {
    long double v = n->v == 0 ? 0 : n->v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "N%.12Lg", v);
    return buf;
  }
  switch (t->kind) {
    case rdf::TermKind::Iri: return "I" + t->value;
    case rdf::TermKind::BlankNode: return "B" + t->value;
    case rdf::TermKind::Literal: return "L" + t->value + "^^" + t->datatype + "@" + t->language;
  }
  return "?";
}

std::vector<std::string> row_sequence(const std::vector<std::vector<std::optional<Term>>>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    std::string k;
    for (const auto& c : r) k += cell_key(c) + "\x1f";
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<std::string> row_multiset(const std::vector<std::vector<std::optional<Term>>>& rows) {
  auto out = row_sequence(rows);
  std::sort(out.begin(), out.end());
  return out;
}

std::string compare_tables(const query::ResultTable& engine, const OracleTable& oracle, bool ordered) {
  if (engine.variables != oracle.variables) return "variables differ";
  auto a = ordered ? row_sequence(engine.rows) : row_multiset(engine.rows);
  auto b = ordered ? row_sequence(oracle.rows) : row_multiset(oracle.rows);
  if (a.size() != b.size()) {
    return "row count " + std::to_string(a.size()) + " vs oracle " + std::to_string(b.size());
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return "row " + std::to_string(i) + ": " + a[i] + " vs oracle " + b[i];
  }
  return {};
}

}  // namespace semdd::testkit
