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

#include "semdd/query/expression.hpp"

#include <algorithm>
#include <cmath>

namespace semdd::query {

using rdf::Numeric;
using rdf::NumericType;
using rdf::Term;

namespace {

bool is_string_literal(const Term& t) {
  return t.is_literal() && (t.datatype == vocab::kXsdString || t.datatype == vocab::kRdfLangString);
}

bool is_boolean_literal(const Term& t) { return t.is_literal() && t.datatype == vocab::kXsdBoolean; }

std::optional<bool> boolean_value(const Term& t) {
  if (t.value == "true" || t.value == "1") return true;
  if (t.value == "false" || t.value == "0") return false;
  return std::nullopt;
}

int sign(long double d) { return d < 0 ? -1 : (d > 0 ? 1 : 0); }

template <typename T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

std::optional<Term> arithmetic(Op op, const Numeric& a, const Numeric& b) {
  auto type = std::max(a.type, b.type);
  long double v = 0;
  switch (op) {
    case Op::Add: v = a.value + b.value; break;
    case Op::Sub: v = a.value - b.value; break;
    case Op::Mul: v = a.value * b.value; break;
    case Op::Div:
      if (type == NumericType::Integer) type = NumericType::Decimal;
      if (b.value == 0 && type != NumericType::Double) return std::nullopt;
      v = a.value / b.value;
      break;
    default: return std::nullopt;
  }
  return rdf::make_numeric(type, v);
}

std::optional<Term> compare(Op op, const Term& a, const Term& b) {
  if (op == Op::Eq || op == Op::Ne) {
    auto eq = rdf_equal(a, b);
    if (!eq) return std::nullopt;
    return Term::boolean(op == Op::Eq ? *eq : !*eq);
  }
  std::optional<bool> r;
  switch (op) {
    case Op::Lt: r = rdf_less(a, b); break;
    case Op::Gt: r = rdf_less(b, a); break;
    case Op::Le: {
      auto lt = rdf_less(b, a);
      if (lt) r = !*lt;
      break;
    }
    case Op::Ge: {
      auto lt = rdf_less(a, b);
      if (lt) r = !*lt;
      break;
    }
    default: break;
  }
  if (!r) return std::nullopt;
  return Term::boolean(*r);
}

std::optional<bool> ebv(const Expr& e, const Environment& env) {
  auto v = evaluate(e, env);
  if (!v) return std::nullopt;
  return effective_boolean(*v);
}

}  // namespace

std::optional<bool> effective_boolean(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  if (is_boolean_literal(t)) return boolean_value(t).value_or(false);
  if (rdf::is_numeric_datatype(t.datatype)) {
    auto n = rdf::numeric_value(t);
    if (!n) return false;
    return !(n->value == 0 || std::isnan(n->value));
  }
  if (is_string_literal(t)) return !t.value.empty();
  return std::nullopt;
}

std::optional<bool> rdf_equal(const Term& a, const Term& b) {
  if (a.is_literal() && b.is_literal()) {
    auto na = rdf::numeric_value(a);
    auto nb = rdf::numeric_value(b);
    if (na && nb) return na->value == nb->value;
    if (is_boolean_literal(a) && is_boolean_literal(b)) {
      auto ba = boolean_value(a);
      auto bb = boolean_value(b);
      if (ba && bb) return *ba == *bb;
    }
    if (a == b) return true;
    // Distinct literals of types we cannot compare by value.
    if (na || nb || is_string_literal(a) || is_string_literal(b) || is_boolean_literal(a) ||
        is_boolean_literal(b)) {
      return false;
    }
    return std::nullopt;
  }
  return a == b;
}

std::optional<bool> rdf_less(const Term& a, const Term& b) {
  if (!a.is_literal() || !b.is_literal()) return std::nullopt;
  auto na = rdf::numeric_value(a);
  auto nb = rdf::numeric_value(b);
  if (na && nb) return na->value < nb->value;
  if (a.datatype == vocab::kXsdString && b.datatype == vocab::kXsdString) return a.value < b.value;
  if (is_boolean_literal(a) && is_boolean_literal(b)) {
    auto ba = boolean_value(a);
    auto bb = boolean_value(b);
    if (ba && bb) return !*ba && *bb;
  }
  return std::nullopt;
}

std::optional<Term> evaluate(const Expr& e, const Environment& env) {
  switch (e.kind) {
    case ExprKind::Constant: return e.constant;
    case ExprKind::Variable: {
      const Term* t = env.lookup(e);
      if (!t) return std::nullopt;
      return *t;
    }
    case ExprKind::Aggregate: return env.aggregate(e);
    case ExprKind::If: {
      auto c = ebv(e.args[0], env);
      if (!c) return std::nullopt;
      return evaluate(e.args[*c ? 1 : 2], env);
    }
    case ExprKind::Unary: {
      if (e.op == Op::Not) {
        auto b = ebv(e.args[0], env);
        if (!b) return std::nullopt;
        return Term::boolean(!*b);
      }
      auto v = evaluate(e.args[0], env);
      if (!v) return std::nullopt;
      auto n = rdf::numeric_value(*v);
      if (!n) return std::nullopt;
      if (e.op == Op::Plus) return rdf::make_numeric(n->type, n->value);
      return rdf::make_numeric(n->type, -n->value);
    }
    case ExprKind::Binary: {
      if (e.op == Op::Or || e.op == Op::And) {
        bool is_or = e.op == Op::Or;
        auto l = ebv(e.args[0], env);
        auto r = ebv(e.args[1], env);
        // Three-valued logic: a definite true (for ||) or false (for &&)
        // wins over an error on the other side.
        if ((l && *l == is_or) || (r && *r == is_or)) return Term::boolean(is_or);
        if (!l || !r) return std::nullopt;
        return Term::boolean(!is_or);
      }
      auto l = evaluate(e.args[0], env);
      if (!l) return std::nullopt;
      auto r = evaluate(e.args[1], env);
      if (!r) return std::nullopt;
      switch (e.op) {
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div: {
          auto nl = rdf::numeric_value(*l);
          auto nr = rdf::numeric_value(*r);
          if (!nl || !nr) return std::nullopt;
          return arithmetic(e.op, *nl, *nr);
        }
        default: return compare(e.op, *l, *r);
      }
    }
  }
  return std::nullopt;
}

bool filter_passes(const Expr& e, const Environment& env) { return ebv(e, env).value_or(false); }

int order_compare(const Term* a, const Term* b) {
  if (!a || !b) return three_way(a != nullptr, b != nullptr);
  auto rank = [](const Term& t) {
    switch (t.kind) {
      case rdf::TermKind::BlankNode: return 0;
      case rdf::TermKind::Iri: return 1;
      case rdf::TermKind::Literal: return 2;
    }
    return 3;
  };
  if (int c = three_way(rank(*a), rank(*b))) return c;
  if (!a->is_literal()) return three_way(a->value, b->value);
  auto na = rdf::numeric_value(*a);
  auto nb = rdf::numeric_value(*b);
  if (na && nb) {
    if (int c = sign(na->value - nb->value)) return c;
    if (std::isnan(na->value) != std::isnan(nb->value)) return std::isnan(na->value) ? 1 : -1;
  } else if (na || nb) {
    return na ? -1 : 1;
  }
  if (int c = three_way(a->value, b->value)) return c;
  if (int c = three_way(a->datatype, b->datatype)) return c;
  return three_way(a->language, b->language);
}

}  // namespace semdd::query
