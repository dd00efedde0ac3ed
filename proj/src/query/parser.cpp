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

#include "semdd/query/parser.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "semdd/rdf/vocab.hpp"
#include "semdd/turtle/lexing.hpp"

namespace semdd::query {

using rdf::Term;
using turtle::Cursor;
using turtle::LexError;
using turtle::Position;

QueryError::QueryError(Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::string token)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message + (token.empty() ? "" : " near '" + token + "'")),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

namespace {

bool is_var_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class QueryParser {
 public:
  QueryParser(std::string_view text, const rdf::PrefixMap& predeclared)
      : cur_(text), prefixes_(predeclared) {
    q_.text = std::string(text);
  }

  Query run() {
    prologue();
    select_clause();
    skip();
    cur_.consume_keyword("WHERE");
    skip();
    group_graph_pattern();
    solution_modifiers();
    skip();
    if (!cur_.eof()) syntax("unexpected trailing input");
    validate();
    q_.algebra = build_algebra(q_);
    return std::move(q_);
  }

 private:
  // ---- helpers ----
  void skip() { cur_.skip_trivia(); }

  [[noreturn]] void syntax(const std::string& message) const {
    auto p = cur_.position();
    throw QueryError(QueryError::Kind::Syntax, p.line, p.column, message, cur_.token_at());
  }

  [[noreturn]] void semantic(Position p, const std::string& message, std::string token = {}) const {
    throw QueryError(QueryError::Kind::Semantic, p.line, p.column, message, std::move(token));
  }

  void expect(char c) {
    skip();
    if (!cur_.consume(c)) syntax(std::string("expected '") + c + "'");
  }

  void expect_keyword(std::string_view kw) {
    skip();
    if (!cur_.consume_keyword(kw)) syntax("expected " + std::string(kw));
  }

  bool at_var() const { return (cur_.peek() == '?' || cur_.peek() == '$') && is_var_char(cur_.peek(1)); }

  Variable variable() {
    skip();
    if (!at_var()) syntax("expected variable");
    cur_.advance();
    std::string name;
    while (is_var_char(cur_.peek())) name += cur_.advance();
    return Variable{std::move(name)};
  }

  Term resolve(const turtle::PrefixedName& pn) {
    auto ns = prefixes_.find(pn.prefix);
    if (!ns) {
      throw QueryError(QueryError::Kind::UnknownPrefix, pn.position.line, pn.position.column,
                       "unknown prefix '" + pn.prefix + "'", pn.prefix + ":" + pn.local);
    }
    return Term::iri(std::string(*ns) + pn.local);
  }

  std::optional<Term> iri() {
    if (cur_.peek() == '<') return Term::iri(turtle::lex_iri_ref(cur_));
    if (auto pn = turtle::lex_prefixed_name(cur_)) return resolve(*pn);
    return std::nullopt;
  }

  Term literal_after_string() {
    std::string lexical = turtle::lex_string(cur_);
    if (cur_.peek() == '@') return Term::lang_literal(std::move(lexical), turtle::lex_lang_tag(cur_));
    if (cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.advance();
      cur_.advance();
      auto dt = iri();
      if (!dt) syntax("expected datatype IRI");
      return Term::literal(std::move(lexical), dt->value);
    }
    return Term::literal(std::move(lexical));
  }

  static Term number_term(const turtle::NumberLexeme& n) {
    switch (n.kind) {
      case turtle::NumberKind::Integer: return Term::literal(n.text, vocab::kXsdInteger);
      case turtle::NumberKind::Decimal: return Term::literal(n.text, vocab::kXsdDecimal);
      case turtle::NumberKind::Double: return Term::literal(n.text, vocab::kXsdDouble);
    }
    return Term::literal(n.text, vocab::kXsdInteger);
  }

  std::optional<Term> boolean_keyword() {
    if (cur_.at_keyword("true")) {
      cur_.consume_keyword("true");
      return Term::boolean(true);
    }
    if (cur_.at_keyword("false")) {
      cur_.consume_keyword("false");
      return Term::boolean(false);
    }
    return std::nullopt;
  }

  // ---- prologue and select ----
  void prologue() {
    while (true) {
      skip();
      if (!cur_.consume_keyword("PREFIX")) break;
      skip();
      auto pn = turtle::lex_prefixed_name(cur_);
      if (!pn || !pn->local.empty()) syntax("expected prefix name ending in ':'");
      skip();
      if (cur_.peek() != '<') syntax("expected namespace IRI");
      std::string ns = turtle::lex_iri_ref(cur_);
      prefixes_.set(pn->prefix, ns);
      q_.prefix_decls.emplace_back(pn->prefix, ns);
    }
  }

  void select_clause() {
    expect_keyword("SELECT");
    skip();
    if (cur_.consume_keyword("DISTINCT")) q_.distinct = true;
    skip();
    if (cur_.consume('*')) {
      q_.select_all = true;
      return;
    }
    while (true) {
      skip();
      if (at_var()) {
        select_positions_.push_back(cur_.position());
        q_.select.push_back(SelectItem{variable(), std::nullopt});
      } else if (cur_.peek() == '(') {
        select_positions_.push_back(cur_.position());
        cur_.advance();
        Expr e = expression(true);
        expect_keyword("AS");
        Variable v = variable();
        expect(')');
        q_.select.push_back(SelectItem{std::move(v), std::move(e)});
      } else {
        break;
      }
    }
    if (q_.select.empty()) syntax("expected '*', a variable or (expression AS ?var) after SELECT");
  }

  // ---- WHERE ----
  void note_scope(const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) in_scope_.insert(v->name);
  }

  PatternTerm var_or_term(bool allow_literal) {
    skip();
    if (at_var()) return variable();
    char c = cur_.peek();
    if (c == '_' && cur_.peek(1) == ':') syntax("blank nodes are not supported in query patterns");
    if (c == '[' || c == '(') syntax("anonymous blank nodes and collections are not supported");
    if (allow_literal) {
      if (c == '"' || c == '\'') return literal_after_string();
      if (auto n = turtle::lex_number(cur_)) return number_term(*n);
      if (auto b = boolean_keyword()) return *b;
    }
    if (auto t = iri()) return *t;
    syntax(allow_literal ? "expected variable, IRI or literal" : "expected variable or IRI");
  }

  // Returns the predicate steps; a single step is an ordinary predicate.
  std::variant<Variable, std::vector<Term>> verb() {
    skip();
    if (at_var()) return variable();
    std::vector<Term> steps;
    while (true) {
      skip();
      if (cur_.peek() == 'a' && cur_.consume_keyword("a")) {
        steps.push_back(Term::iri(vocab::kRdfType));
      } else if (auto t = iri()) {
        steps.push_back(*t);
      } else {
        syntax("expected predicate");
      }
      skip();
      if (!cur_.consume('/')) break;
    }
    return steps;
  }

  void add_pattern(const PatternTerm& s, const std::variant<Variable, std::vector<Term>>& v,
                   const PatternTerm& o) {
    note_scope(s);
    note_scope(o);
    if (const auto* var = std::get_if<Variable>(&v)) {
      in_scope_.insert(var->name);
      q_.where.emplace_back(TriplePattern{s, *var, o});
      return;
    }
    const auto& steps = std::get<std::vector<Term>>(v);
    if (steps.size() == 1) {
      q_.where.emplace_back(TriplePattern{s, steps[0], o});
    } else {
      q_.where.emplace_back(PathPattern{s, steps, o});
    }
  }

  void triples_same_subject() {
    PatternTerm subject = var_or_term(true);
    while (true) {
      auto v = verb();
      while (true) {
        PatternTerm object = var_or_term(true);
        add_pattern(subject, v, object);
        skip();
        if (!cur_.consume(',')) break;
      }
      skip();
      if (!cur_.consume(';')) break;
      skip();
      while (cur_.consume(';')) skip();
      if (cur_.peek() == '.' || cur_.peek() == '}' || at_clause_keyword()) break;
    }
  }

  bool at_clause_keyword() const { return cur_.at_keyword("FILTER") || cur_.at_keyword("BIND"); }

  void group_graph_pattern() {
    expect('{');
    while (true) {
      skip();
      if (cur_.eof()) syntax("unterminated group pattern, expected '}'");
      if (cur_.consume('}')) break;
      if (cur_.consume('.')) continue;
      if (cur_.consume_keyword("FILTER")) {
        expect('(');
        Expr e = expression(false);
        expect(')');
        q_.where.emplace_back(FilterClause{std::move(e)});
        continue;
      }
      if (cur_.at_keyword("BIND")) {
        cur_.consume_keyword("BIND");
        expect('(');
        Expr e = expression(false);
        expect_keyword("AS");
        skip();
        Position var_at = cur_.position();
        Variable v = variable();
        expect(')');
        if (in_scope_.contains(v.name)) {
          semantic(var_at, "BIND target ?" + v.name + " is already bound in the group", "?" + v.name);
        }
        in_scope_.insert(v.name);
        q_.where.emplace_back(BindClause{std::move(e), std::move(v)});
        continue;
      }
      if (cur_.at_keyword("OPTIONAL") || cur_.at_keyword("UNION") || cur_.at_keyword("GRAPH") ||
          cur_.at_keyword("MINUS") || cur_.at_keyword("VALUES") || cur_.peek() == '{') {
        syntax("unsupported graph pattern form");
      }
      triples_same_subject();
      skip();
      if (cur_.consume('.')) continue;
      if (cur_.peek() == '}' || at_clause_keyword()) continue;
      syntax("expected '.' between triple patterns");
    }
  }

  // ---- modifiers ----
  std::size_t non_negative_integer() {
    skip();
    std::string digits;
    while (cur_.peek() >= '0' && cur_.peek() <= '9') digits += cur_.advance();
    if (digits.empty()) syntax("expected non-negative integer");
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc()) syntax("integer out of range");
    return v;
  }

  void solution_modifiers() {
    skip();
    if (cur_.consume_keyword("GROUP")) {
      expect_keyword("BY");
      skip();
      if (!at_var()) syntax("expected variable after GROUP BY");
      while (true) {
        skip();
        if (!at_var()) break;
        q_.group_by.push_back(variable());
      }
    }
    skip();
    if (cur_.consume_keyword("ORDER")) {
      expect_keyword("BY");
      while (true) {
        skip();
        if (cur_.at_keyword("ASC") || cur_.at_keyword("DESC")) {
          bool desc = cur_.at_keyword("DESC");
          cur_.consume_keyword(desc ? "DESC" : "ASC");
          expect('(');
          Expr e = expression(false);
          expect(')');
          q_.order_by.push_back(OrderKey{std::move(e), desc});
        } else if (at_var()) {
          q_.order_by.push_back(OrderKey{Expr::make_variable(variable().name), false});
        } else if (cur_.peek() == '(') {
          cur_.advance();
          Expr e = expression(false);
          expect(')');
          q_.order_by.push_back(OrderKey{std::move(e), false});
        } else {
          break;
        }
      }
      if (q_.order_by.empty()) syntax("expected ordering key after ORDER BY");
    }
    bool seen_limit = false;
    bool seen_offset = false;
    while (true) {
      skip();
      if (!seen_limit && cur_.consume_keyword("LIMIT")) {
        q_.limit = non_negative_integer();
        seen_limit = true;
      } else if (!seen_offset && cur_.consume_keyword("OFFSET")) {
        q_.offset = non_negative_integer();
        seen_offset = true;
      } else {
        break;
      }
    }
  }

  // ---- expressions ----
  Expr expression(bool allow_aggregates) {
    bool saved = allow_aggregates_;
    allow_aggregates_ = allow_aggregates;
    Expr e = or_expr();
    allow_aggregates_ = saved;
    return e;
  }

  bool consume_op(std::string_view op) {
    skip();
    if (!cur_.starts_with(op)) return false;
    for (std::size_t i = 0; i < op.size(); ++i) cur_.advance();
    return true;
  }

  Expr or_expr() {
    Expr lhs = and_expr();
    while (consume_op("||")) lhs = Expr::make_binary(Op::Or, std::move(lhs), and_expr());
    return lhs;
  }

  Expr and_expr() {
    Expr lhs = relational();
    while (consume_op("&&")) lhs = Expr::make_binary(Op::And, std::move(lhs), relational());
    return lhs;
  }

  Expr relational() {
    Expr lhs = additive();
    static constexpr std::pair<std::string_view, Op> kOps[] = {
        {"!=", Op::Ne}, {"<=", Op::Le}, {">=", Op::Ge}, {"=", Op::Eq}, {"<", Op::Lt}, {">", Op::Gt}};
    for (const auto& [text, op] : kOps) {
      if (consume_op(text)) return Expr::make_binary(op, std::move(lhs), additive());
    }
    return lhs;
  }

  Expr additive() {
    Expr lhs = multiplicative();
    while (true) {
      if (consume_op("+")) {
        lhs = Expr::make_binary(Op::Add, std::move(lhs), multiplicative());
      } else if (consume_op("-")) {
        lhs = Expr::make_binary(Op::Sub, std::move(lhs), multiplicative());
      } else {
        return lhs;
      }
    }
  }

  Expr multiplicative() {
    Expr lhs = unary();
    while (true) {
      if (consume_op("*")) {
        lhs = Expr::make_binary(Op::Mul, std::move(lhs), unary());
      } else if (consume_op("/")) {
        lhs = Expr::make_binary(Op::Div, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip();
    if (cur_.peek() == '!' && cur_.peek(1) != '=') {
      cur_.advance();
      return Expr::make_unary(Op::Not, unary());
    }
    if (cur_.peek() == '-') {
      cur_.advance();
      return Expr::make_unary(Op::Negate, unary());
    }
    if (cur_.peek() == '+') {
      cur_.advance();
      return Expr::make_unary(Op::Plus, unary());
    }
    return primary();
  }

  std::optional<AggregateFn> aggregate_keyword() {
    static constexpr std::pair<std::string_view, AggregateFn> kFns[] = {
        {"COUNT", AggregateFn::Count}, {"SUM", AggregateFn::Sum}, {"AVG", AggregateFn::Avg},
        {"MIN", AggregateFn::Min},     {"MAX", AggregateFn::Max}};
    for (const auto& [name, fn] : kFns) {
      if (cur_.at_keyword(name)) {
        cur_.consume_keyword(name);
        return fn;
      }
    }
    return std::nullopt;
  }

  Expr primary() {
    skip();
    Position at = cur_.position();
    char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      Expr e = or_expr();
      expect(')');
      return e;
    }
    if (at_var()) return Expr::make_variable(variable().name);
    if (c == '"' || c == '\'') return Expr::make_constant(literal_after_string());
    if ((c >= '0' && c <= '9') || (c == '.' && cur_.peek(1) >= '0' && cur_.peek(1) <= '9')) {
      if (auto n = turtle::lex_number(cur_)) return Expr::make_constant(number_term(*n));
    }
    if (auto b = boolean_keyword()) return Expr::make_constant(*b);
    if (cur_.at_keyword("IF")) {
      cur_.consume_keyword("IF");
      expect('(');
      Expr cond = or_expr();
      expect(',');
      Expr a = or_expr();
      expect(',');
      Expr b = or_expr();
      expect(')');
      return Expr::make_if(std::move(cond), std::move(a), std::move(b));
    }
    if (auto fn = aggregate_keyword()) {
      if (!allow_aggregates_) {
        semantic(at, "aggregate outside GROUP BY context",
                 std::string(cur_.text().substr(at.offset, cur_.position().offset - at.offset)));
      }
      Expr e;
      e.kind = ExprKind::Aggregate;
      e.aggregate = *fn;
      expect('(');
      skip();
      if (cur_.consume_keyword("DISTINCT")) e.distinct = true;
      skip();
      if (*fn == AggregateFn::Count && cur_.consume('*')) {
        e.count_star = true;
      } else {
        allow_aggregates_ = false;
        e.args.push_back(or_expr());
        allow_aggregates_ = true;
      }
      expect(')');
      return e;
    }
    if (c == '<') {
      return Expr::make_constant(Term::iri(turtle::lex_iri_ref(cur_)));
    }
    if (auto pn = turtle::lex_prefixed_name(cur_)) return Expr::make_constant(resolve(*pn));
    syntax("expected expression");
  }

  // ---- semantic checks ----
  void validate() {
    std::set<std::string> where_vars;
    for (const auto& v : q_.where_variables()) where_vars.insert(v);

    std::set<std::string> targets;
    for (std::size_t i = 0; i < q_.select.size(); ++i) {
      const auto& item = q_.select[i];
      if (!item.expr) continue;
      if (where_vars.contains(item.var.name) || !targets.insert(item.var.name).second) {
        semantic(select_positions_[i], "projected variable ?" + item.var.name + " is already in scope",
                 "?" + item.var.name);
      }
    }

    if (!q_.is_grouped()) return;
    if (q_.select_all) {
      semantic(Position{}, "SELECT * is not allowed with GROUP BY or aggregates");
    }
    std::set<std::string> keys;
    for (const auto& v : q_.group_by) keys.insert(v.name);
    for (std::size_t i = 0; i < q_.select.size(); ++i) {
      const auto& item = q_.select[i];
      std::set<std::string> used;
      if (item.expr) {
        item.expr->collect_variables(used, false);
      } else {
        used.insert(item.var.name);
      }
      for (const auto& name : used) {
        if (!keys.contains(name)) {
          semantic(select_positions_[i], "?" + name + " must be a GROUP BY key or used inside an aggregate",
                   "?" + name);
        }
      }
    }
    // ORDER BY over a grouped result may only use projected names.
    std::set<std::string> visible = keys;
    for (const auto& item : q_.select) visible.insert(item.var.name);
    for (const auto& key : q_.order_by) {
      std::set<std::string> used;
      key.expr.collect_variables(used);
      for (const auto& name : used) {
        if (!visible.contains(name)) {
          semantic(Position{}, "ORDER BY ?" + name + " is not available after grouping", "?" + name);
        }
      }
    }
  }

  Cursor cur_;
  rdf::PrefixMap prefixes_;
  Query q_;
  std::set<std::string> in_scope_;
  std::vector<Position> select_positions_;
  bool allow_aggregates_ = false;
};

}  // namespace

Query parse_query(std::string_view text, const rdf::PrefixMap& predeclared) {
  try {
    return QueryParser(text, predeclared).run();
  } catch (const LexError& e) {
    throw QueryError(QueryError::Kind::Syntax, e.position().line, e.position().column, e.message(),
                     e.token());
  }
}

}  // namespace semdd::query
