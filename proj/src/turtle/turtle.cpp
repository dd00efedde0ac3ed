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

#include "semdd/turtle/turtle.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "semdd/turtle/lexing.hpp"

namespace semdd::turtle {

using rdf::Term;
using rdf::Triple;

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::string token)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message + (token.empty() ? "" : " near '" + token + "'")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

namespace {

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : cur_(text) {}

  TurtleDocument run() {
    while (true) {
      cur_.skip_trivia();
      if (cur_.eof()) break;
      if (cur_.peek() == '@') {
        directive();
      } else if (cur_.at_keyword("PREFIX")) {
        sparql_prefix();
      } else if (cur_.at_keyword("BASE") || cur_.starts_with("@base")) {
        cur_.fail("base IRIs are not supported");
      } else {
        triples();
        cur_.skip_trivia();
        expect('.', "expected '.' at end of statement");
      }
    }
    return std::move(doc_);
  }

 private:
  void expect(char c, const char* message) {
    if (!cur_.consume(c)) cur_.fail(message);
  }

  void directive() {
    if (!cur_.starts_with("@prefix")) cur_.fail("unknown directive");
    for (int i = 0; i < 7; ++i) cur_.advance();
    declare_prefix();
    cur_.skip_trivia();
    expect('.', "expected '.' after @prefix declaration");
  }

  void sparql_prefix() {
    cur_.consume_keyword("PREFIX");
    declare_prefix();
  }

  void declare_prefix() {
    cur_.skip_trivia();
    auto pname = lex_prefixed_name(cur_);
    if (!pname || !pname->local.empty()) cur_.fail("expected prefix name ending in ':'");
    cur_.skip_trivia();
    if (cur_.peek() != '<') cur_.fail("expected namespace IRI");
    std::string ns = lex_iri_ref(cur_);
    prefixes_.set(pname->prefix, ns);
    doc_.prefixes.emplace_back(pname->prefix, ns);
  }

  Term iri_or_pname(const char* what) {
    if (cur_.peek() == '<') return Term::iri(lex_iri_ref(cur_));
    auto pname = lex_prefixed_name(cur_);
    if (!pname) cur_.fail(std::string("expected ") + what);
    auto ns = prefixes_.find(pname->prefix);
    if (!ns) {
      cur_.fail_at(pname->position, "undeclared prefix '" + pname->prefix + "'",
                   pname->prefix + ":" + pname->local);
    }
    return Term::iri(std::string(*ns) + pname->local);
  }

  Term subject() {
    if (cur_.peek() == '_' && cur_.peek(1) == ':') return Term::blank(lex_blank_label(cur_));
    reject_unsupported();
    return iri_or_pname("subject");
  }

  Term verb() {
    if (cur_.peek() == 'a' && cur_.consume_keyword("a")) return Term::iri(vocab::kRdfType);
    return iri_or_pname("predicate");
  }

  void reject_unsupported() {
    if (cur_.peek() == '[') cur_.fail("anonymous blank nodes are not supported");
    if (cur_.peek() == '(') cur_.fail("collections are not supported");
  }

  Term object() {
    char c = cur_.peek();
    if (c == '_' && cur_.peek(1) == ':') return Term::blank(lex_blank_label(cur_));
    if (c == '"' || c == '\'') {
      std::string lexical = lex_string(cur_);
      if (cur_.peek() == '@') return Term::lang_literal(std::move(lexical), lex_lang_tag(cur_));
      if (cur_.peek() == '^' && cur_.peek(1) == '^') {
        cur_.advance();
        cur_.advance();
        Term dt = iri_or_pname("datatype IRI");
        return Term::literal(std::move(lexical), dt.value);
      }
      return Term::literal(std::move(lexical));
    }
    if (auto num = lex_number(cur_)) {
      switch (num->kind) {
        case NumberKind::Integer: return Term::literal(num->text, vocab::kXsdInteger);
        case NumberKind::Decimal: return Term::literal(num->text, vocab::kXsdDecimal);
        case NumberKind::Double: return Term::literal(num->text, vocab::kXsdDouble);
      }
    }
    if (cur_.at_keyword("true") && cur_.rest().starts_with("true")) {
      cur_.consume_keyword("true");
      return Term::boolean(true);
    }
    if (cur_.at_keyword("false") && cur_.rest().starts_with("false")) {
      cur_.consume_keyword("false");
      return Term::boolean(false);
    }
    reject_unsupported();
    return iri_or_pname("object");
  }

  void emit(const Term& s, const Term& p, const Term& o, Position at) {
    Triple t{s, p, o};
    if (auto err = rdf::validation_error(t)) cur_.fail_at(at, *err, rdf::to_string(o));
    doc_.triples.push_back(std::move(t));
  }

  void triples() {
    Term s = subject();
    while (true) {
      cur_.skip_trivia();
      Term p = verb();
      while (true) {
        cur_.skip_trivia();
        Position at = cur_.position();
        Term o = object();
        emit(s, p, o, at);
        cur_.skip_trivia();
        if (!cur_.consume(',')) break;
      }
      // One or more ';' may precede the next predicate or the final '.'.
      if (!cur_.consume(';')) break;
      cur_.skip_trivia();
      while (cur_.consume(';')) cur_.skip_trivia();
      if (cur_.peek() == '.' || cur_.eof()) break;
    }
  }

  Cursor cur_;
  rdf::PrefixMap prefixes_;
  TurtleDocument doc_;
};

// Characters that must be \u-escaped inside <...>.
bool needs_iri_escape(char c) {
  return static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
         c == '}' || c == '|' || c == '^' || c == '`' || c == '\\';
}

void write_iri_ref(std::string& out, std::string_view iri) {
  out += '<';
  for (char c : iri) {
    if (needs_iri_escape(c)) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(static_cast<unsigned char>(c)));
      out += buf;
    } else {
      out += c;
    }
  }
  out += '>';
}

void write_string(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

class Writer {
 public:
  explicit Writer(const rdf::PrefixMap& prefixes) {
    for (const auto& [prefix, ns] : prefixes.entries()) {
      if (is_valid_prefix_name(prefix)) usable_.set(prefix, ns);
    }
  }

  const rdf::PrefixMap& prefixes() const { return usable_; }

  void iri(std::string& out, const std::string& iri) const {
    if (auto split = usable_.split(iri); split && is_simple_local_name(split->second)) {
      out += split->first;
      out += ':';
      out += split->second;
      return;
    }
    write_iri_ref(out, iri);
  }

  void term(std::string& out, const Term& t) const {
    switch (t.kind) {
      case rdf::TermKind::Iri: iri(out, t.value); return;
      case rdf::TermKind::BlankNode: out += "_:" + t.value; return;
      case rdf::TermKind::Literal: literal(out, t); return;
    }
  }

 private:
  static bool bare_decimal(std::string_view s) {
    auto dot = s.find('.');
    return rdf::is_decimal_lexical(s) && dot != std::string_view::npos && dot + 1 < s.size();
  }

  static bool bare_double(std::string_view s) {
    return rdf::is_double_lexical(s) && s.find_first_of("eE") != std::string_view::npos;
  }

  void literal(std::string& out, const Term& t) const {
    if (!t.language.empty()) {
      write_string(out, t.value);
      out += '@';
      out += t.language;
      return;
    }
    if (t.datatype == vocab::kXsdString) {
      write_string(out, t.value);
      return;
    }
    if ((t.datatype == vocab::kXsdInteger && rdf::is_integer_lexical(t.value)) ||
        (t.datatype == vocab::kXsdDecimal && bare_decimal(t.value)) ||
        (t.datatype == vocab::kXsdDouble && bare_double(t.value)) ||
        (t.datatype == vocab::kXsdBoolean && (t.value == "true" || t.value == "false"))) {
      out += t.value;
      return;
    }
    write_string(out, t.value);
    out += "^^";
    iri(out, t.datatype);
  }

  rdf::PrefixMap usable_;
};

}  // namespace

bool is_valid_prefix_name(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!(std::isalpha(static_cast<unsigned char>(prefix.front())))) return false;
  if (prefix.back() == '.') return false;
  return std::all_of(prefix.begin(), prefix.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

bool is_simple_local_name(std::string_view local) {
  if (local.empty()) return true;
  char first = local.front();
  if (!(std::isalnum(static_cast<unsigned char>(first)) || first == '_')) return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

TurtleDocument parse_turtle(std::string_view text) {
  try {
    return TurtleParser(text).run();
  } catch (const LexError& e) {
    throw ParseError(e.position().line, e.position().column, e.message(), e.token());
  }
}

std::string serialize_turtle(std::span<const Triple> triples, const rdf::PrefixMap& prefixes) {
  Writer writer(prefixes);
  std::string out;
  for (const auto& [prefix, ns] : writer.prefixes().entries()) {
    out += "@prefix " + prefix + ": ";
    write_iri_ref(out, ns);
    out += " .\n";
  }

  std::vector<const Triple*> sorted;
  sorted.reserve(triples.size());
  for (const auto& t : triples) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const Triple* a, const Triple* b) { return *a < *b; });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Triple* a, const Triple* b) { return *a == *b; }),
               sorted.end());

  if (!sorted.empty() && !out.empty()) out += '\n';
  for (std::size_t i = 0; i < sorted.size();) {
    const Term& subject = sorted[i]->subject;
    writer.term(out, subject);
    bool first_predicate = true;
    while (i < sorted.size() && sorted[i]->subject == subject) {
      const Term& predicate = sorted[i]->predicate;
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      if (predicate.value == vocab::kRdfType) {
        out += 'a';
      } else {
        writer.term(out, predicate);
      }
      bool first_object = true;
      while (i < sorted.size() && sorted[i]->subject == subject && sorted[i]->predicate == predicate) {
        out += first_object ? " " : ", ";
        first_object = false;
        writer.term(out, sorted[i]->object);
        ++i;
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace semdd::turtle
