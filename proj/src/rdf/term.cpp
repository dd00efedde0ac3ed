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

#include "semdd/rdf/term.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace semdd::rdf {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Consumes [0-9]+ ('.' [0-9]*)? | '.' [0-9]+ starting at `i`.
bool consume_decimal_body(std::string_view s, std::size_t& i) {
  std::size_t int_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++frac_digits;
  }
  return int_digits + frac_digits > 0;
}

std::size_t skip_sign(std::string_view s) {
  return (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
}

bool valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  std::size_t i = 0;
  std::size_t run = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i, ++run;
  if (run == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    run = 0;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i, ++run;
    if (run == 0) return false;
  }
  return true;
}

std::optional<long double> parse_long_double(std::string_view s) {
  std::string buf(s);
  if (buf == "INF" || buf == "+INF") return std::numeric_limits<long double>::infinity();
  if (buf == "-INF") return -std::numeric_limits<long double>::infinity();
  if (buf == "NaN") return std::numeric_limits<long double>::quiet_NaN();
  char* end = nullptr;
  long double v = std::strtold(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  return v;
}

void escape_into(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

}  // namespace

Term Term::iri(std::string iri) { return Term{TermKind::Iri, std::move(iri), {}, {}}; }

Term Term::blank(std::string label) {
  return Term{TermKind::BlankNode, std::move(label), {}, {}};
}

Term Term::literal(std::string lexical, std::string datatype) {
  return Term{TermKind::Literal, std::move(lexical), std::move(datatype), {}};
}

Term Term::lang_literal(std::string lexical, std::string language) {
  return Term{TermKind::Literal, std::move(lexical), vocab::kRdfLangString, std::move(language)};
}

Term Term::integer(std::int64_t v) { return literal(std::to_string(v), vocab::kXsdInteger); }
Term Term::decimal(double v) { return make_numeric(NumericType::Decimal, v); }
Term Term::double_value(double v) { return make_numeric(NumericType::Double, v); }
Term Term::boolean(bool v) { return literal(v ? "true" : "false", vocab::kXsdBoolean); }

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t seed = static_cast<std::size_t>(t.kind);
  hash_combine(seed, std::hash<std::string>{}(t.value));
  if (t.kind == TermKind::Literal) {
    hash_combine(seed, std::hash<std::string>{}(t.datatype));
    hash_combine(seed, std::hash<std::string>{}(t.language));
  }
  return seed;
}

std::size_t TripleHash::operator()(const Triple& t) const noexcept {
  TermHash h;
  std::size_t seed = h(t.subject);
  hash_combine(seed, h(t.predicate));
  hash_combine(seed, h(t.object));
  return seed;
}

bool is_integer_lexical(std::string_view s) {
  std::size_t i = skip_sign(s);
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!is_digit(s[i])) return false;
  }
  return true;
}

bool is_decimal_lexical(std::string_view s) {
  std::size_t i = skip_sign(s);
  return consume_decimal_body(s, i) && i == s.size();
}

bool is_double_lexical(std::string_view s) {
  if (s == "INF" || s == "+INF" || s == "-INF" || s == "NaN") return true;
  std::size_t i = skip_sign(s);
  if (!consume_decimal_body(s, i)) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
    if (digits == 0) return false;
  }
  return i == s.size();
}

bool is_numeric_datatype(std::string_view datatype) {
  return datatype == vocab::kXsdInteger || datatype == vocab::kXsdDecimal ||
         datatype == vocab::kXsdDouble;
}

std::optional<Numeric> numeric_value(const Term& t) {
  if (t.kind != TermKind::Literal) return std::nullopt;
  if (t.datatype == vocab::kXsdInteger) {
    if (!is_integer_lexical(t.value)) return std::nullopt;
    std::string_view s = t.value;
    if (s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return Numeric{NumericType::Integer, static_cast<long double>(v)};
  }
  if (t.datatype == vocab::kXsdDecimal) {
    if (!is_decimal_lexical(t.value)) return std::nullopt;
    auto v = parse_long_double(t.value);
    if (!v) return std::nullopt;
    return Numeric{NumericType::Decimal, *v};
  }
  if (t.datatype == vocab::kXsdDouble) {
    if (!is_double_lexical(t.value)) return std::nullopt;
    auto v = parse_long_double(t.value);
    if (!v) return std::nullopt;
    return Numeric{NumericType::Double, *v};
  }
  return std::nullopt;
}

Term make_numeric(NumericType type, long double value) {
  char buf[128];
  switch (type) {
    case NumericType::Integer: {
      if (value >= 9.2233720368547758e18L || value < -9.2233720368547758e18L || std::isnan(value)) {
        // Out of int64 range: fall back to a decimal so the term stays valid.
        return make_numeric(NumericType::Decimal, value);
      }
      return Term::integer(static_cast<std::int64_t>(value));
    }
    case NumericType::Decimal: {
      double d = static_cast<double>(value);
      if (!std::isfinite(d)) return make_numeric(NumericType::Double, value);
      if (d == 0) d = 0;  // no "-0.0"
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d, std::chars_format::fixed);
      std::string s(buf, ptr);
      if (s.find('.') == std::string::npos) s += ".0";
      return Term::literal(std::move(s), vocab::kXsdDecimal);
    }
    case NumericType::Double: {
      double d = static_cast<double>(value);
      if (std::isnan(d)) return Term::literal("NaN", vocab::kXsdDouble);
      if (std::isinf(d)) return Term::literal(d > 0 ? "INF" : "-INF", vocab::kXsdDouble);
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d, std::chars_format::scientific);
      std::string s(buf, ptr);
      auto e = s.find('e');
      std::string mantissa = s.substr(0, e);
      if (mantissa.find('.') == std::string::npos) mantissa += ".0";
      int exponent = std::stoi(s.substr(e + 1));
      return Term::literal(mantissa + "E" + std::to_string(exponent), vocab::kXsdDouble);
    }
  }
  return Term::integer(0);
}

bool value_equal(const Term& a, const Term& b) {
  if (a.kind == TermKind::Literal && b.kind == TermKind::Literal) {
    auto na = numeric_value(a);
    if (na) {
      auto nb = numeric_value(b);
      if (nb) return na->value == nb->value;
    }
  }
  return a == b;
}

std::optional<std::string> validation_error(const Term& t) {
  switch (t.kind) {
    case TermKind::Iri:
      if (t.value.empty()) return "empty IRI";
      for (unsigned char c : t.value) {
        if (c <= 0x20) return "IRI contains whitespace or control character: " + t.value;
      }
      return std::nullopt;
    case TermKind::BlankNode:
      if (t.value.empty()) return "empty blank node label";
      for (char c : t.value) {
        if (!(is_alpha(c) || is_digit(c) || c == '_' || c == '-')) {
          return "invalid character in blank node label: " + t.value;
        }
      }
      return std::nullopt;
    case TermKind::Literal:
      if (t.datatype.empty()) return "literal without datatype";
      if (!t.language.empty()) {
        if (t.datatype != vocab::kRdfLangString) {
          return "language-tagged literal must have datatype rdf:langString";
        }
        if (!valid_language_tag(t.language)) return "invalid language tag: " + t.language;
        return std::nullopt;
      }
      if (t.datatype == vocab::kRdfLangString) return "rdf:langString literal without language tag";
      if (is_numeric_datatype(t.datatype) && !numeric_value(t)) {
        return "invalid lexical form \"" + t.value + "\" for " + t.datatype;
      }
      for (unsigned char c : t.datatype) {
        if (c <= 0x20) return "datatype IRI contains whitespace";
      }
      return std::nullopt;
  }
  return "unknown term kind";
}

std::optional<std::string> validation_error(const Triple& t) {
  if (t.subject.is_literal()) return "literal in subject position";
  if (!t.predicate.is_iri()) return "predicate must be an IRI";
  for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
    if (auto err = validation_error(*term)) return err;
  }
  return std::nullopt;
}

std::string to_string(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::Iri:
      out.reserve(t.value.size() + 2);
      out += '<';
      out += t.value;
      out += '>';
      break;
    case TermKind::BlankNode:
      out = "_:" + t.value;
      break;
    case TermKind::Literal:
      out += '"';
      escape_into(out, t.value);
      out += '"';
      if (!t.language.empty()) {
        out += '@';
        out += t.language;
      } else if (t.datatype != vocab::kXsdString) {
        out += "^^<";
        out += t.datatype;
        out += '>';
      }
      break;
  }
  return out;
}

std::string to_string(const Triple& t) {
  return to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object) + " .";
}

}  // namespace semdd::rdf
