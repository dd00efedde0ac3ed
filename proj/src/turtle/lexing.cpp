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

#include "semdd/turtle/lexing.hpp"

#include <cctype>

#include "semdd/turtle/turtle.hpp"

namespace semdd::turtle {

namespace {

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_non_ascii(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

bool is_local_escape_char(char c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return kChars.find(c) != std::string_view::npos;
}

char32_t read_hex(Cursor& c, int digits, Position start) {
  char32_t cp = 0;
  for (int i = 0; i < digits; ++i) {
    char h = c.peek();
    if (!is_hex(h)) c.fail_at(start, "malformed \\u escape", std::string(c.text().substr(start.offset, 2 + i)));
    c.advance();
    cp = cp * 16 + static_cast<char32_t>(std::isdigit(static_cast<unsigned char>(h))
                                             ? h - '0'
                                             : (std::tolower(static_cast<unsigned char>(h)) - 'a' + 10));
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    c.fail_at(start, "escape denotes an invalid code point", std::string(c.text().substr(start.offset, 2 + digits)));
  }
  return cp;
}

}  // namespace

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

bool is_name_start_char(char c) { return is_ascii_alpha(c) || c == '_' || is_non_ascii(c); }
bool is_name_char(char c) { return is_name_start_char(c) || is_digit(c) || c == '-'; }

char Cursor::advance() {
  char c = peek();
  if (eof()) return c;
  ++pos_.offset;
  if (c == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
    ++pos_.column;
  }
  return c;
}

bool Cursor::consume(char c) {
  if (eof() || peek() != c) return false;
  advance();
  return true;
}

bool Cursor::at_keyword(std::string_view kw) const {
  if (rest().size() < kw.size()) return false;
  for (std::size_t i = 0; i < kw.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(peek(i))) !=
        std::tolower(static_cast<unsigned char>(kw[i]))) {
      return false;
    }
  }
  char next = peek(kw.size());
  return !(is_name_char(next) || next == ':');
}

bool Cursor::consume_keyword(std::string_view kw) {
  if (!at_keyword(kw)) return false;
  for (std::size_t i = 0; i < kw.size(); ++i) advance();
  return true;
}

void Cursor::skip_trivia() {
  while (!eof()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (!eof() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

std::string Cursor::token_at() const {
  std::string_view r = rest();
  std::size_t n = 0;
  while (n < r.size() && n < 24 && r[n] != ' ' && r[n] != '\n' && r[n] != '\t' && r[n] != '\r') ++n;
  if (n == 0 && !r.empty()) n = 1;
  return std::string(r.substr(0, n));
}

void Cursor::fail(std::string message) const { throw LexError(pos_, std::move(message), token_at()); }

void Cursor::fail_at(Position pos, std::string message, std::string token) const {
  throw LexError(pos, std::move(message), std::move(token));
}

std::string lex_iri_ref(Cursor& c) {
  Position start = c.position();
  c.advance();  // '<'
  std::string out;
  while (true) {
    if (c.eof()) c.fail_at(start, "unterminated IRI", std::string(c.text().substr(start.offset, 24)));
    char ch = c.peek();
    if (ch == '>') {
      c.advance();
      break;
    }
    if (ch == '\\') {
      Position esc = c.position();
      c.advance();
      char kind = c.advance();
      if (kind == 'u') {
        out += encode_utf8(read_hex(c, 4, esc));
      } else if (kind == 'U') {
        out += encode_utf8(read_hex(c, 8, esc));
      } else {
        c.fail_at(esc, "invalid escape in IRI", std::string(c.text().substr(esc.offset, 2)));
      }
      continue;
    }
    if (static_cast<unsigned char>(ch) <= 0x20 || ch == '<' || ch == '"' || ch == '{' ||
        ch == '}' || ch == '|' || ch == '^' || ch == '`') {
      c.fail("invalid character in IRI");
    }
    out += c.advance();
  }
  if (out.empty()) c.fail_at(start, "empty IRI", "<>");
  return out;
}

std::optional<PrefixedName> lex_prefixed_name(Cursor& c) {
  Cursor saved = c;
  PrefixedName name;
  name.position = c.position();
  if (is_ascii_alpha(c.peek()) || is_non_ascii(c.peek())) {
    while (true) {
      char ch = c.peek();
      if (is_name_char(ch)) {
        name.prefix += c.advance();
      } else if (ch == '.' && (is_name_char(c.peek(1)) || c.peek(1) == '.')) {
        name.prefix += c.advance();
      } else {
        break;
      }
    }
  }
  if (c.peek() != ':' || (!name.prefix.empty() && name.prefix.back() == '.')) {
    c = saved;
    return std::nullopt;
  }
  c.advance();  // ':'

  auto local_char = [&](bool first) -> bool {
    char ch = c.peek();
    if (is_name_char(ch) || ch == ':' || (first && is_digit(ch))) {
      if (first && ch == '-') return false;
      name.local += c.advance();
      return true;
    }
    if (ch == '%' && is_hex(c.peek(1)) && is_hex(c.peek(2))) {
      for (int i = 0; i < 3; ++i) name.local += c.advance();
      return true;
    }
    if (ch == '\\' && is_local_escape_char(c.peek(1))) {
      c.advance();
      name.local += c.advance();
      return true;
    }
    return false;
  };

  if (!local_char(true)) return name;
  while (true) {
    if (local_char(false)) continue;
    if (c.peek() == '.') {
      // A '.' belongs to the name only if more name characters follow.
      std::size_t k = 0;
      while (c.peek(k) == '.') ++k;
      char after = c.peek(k);
      if (is_name_char(after) || after == ':' || after == '%' || after == '\\') {
        while (c.peek() == '.') name.local += c.advance();
        continue;
      }
    }
    break;
  }
  return name;
}

std::string lex_string(Cursor& c) {
  Position start = c.position();
  char quote = c.peek();
  bool long_form = c.peek(1) == quote && c.peek(2) == quote;
  for (int i = 0; i < (long_form ? 3 : 1); ++i) c.advance();
  std::string out;
  while (true) {
    if (c.eof()) c.fail_at(start, "unterminated string", std::string(c.text().substr(start.offset, 24)));
    char ch = c.peek();
    if (ch == quote) {
      if (!long_form) {
        c.advance();
        break;
      }
      if (c.peek(1) == quote && c.peek(2) == quote) {
        // Quotes immediately before the closing triple belong to the content.
        while (c.peek(3) == quote) out += c.advance();
        for (int i = 0; i < 3; ++i) c.advance();
        break;
      }
      out += c.advance();
      continue;
    }
    if (!long_form && (ch == '\n' || ch == '\r')) c.fail("line break in short string");
    if (ch == '\\') {
      Position esc = c.position();
      c.advance();
      char kind = c.advance();
      switch (kind) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': out += encode_utf8(read_hex(c, 4, esc)); break;
        case 'U': out += encode_utf8(read_hex(c, 8, esc)); break;
        default:
          c.fail_at(esc, "invalid escape sequence", std::string(c.text().substr(esc.offset, 2)));
      }
      continue;
    }
    out += c.advance();
  }
  return out;
}

std::string lex_lang_tag(Cursor& c) {
  Position start = c.position();
  c.advance();  // '@'
  std::string tag;
  while (is_ascii_alpha(c.peek())) tag += c.advance();
  if (tag.empty()) c.fail_at(start, "malformed language tag", c.token_at());
  while (c.peek() == '-' && (is_ascii_alpha(c.peek(1)) || is_digit(c.peek(1)))) {
    tag += c.advance();
    while (is_ascii_alpha(c.peek()) || is_digit(c.peek())) tag += c.advance();
  }
  return tag;
}

std::optional<NumberLexeme> lex_number(Cursor& c) {
  std::size_t i = 0;
  if (c.peek() == '+' || c.peek() == '-') ++i;
  std::size_t int_digits = 0;
  while (is_digit(c.peek(i))) ++i, ++int_digits;
  NumberKind kind = NumberKind::Integer;
  auto exponent_at = [&](std::size_t k) {
    if (c.peek(k) != 'e' && c.peek(k) != 'E') return std::size_t{0};
    std::size_t j = k + 1;
    if (c.peek(j) == '+' || c.peek(j) == '-') ++j;
    if (!is_digit(c.peek(j))) return std::size_t{0};
    while (is_digit(c.peek(j))) ++j;
    return j - k;
  };
  if (c.peek(i) == '.' && is_digit(c.peek(i + 1))) {
    ++i;
    while (is_digit(c.peek(i))) ++i;
    kind = NumberKind::Decimal;
  } else if (c.peek(i) == '.' && int_digits > 0 && exponent_at(i + 1) > 0) {
    ++i;
  } else if (int_digits == 0) {
    return std::nullopt;
  }
  if (std::size_t e = exponent_at(i); e > 0) {
    i += e;
    kind = NumberKind::Double;
  }
  NumberLexeme lex{kind, {}};
  for (std::size_t k = 0; k < i; ++k) lex.text += c.advance();
  return lex;
}

std::string lex_blank_label(Cursor& c) {
  Position start = c.position();
  c.advance();  // '_'
  if (!c.consume(':')) c.fail_at(start, "expected ':' after '_'", c.token_at());
  std::string label;
  char first = c.peek();
  if (!(is_name_start_char(first) || is_digit(first))) c.fail_at(start, "empty blank node label", "_:");
  while (true) {
    char ch = c.peek();
    if (is_name_char(ch)) {
      label += c.advance();
    } else if (ch == '.' && is_name_char(c.peek(1))) {
      label += c.advance();
    } else {
      break;
    }
  }
  return label;
}

}  // namespace semdd::turtle
