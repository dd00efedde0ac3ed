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

// Character-level scanning shared by the Turtle and SPARQL parsers. Both
// grammars use the same terminals for IRIs, prefixed names, strings, numbers
// and language tags.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semdd::turtle {

struct Position {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class LexError : public std::runtime_error {
 public:
  LexError(Position pos, std::string message, std::string token)
      : std::runtime_error(message), pos_(pos), message_(std::move(message)), token_(std::move(token)) {}
  Position position() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

 private:
  Position pos_;
  std::string message_;
  std::string token_;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_.offset >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_.offset + ahead < text_.size() ? text_[pos_.offset + ahead] : '\0';
  }
  char advance();
  bool consume(char c);
  // Case-sensitive literal match.
  bool starts_with(std::string_view s) const { return text_.substr(pos_.offset).starts_with(s); }
  // ASCII case-insensitive keyword match followed by a non-name character.
  bool at_keyword(std::string_view kw) const;
  bool consume_keyword(std::string_view kw);

  // Skips whitespace and `#` comments.
  void skip_trivia();

  Position position() const { return pos_; }
  std::string_view text() const { return text_; }
  std::string_view rest() const { return text_.substr(pos_.offset); }

  // A short excerpt at the current position, for error messages.
  std::string token_at() const;
  [[noreturn]] void fail(std::string message) const;
  [[noreturn]] void fail_at(Position pos, std::string message, std::string token) const;

 private:
  std::string_view text_;
  Position pos_;
};

bool is_name_start_char(char c);
bool is_name_char(char c);

// `<...>` with \u / \U escapes decoded. Cursor must be at '<'.
std::string lex_iri_ref(Cursor& c);

struct PrefixedName {
  std::string prefix;
  std::string local;
  Position position;
};
// PN_PREFIX? ':' PN_LOCAL?. Returns nullopt (cursor untouched) if the input
// is not a prefixed name.
std::optional<PrefixedName> lex_prefixed_name(Cursor& c);

// Quoted string ('...', "...", '''...''' or """...""") with escapes decoded.
std::string lex_string(Cursor& c);

// '@' followed by a language tag. Cursor must be at '@'.
std::string lex_lang_tag(Cursor& c);

enum class NumberKind { Integer, Decimal, Double };
struct NumberLexeme {
  NumberKind kind;
  std::string text;
};
// Bare numeric literal; nullopt (cursor untouched) if none starts here.
std::optional<NumberLexeme> lex_number(Cursor& c);

// Blank node label after `_:`. Cursor must be at '_'.
std::string lex_blank_label(Cursor& c);

}  // namespace semdd::turtle
