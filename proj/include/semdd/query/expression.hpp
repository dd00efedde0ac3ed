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

// Expression evaluation. An empty optional stands for a SPARQL type error.

#pragma once

#include <optional>

#include "semdd/query/algebra.hpp"
#include "semdd/rdf/term.hpp"

namespace semdd::query {

class Environment {
 public:
  virtual ~Environment() = default;
  // nullptr when the variable is unbound.
  virtual const rdf::Term* lookup(const Expr& var) const = 0;
  // Value of an aggregate sub-expression; only grouped evaluation has any.
  virtual std::optional<rdf::Term> aggregate(const Expr&) const { return std::nullopt; }
};

std::optional<rdf::Term> evaluate(const Expr& e, const Environment& env);

// Effective boolean value.
std::optional<bool> effective_boolean(const rdf::Term& t);

// FILTER semantics: errors count as false.
bool filter_passes(const Expr& e, const Environment& env);

// `=` on two terms; nullopt when the terms are not comparable.
std::optional<bool> rdf_equal(const rdf::Term& a, const rdf::Term& b);
// `<`; nullopt when the terms are not comparable.
std::optional<bool> rdf_less(const rdf::Term& a, const rdf::Term& b);

// Total order used by ORDER BY: unbound (nullptr) < blank < IRI < literal.
// Numeric literals come before other literals and sort by value.
int order_compare(const rdf::Term* a, const rdf::Term* b);

}  // namespace semdd::query
