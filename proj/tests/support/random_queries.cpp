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

#include "random_queries.hpp"

#include <algorithm>
#include <set>

#include "semdd/rdf/vocab.hpp"

namespace semdd::testkit {

using rdf::Term;

namespace {

const std::string kEx = "http://example.org/";

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& one_of(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

Term node(std::mt19937_64& rng, std::size_t subjects) {
  if (chance(rng, 0.05)) return Term::blank("b" + std::to_string(pick(rng, 4)));
  return Term::iri(kEx + "s" + std::to_string(pick(rng, subjects)));
}

Term value(std::mt19937_64& rng, std::size_t subjects) {
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  if (r < 0.5) return node(rng, subjects);
  if (r < 0.75) return Term::literal(std::to_string(pick(rng, 10)), vocab::kXsdInteger);
  if (r < 0.9) return Term::literal(std::to_string(pick(rng, 10)) + ".5", vocab::kXsdDecimal);
  return Term::literal(std::string(1, static_cast<char>('a' + pick(rng, 5))));
}

std::string constant_text(std::mt19937_64& rng) {
  switch (pick(rng, 5)) {
    case 0: return "ex:s" + std::to_string(pick(rng, 8));
    case 1: return std::to_string(pick(rng, 10));
    case 2: return std::to_string(pick(rng, 10)) + ".5";
    case 3: return "\"" + std::string(1, static_cast<char>('a' + pick(rng, 5))) + "\"";
    default: return std::to_string(pick(rng, 10));
  }
}

std::string number_text(std::mt19937_64& rng) {
  return chance(rng, 0.6) ? std::to_string(pick(rng, 10)) : std::to_string(pick(rng, 10)) + ".5";
}

}  // namespace

std::vector<rdf::Triple> RandomGraph::triples() const {
  std::vector<rdf::Triple> out;
  for (const auto& [g, t] : quads) out.push_back(t);
  return out;
}

void RandomGraph::load_into(rdf::GraphStore& store) const {
  for (const auto& [g, t] : quads) store.insert(g, t);
}

RandomGraph random_graph(std::mt19937_64& rng, std::size_t triples, std::size_t graphs) {
  RandomGraph g;
  std::size_t subjects = std::max<std::size_t>(4, triples / 8);
  for (std::size_t i = 0; i < triples; ++i) {
    rdf::Triple t{node(rng, subjects), Term::iri(kEx + "p" + std::to_string(pick(rng, 6))), value(rng, subjects)};
    std::string graph = "urn:g" + std::to_string(pick(rng, std::max<std::size_t>(1, graphs)));
    g.quads.emplace_back(graph, t);
    if (chance(rng, 0.05)) g.quads.emplace_back("urn:g" + std::to_string(graphs), t);  // duplicate elsewhere
  }
  return g;
}

RandomQuery random_query(std::mt19937_64& rng) {
  std::vector<std::string> elements;
  std::vector<std::string> nodes;   // vars that may hold subjects
  std::vector<std::string> all;     // every var bound by a pattern
  int next_var = 0;
  auto fresh = [&] { return "?v" + std::to_string(next_var++); };
  auto add = [&](std::vector<std::string>& v, const std::string& x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  };
  auto predicate = [&] { return "ex:p" + std::to_string(pick(rng, 6)); };

  std::size_t units = 1 + pick(rng, 4);
  for (std::size_t i = 0; i < units; ++i) {
    std::string s, o;
    if (i == 0 || (!nodes.empty() && chance(rng, 0.7))) {
      s = i == 0 ? fresh() : one_of(rng, nodes);
    } else {
      s = fresh();
    }
    bool s_new = std::find(all.begin(), all.end(), s) == all.end();
    if (i > 0 && s_new) {
      o = one_of(rng, all);
    } else {
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      if (r < 0.6 || all.empty()) o = fresh();
      else if (r < 0.8) o = one_of(rng, all);
      else o = constant_text(rng);
    }
    if (chance(rng, 0.2)) {
      elements.push_back(s + " " + predicate() + "/" + predicate() + " " + o + " .");
    } else if (chance(rng, 0.1)) {
      std::string p = "?pv" + std::to_string(i);
      elements.push_back(s + " " + p + " " + o + " .");
      add(all, p);
    } else {
      elements.push_back(s + " " + predicate() + " " + o + " .");
    }
    add(nodes, s);
    add(all, s);
    if (o[0] == '?') {
      add(all, o);
      add(nodes, o);
    }
  }

  std::vector<std::string> values = all;
  if (chance(rng, 0.3)) {
    std::size_t pos = 1 + pick(rng, elements.size());
    // Vars bound before the BIND; occasionally one bound later (masked).
    std::set<std::string> before;
    for (std::size_t i = 0; i < pos; ++i) {
      for (const auto& v : all) {
        if (elements[i].find(v + " ") != std::string::npos || elements[i].find(v + " .") != std::string::npos) {
          before.insert(v);
        }
      }
    }
    std::string x = before.empty() || chance(rng, 0.1) ? one_of(rng, all)
                                                       : *std::next(before.begin(), static_cast<long>(pick(rng, before.size())));
    const std::vector<std::string> forms = {x + " + 1", x + " * 2", x + " / 2", "IF(" + x + " > 4, " + x + ", 0)",
                                            x + " - 0.5", "-" + x, x + " / 0"};
    elements.insert(elements.begin() + static_cast<long>(pos), "BIND(" + one_of(rng, forms) + " AS ?w)");
    values.push_back("?w");
    if (chance(rng, 0.2)) elements.push_back(one_of(rng, nodes) + " " + predicate() + " ?w .");
  }

  std::size_t filters = pick(rng, 3);
  for (std::size_t i = 0; i < filters; ++i) {
    const std::vector<std::string> ops = {"<", ">", "<=", ">=", "=", "!="};
    auto atom = [&] { return one_of(rng, values) + " " + one_of(rng, ops) + " " + constant_text(rng); };
    std::string f;
    switch (pick(rng, 4)) {
      case 0: f = atom(); break;
      case 1: f = "(" + atom() + ") && (" + atom() + ")"; break;
      case 2: f = "(" + atom() + ") || (" + atom() + ")"; break;
      default: f = "!(" + atom() + ")"; break;
    }
    elements.insert(elements.begin() + static_cast<long>(pick(rng, elements.size() + 1)), "FILTER(" + f + ")");
  }

  RandomQuery rq;
  std::vector<std::string> projected;
  std::string head;
  std::string tail;
  bool distinct = chance(rng, 0.3);
  if (chance(rng, 0.25)) {
    std::vector<std::string> keys;
    if (chance(rng, 0.85)) keys.push_back(one_of(rng, values));
    if (!keys.empty() && chance(rng, 0.3)) add(keys, one_of(rng, values));
    std::string select = keys.empty() ? "" : [&] {
      std::string s;
      for (const auto& k : keys) s += k + " ";
      return s;
    }();
    projected = keys;
    std::size_t aggs = 1 + pick(rng, 2);
    for (std::size_t i = 0; i < aggs; ++i) {
      const std::string x = one_of(rng, values);
      const std::vector<std::string> forms = {"COUNT(*)",        "COUNT(DISTINCT *)", "COUNT(" + x + ")",
                                              "COUNT(DISTINCT " + x + ")", "SUM(" + x + ")", "AVG(" + x + ")",
                                              "MIN(" + x + ")",  "MAX(" + x + ")",     "SUM(DISTINCT " + x + ")"};
      std::string name = "?agg" + std::to_string(i);
      select += "(" + one_of(rng, forms) + " AS " + name + ") ";
      projected.push_back(name);
    }
    head = "SELECT " + std::string(distinct ? "DISTINCT " : "") + select;
    if (!keys.empty()) {
      tail += "GROUP BY";
      for (const auto& k : keys) tail += " " + k;
      tail += "\n";
    }
  } else if (chance(rng, 0.2)) {
    head = std::string("SELECT ") + (distinct ? "DISTINCT " : "") + "*";
    projected = values;
    // SELECT * lists where-bound variables; predicate variables from paths
    // never appear, and ?w only if the BIND made it in.
  } else {
    std::vector<std::string> cols;
    std::size_t n = 1 + pick(rng, std::min<std::size_t>(3, values.size()));
    for (std::size_t i = 0; i < n; ++i) add(cols, one_of(rng, values));
    head = std::string("SELECT ") + (distinct ? "DISTINCT " : "");
    for (const auto& c : cols) head += c + " ";
    projected = cols;
    if (chance(rng, 0.15)) {
      head += "((" + one_of(rng, values) + " + " + number_text(rng) + ") AS ?x1) ";
      projected.push_back("?x1");
    }
  }

  bool select_all = head.find('*') != std::string::npos && head.find("(*") == std::string::npos &&
                    head.find("DISTINCT *)") == std::string::npos;
  if (!select_all && chance(rng, 0.4)) {
    std::vector<std::string> keys = projected;
    std::shuffle(keys.begin(), keys.end(), rng);
    std::size_t n = chance(rng, 0.5) ? keys.size() : 1;
    tail += "ORDER BY";
    for (std::size_t i = 0; i < n; ++i) {
      bool desc = chance(rng, 0.4);
      tail += desc ? " DESC(" + keys[i] + ")" : " " + keys[i];
      rq.order_columns.emplace_back(keys[i].substr(1), desc);
    }
    tail += "\n";
    if (distinct && n == keys.size()) {
      rq.ordered = true;
      if (chance(rng, 0.5)) tail += "LIMIT " + std::to_string(1 + pick(rng, 10)) + "\n";
      if (chance(rng, 0.3)) tail += "OFFSET " + std::to_string(pick(rng, 4)) + "\n";
    }
  }

  rq.text = "PREFIX ex: <" + kEx + ">\n" + head + "\nWHERE {\n";
  for (const auto& e : elements) rq.text += "  " + e + "\n";
  rq.text += "}\n" + tail;
  return rq;
}

std::vector<rdf::Triple> random_turtle_graph(std::mt19937_64& rng, std::size_t triples) {
  const std::vector<std::string> strings = {"plain",   "with \"quotes\"", "back\\slash", "line\nbreak",
                                            "tab\there", "caf\xC3\xA9",   "\xF0\x9F\x90\x80 rat", "",
                                            "'single'", "trailing space ", "\r\n crlf", "a # not a comment"};
  const std::vector<std::string> locals = {"s", "node-1", "x.y", "_under", "9lead", "a%20b", "caf\xC3\xA9", "t~"};
  std::vector<rdf::Triple> out;
  for (std::size_t i = 0; i < triples; ++i) {
    auto subject = chance(rng, 0.2) ? Term::blank("b" + std::to_string(pick(rng, 5)))
                                     : Term::iri(kEx + one_of(rng, locals) + std::to_string(pick(rng, 5)));
    auto predicate = chance(rng, 0.1) ? Term::iri(vocab::kRdfType) : Term::iri(kEx + "p" + std::to_string(pick(rng, 4)));
    Term object;
    switch (pick(rng, 9)) {
      case 0: object = Term::iri(kEx + one_of(rng, locals)); break;
      case 1: object = Term::iri("http://other.example/path?q=" + std::to_string(pick(rng, 9)) + "#frag"); break;
      case 2: object = Term::blank("b" + std::to_string(pick(rng, 5))); break;
      case 3: object = Term::literal(one_of(rng, strings)); break;
      case 4: object = Term::lang_literal(one_of(rng, strings), one_of(rng, std::vector<std::string>{"en", "en-GB", "fr"})); break;
      case 5:
        object = Term::literal(one_of(rng, std::vector<std::string>{"0", "-12", "+7", "0042"}), vocab::kXsdInteger);
        break;
      case 6:
        object = Term::literal(one_of(rng, std::vector<std::string>{"1.5", "-0.25", ".5", "3."}), vocab::kXsdDecimal);
        break;
      case 7:
        object = Term::literal(one_of(rng, std::vector<std::string>{"1e3", "-2.5E-4", "1.0e0"}), vocab::kXsdDouble);
        break;
      default:
        object = chance(rng, 0.5) ? Term::literal(chance(rng, 0.5) ? "true" : "false", vocab::kXsdBoolean)
                                  : Term::literal("2026-10-16", vocab::xsd("date"));
    }
    out.push_back({subject, predicate, object});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace semdd::testkit
