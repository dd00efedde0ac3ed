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


#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "semdd/bench/synth.hpp"
#include "semdd/query/executor.hpp"
#include "semdd/rdf/graph_store.hpp"
#include "semdd/turtle/turtle.hpp"
#include "semdd/prov/builtin_schemas.hpp"
#include "semdd/prov/csv.hpp"
#include "semdd/prov/schema.hpp"
#include "semdd/prov/transform.hpp"
#include "semdd/rdf/vocab.hpp"

namespace semdd {
namespace {

using prov::NodeKind;
using prov::Relation;
using rdf::Term;
using rdf::Triple;

TEST(Csv, QuotesBomAndCrlf) {
  auto t = prov::parse_csv("\xEF\xBB\xBF" "a,b\r\n\"x, y\",\"he said \"\"hi\"\"\"\r\n1,\r\n");
  ASSERT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "x, y");
  EXPECT_EQ(t.rows[0][1], "he said \"hi\"");
  EXPECT_EQ(t.rows[1][1], "");
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_FALSE(t.column("c"));
}

TEST(Csv, ErrorsCarryLineNumbers) {
  try {
    prov::parse_csv("a,b\n1,2\n3\n");
    FAIL();
  } catch (const prov::CsvError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(prov::parse_csv("a,b\n\"open,2\n"), prov::CsvError);
  EXPECT_THROW(prov::parse_csv("a,a\n1,2\n"), prov::CsvError);
  EXPECT_THROW(prov::parse_csv(""), prov::CsvError);
}

TEST(Csv, WriteParsesBack) {
  prov::SourceTable t{{"id", "note"}, {{"1", "plain"}, {"2", "comma, \"quote\"\nnewline"}}};
  auto back = prov::parse_csv(prov::write_csv(t));
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(Schema, BuiltinsValidate) {
  auto names = prov::builtin_schema_names();
  EXPECT_EQ(names.size(), 3u);
  for (const auto& n : names) {
    auto s = prov::builtin_schema(n);
    ASSERT_TRUE(s) << n;
    EXPECT_TRUE(prov::validate(*s).empty()) << n;
    // json round trip
    auto again = prov::schema_from_json(prov::schema_to_json(*s));
    EXPECT_EQ(prov::schema_to_json(again), prov::schema_to_json(*s));
  }
  EXPECT_FALSE(prov::builtin_schema("nope"));
}

TEST(Schema, RelationDomainsAndRanges) {
  int allowed = 0;
  for (auto r : {Relation::WasGeneratedBy, Relation::WasAssociatedWith, Relation::Used, Relation::WasAttributedTo,
                 Relation::ActedOnBehalfOf}) {
    for (auto a : {NodeKind::Entity, NodeKind::Activity, NodeKind::Agent}) {
      for (auto b : {NodeKind::Entity, NodeKind::Activity, NodeKind::Agent}) allowed += prov::relation_allowed(r, a, b);
    }
    EXPECT_EQ(prov::parse_relation(prov::relation_name(r)), r);
  }
  EXPECT_EQ(allowed, 5);
  EXPECT_TRUE(prov::relation_allowed(Relation::WasGeneratedBy, NodeKind::Entity, NodeKind::Activity));
  EXPECT_FALSE(prov::relation_allowed(Relation::WasGeneratedBy, NodeKind::Activity, NodeKind::Entity));
}

std::string schema_with(const std::string& nodes, const std::string& edges) {
  return R"({"name": "t", "namespaces": {"ex": "http://example.org/", "xsd": "http://www.w3.org/2001/XMLSchema#"}, "nodes": [)" + nodes + R"(], "edges": [)" +
         edges + "]}";
}

TEST(Schema, ValidationListsEveryProblem) {
  std::string text = schema_with(
      R"({"id": "a", "kind": "agent", "iri": "ex:a/{id}"},
         {"id": "e", "kind": "entity", "iri": "zz:e/{id}",
          "attributes": [{"predicate": "ex:n", "value": "abc", "datatype": "xsd:integer"}]})",
      R"({"from": "a", "relation": "wasGeneratedBy", "to": "e"},
         {"from": "e", "relation": "wasAttributedTo", "to": "ghost"})");
  try {
    prov::load_schema(text);
    FAIL();
  } catch (const prov::SchemaError& e) {
    std::string all;
    for (const auto& m : e.errors()) all += m + "\n";
    EXPECT_NE(all.find("zz"), std::string::npos) << all;
    EXPECT_NE(all.find("abc"), std::string::npos) << all;
    EXPECT_NE(all.find("ghost"), std::string::npos) << all;
    EXPECT_NE(all.find("domain/range"), std::string::npos) << all;
    EXPECT_GE(e.errors().size(), 4u);
  }
}

TEST(Schema, RejectsUnknownKindAndRelation) {
  EXPECT_THROW(prov::load_schema(schema_with(R"({"id": "a", "kind": "robot", "iri": "ex:a"})", "")),
               prov::SchemaError);
  EXPECT_THROW(prov::load_schema(schema_with(R"({"id": "a", "kind": "agent", "iri": "ex:a"})",
                                             R"({"from": "a", "relation": "likes", "to": "a"})")),
               prov::SchemaError);
}

TEST(Schema, Placeholders) {
  EXPECT_EQ(prov::placeholders("conte:rodent/{animalNumber}/roi/{region}"),
            (std::vector<std::string>{"animalNumber", "region"}));
  EXPECT_TRUE(prov::placeholders("ex:fixed").empty());
  EXPECT_THROW(prov::placeholders("ex:{open"), std::invalid_argument);
  EXPECT_THROW(prov::placeholders("ex:close}"), std::invalid_argument);
  EXPECT_THROW(prov::placeholders("ex:{}"), std::invalid_argument);
}

TEST(Schema, Coercion) {
  EXPECT_EQ(prov::coerce(" 12 ", vocab::kXsdDecimal)->value, "12.0");
  EXPECT_EQ(prov::coerce("11.5", vocab::kXsdDecimal)->value, "11.5");
  EXPECT_EQ(prov::coerce("7", vocab::kXsdInteger)->value, "7");
  EXPECT_FALSE(prov::coerce("7.5", vocab::kXsdInteger));
  EXPECT_FALSE(prov::coerce("seven", vocab::kXsdDecimal));
  EXPECT_EQ(prov::coerce("1", vocab::kXsdBoolean), Term::boolean(true));
  EXPECT_FALSE(prov::coerce("yes", vocab::kXsdBoolean));
  EXPECT_EQ(prov::coerce("1e3", vocab::kXsdDouble)->datatype, vocab::kXsdDouble);
}

TEST(Transform, PercentEncode) {
  EXPECT_EQ(prov::percent_encode("abc-._~09"), "abc-._~09");
  EXPECT_EQ(prov::percent_encode("a b/c"), "a%20b%2Fc");
  EXPECT_EQ(prov::percent_encode("\xC3\xA9"), "%C3%A9");
}

prov::SourceTable fixture_table(const std::string& name) {
  return prov::parse_csv(testkit::read_data("fixtures/" + name + ".csv"));
}

bool contains(const std::vector<Triple>& ts, const Term& s, const std::string& p, const Term& o) {
  return std::find(ts.begin(), ts.end(), Triple{s, Term::iri(p), o}) != ts.end();
}

TEST(Transform, HumanFixtureByHand) {
  auto triples = prov::transform(fixture_table("human-assessment"), *prov::builtin_schema("human-assessment"));
  // per subject: agent (type, species, id), activity (type), entity (type,
  // age), two edges
  EXPECT_EQ(triples.size(), 4u * 8u);
  std::string base(vocab::kConte);
  Term h1 = Term::iri(base + "human/H001");
  Term d1 = Term::iri(base + "human/H001/demographics");
  Term a1 = Term::iri(base + "human/H001/assessment");
  EXPECT_TRUE(contains(triples, h1, vocab::kRdfType, Term::iri(vocab::prov("Agent"))));
  EXPECT_TRUE(contains(triples, h1, vocab::ncit("species"), Term::literal("Homo sapiens")));
  EXPECT_TRUE(contains(triples, d1, vocab::ncit("age"), Term::literal("0.0", vocab::kXsdDecimal)));
  EXPECT_TRUE(contains(triples, d1, vocab::prov("wasGeneratedBy"), a1));
  EXPECT_TRUE(contains(triples, a1, vocab::prov("wasAssociatedWith"), h1));
}

TEST(Transform, RodentFixtureSkipsBlankCells) {
  auto triples = prov::transform(fixture_table("rodent-imaging"), *prov::builtin_schema("rodent-imaging"));
  std::string base(vocab::kConte);
  EXPECT_TRUE(contains(triples, Term::iri(base + "rodent/R002/early-life-stressor"), vocab::cuci("condition"),
                       Term::literal("limited bedding, nesting")));
  EXPECT_TRUE(contains(triples, Term::iri(base + "rodent/R001/demographics"), vocab::ncit("age"),
                       Term::literal("7", vocab::kXsdInteger)));
  std::size_t roi_r001 = 0;
  for (const auto& t : triples) {
    const auto& s = t.subject.value;
    EXPECT_EQ(s.find(base + "rodent/R003/roi"), std::string::npos) << rdf::to_string(t);
    if (s.rfind(base + "rodent/R001/roi/", 0) == 0 && t.predicate.value == vocab::kRdfType &&
        t.object.value == vocab::cuci("RoiSliceHemisphereStatistics")) {
      ++roi_r001;
    }
  }
  EXPECT_EQ(roi_r001, 4u);
  // R003 still has demographics and its stressor entity
  EXPECT_TRUE(contains(triples, Term::iri(base + "rodent/R003/demographics"), vocab::ncit("age"),
                       Term::literal("40", vocab::kXsdInteger)));
  EXPECT_TRUE(std::is_sorted(triples.begin(), triples.end()));
  EXPECT_EQ(std::adjacent_find(triples.begin(), triples.end()), triples.end());
  for (const auto& t : triples) EXPECT_FALSE(rdf::validation_error(t)) << rdf::to_string(t);
}

TEST(Transform, RowOrderDoesNotMatter) {
  auto table = fixture_table("rodent-imaging");
  auto schema = *prov::builtin_schema("rodent-imaging");
  auto expected = prov::transform(table, schema);
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(table.rows.begin(), table.rows.end(), rng);
    EXPECT_EQ(prov::transform(table, schema), expected);
  }
}

TEST(Transform, IriCellsArePercentEncoded) {
  prov::SourceTable t{{"subjectID", "age"}, {{"H 9/x", "3"}}};
  auto triples = prov::transform(t, *prov::builtin_schema("human-assessment"));
  EXPECT_TRUE(contains(triples, Term::iri(std::string(vocab::kConte) + "human/H%209%2Fx"), vocab::ncit("subjectID"),
                       Term::literal("H 9/x")));
}

TEST(Transform, BadCellReportsRowAndColumn) {
  prov::SourceTable t{{"subjectID", "age"}, {{"H1", "3"}, {"H2", "old"}}};
  try {
    prov::transform(t, *prov::builtin_schema("human-assessment"));
    FAIL();
  } catch (const prov::TransformError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), "age");
    EXPECT_EQ(e.value(), "old");
  }
}

TEST(Transform, MissingColumnsAreListed) {
  prov::SourceTable t{{"subjectID"}, {{"H1"}}};
  try {
    prov::transform(t, *prov::builtin_schema("human-assessment"));
    FAIL();
  } catch (const prov::ColumnMismatch& e) {
    EXPECT_EQ(e.missing(), std::vector<std::string>{"age"});
  }
}

// ---- properties over synthetic tables ------------------------------------

std::vector<Triple> synthetic(const std::string& shape, std::size_t subjects, std::uint64_t seed) {
  return prov::transform(bench::synth_rows(shape, 0, subjects, seed), *prov::builtin_schema(shape));
}

TEST(TransformProperties, EdgesRespectProvDomainsAndRanges) {
  // relation -> (subject class, object class), written out independently
  const std::map<std::string, std::pair<std::string, std::string>> rules = {
      {vocab::prov("wasGeneratedBy"), {"Entity", "Activity"}},
      {vocab::prov("wasAssociatedWith"), {"Activity", "Agent"}},
      {vocab::prov("used"), {"Activity", "Entity"}},
      {vocab::prov("wasAttributedTo"), {"Entity", "Agent"}},
      {vocab::prov("actedOnBehalfOf"), {"Agent", "Agent"}},
  };
  for (const auto& shape : prov::builtin_schema_names()) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto triples = synthetic(shape, 5, seed);
      std::set<std::pair<std::string, std::string>> typed;
      for (const auto& t : triples) {
        if (t.predicate.value == vocab::kRdfType) typed.emplace(t.subject.value, t.object.value);
      }
      std::size_t edges = 0;
      for (const auto& t : triples) {
        auto it = rules.find(t.predicate.value);
        if (it == rules.end()) continue;
        ++edges;
        EXPECT_TRUE(typed.count({t.subject.value, vocab::prov(it->second.first)})) << rdf::to_string(t);
        EXPECT_TRUE(typed.count({t.object.value, vocab::prov(it->second.second)})) << rdf::to_string(t);
      }
      EXPECT_GT(edges, 0u) << shape;
    }
  }
}

TEST(TransformProperties, TurtleRoundTripIsExact) {
  for (const auto& shape : prov::builtin_schema_names()) {
    auto triples = synthetic(shape, 6, 9);
    auto schema = *prov::builtin_schema(shape);
    auto back = turtle::parse_turtle(turtle::serialize_turtle(triples, schema.prefix_map())).triples;
    std::sort(back.begin(), back.end());
    EXPECT_EQ(back, triples) << shape;
  }
}

TEST(TransformProperties, DemographicsQueryFindsOneAgePerSubject) {
  const std::pair<std::string, std::string> cases[] = {{"rodent-imaging", "cuci:animalNumber"},
                                                       {"human-assessment", "ncit:subjectID"}};
  for (const auto& [shape, id_predicate] : cases) {
    rdf::GraphStore st;
    st.insert_all("urn:g", synthetic(shape, 12, 4));
    auto q = "SELECT ?id ?age WHERE { ?agent a prov:Agent ; " + id_predicate +
        " ?id . ?act prov:wasAssociatedWith ?agent . ?demo prov:wasGeneratedBy ?act ; ncit:age ?age }";
    auto table = query::run_query(q, st).table;
    std::set<std::string> ids;
    for (const auto& row : table.rows) ids.insert(row[0]->value);
    EXPECT_EQ(table.rows.size(), 12u) << shape;
    EXPECT_EQ(ids.size(), 12u) << shape;
  }
}

}  // namespace
}  // namespace semdd
