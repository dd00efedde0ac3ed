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

#include <random>

#include "random_queries.hpp"
#include "semdd/rdf/vocab.hpp"
#include "semdd/turtle/turtle.hpp"

using namespace semdd;
using rdf::Term;

TEST(TurtleParse, PrefixesPredicateListsAndObjectLists) {
  auto doc = turtle::parse_turtle(R"(
    @prefix ex: <http://example.org/> .
    PREFIX ncit: <http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#>
    # comment
    ex:r1 a ex:Rodent ;
      ncit:age 30 , 31.5 , 1e2 ;
      ex:name "Rat \"one\""@en ;
      ex:flag true .
    _:b ex:p <http://other.example/x> .
  )");
  ASSERT_EQ(doc.prefixes.size(), 2u);
  ASSERT_EQ(doc.triples.size(), 7u);
  EXPECT_EQ(doc.triples[0].predicate.value, vocab::kRdfType);
  EXPECT_EQ(doc.triples[1].object, Term::literal("30", vocab::kXsdInteger));
  EXPECT_EQ(doc.triples[2].object, Term::literal("31.5", vocab::kXsdDecimal));
  EXPECT_EQ(doc.triples[3].object, Term::literal("1e2", vocab::kXsdDouble));
  EXPECT_EQ(doc.triples[4].object, Term::lang_literal("Rat \"one\"", "en"));
  EXPECT_EQ(doc.triples[5].object, Term::boolean(true));
  EXPECT_TRUE(doc.triples[6].subject.is_blank());
}

TEST(TurtleParse, ErrorsCarryLineAndColumn) {
  try {
    turtle::parse_turtle("@prefix ex: <http://example.org/> .\nex:a ex:p nope:x .\n");
    FAIL() << "expected ParseError";
  } catch (const turtle::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 11u);
    EXPECT_NE(e.message().find("nope"), std::string::npos);
  }
  EXPECT_THROW(turtle::parse_turtle("<http://x/a> <http://x/p> \"unterminated ."), turtle::ParseError);
  EXPECT_THROW(turtle::parse_turtle("<http://x/a> <http://x/p> <http://x/o>"), turtle::ParseError);
  EXPECT_THROW(turtle::parse_turtle("<http://x/a> <http://x/p> ( 1 2 ) ."), turtle::ParseError);
  EXPECT_THROW(turtle::parse_turtle("<http://x/a> <http://x/p> \"x\"^^<http://www.w3.org/2001/XMLSchema#integer> ."),
               turtle::ParseError);
}

TEST(TurtleSerialize, IsDeterministicAndDeclaresPrefixes) {
  auto pm = rdf::PrefixMap::standard();
  std::vector<rdf::Triple> t = {
      {Term::iri(vocab::cuci("b")), Term::iri(vocab::ncit("age")), Term::literal("7", vocab::kXsdInteger)},
      {Term::iri(vocab::cuci("a")), Term::iri(vocab::kRdfType), Term::iri(vocab::prov("Agent"))},
  };
  auto one = turtle::serialize_turtle(t, pm);
  std::reverse(t.begin(), t.end());
  EXPECT_EQ(one, turtle::serialize_turtle(t, pm));
  EXPECT_NE(one.find("@prefix ncit:"), std::string::npos);
  EXPECT_LT(one.find("cuci:a"), one.find("cuci:b"));
}

TEST(TurtleRoundTrip, RandomGraphs) {
  std::mt19937_64 rng(11);
  rdf::PrefixMap pm = rdf::PrefixMap::standard();
  pm.set("ex", "http://example.org/");
  for (int i = 0; i < 100; ++i) {
    auto g = testkit::random_turtle_graph(rng, 1 + rng() % 60);
    auto text = turtle::serialize_turtle(g, pm);
    auto back = turtle::parse_turtle(text).triples;
    std::sort(back.begin(), back.end());
    ASSERT_EQ(back, g) << text;
  }
}

TEST(TurtleRoundTrip, EscapesSurviveWithoutPrefixes) {
  std::vector<rdf::Triple> g = {{Term::iri("http://x.example/a"), Term::iri("http://x.example/p"),
                                 Term::literal("q\"\\\n\r\t\xE2\x9C\x93")}};
  auto back = turtle::parse_turtle(turtle::serialize_turtle(g, rdf::PrefixMap{})).triples;
  EXPECT_EQ(back, g);
}
