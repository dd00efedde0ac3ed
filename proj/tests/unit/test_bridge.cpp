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

#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "fixtures.hpp"
#include "semdd/bridge/age_map.hpp"
#include "semdd/bridge/equivalence.hpp"
#include "semdd/query/executor.hpp"
#include "semdd/query/parser.hpp"

namespace semdd {
namespace {

using bridge::AgeMap;

TEST(AgeMap, DefaultValues) {
  auto h2r = bridge::default_human_to_rodent();
  auto r2h = bridge::default_rodent_to_human();
  EXPECT_NEAR(bridge::map_age(h2r, 0), 7.5, 1e-12);
  EXPECT_NEAR(bridge::map_age(h2r, 1), 9.6, 1e-12);
  EXPECT_NEAR(bridge::map_age(h2r, 5), 18.0, 1e-12);
  EXPECT_NEAR(bridge::map_age(r2h, 7), 0.0, 1e-12);
  EXPECT_NEAR(bridge::map_age(r2h, 30), 11.5, 1e-12);
  EXPECT_NEAR(bridge::map_age(r2h, 40), 16.5, 1e-12);
  EXPECT_EQ(bridge::map_age(r2h, 6.99), 0.0);
  EXPECT_EQ(bridge::map_age(r2h, 0), 0.0);
  EXPECT_EQ(bridge::map_age(h2r, -1), 0.0);
}

TEST(AgeMap, MonotoneAboveThreshold) {
  auto r2h = bridge::default_rodent_to_human();
  double prev = bridge::map_age(r2h, 7);
  for (double d = 7.25; d < 400; d += 0.25) {
    double v = bridge::map_age(r2h, d);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(AgeMap, RejectsNonFinite) {
  auto m = bridge::default_rodent_to_human();
  EXPECT_THROW(bridge::map_age(m, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(bridge::map_age(m, std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(AgeMap, Validation) {
  EXPECT_TRUE(bridge::validate_map(bridge::default_human_to_rodent()).empty());
  AgeMap bad = bridge::default_human_to_rodent();
  bad.slope = 0;
  bad.input_units.clear();
  EXPECT_EQ(bridge::validate_map(bad).size(), 2u);
}

TEST(AgeMap, JsonRoundTrip) {
  auto m = bridge::default_rodent_to_human();
  EXPECT_EQ(bridge::age_map_from_json(bridge::to_json(m)), m);
}

TEST(MapRegistry, RegisterGetList) {
  auto reg = bridge::MapRegistry::with_defaults();
  EXPECT_TRUE(reg.contains(bridge::kHumanToRodent));
  EXPECT_TRUE(reg.contains(bridge::kRodentToHuman));
  EXPECT_THROW(reg.get("missing"), bridge::MapError);
  EXPECT_THROW(reg.register_map(bridge::default_human_to_rodent()), bridge::MapError);
  AgeMap bad = bridge::default_human_to_rodent();
  bad.name = "bad";
  bad.slope = -1;
  EXPECT_THROW(reg.register_map(bad), bridge::MapError);

  AgeMap custom = bridge::default_rodent_to_human();
  custom.name = "a-custom";
  custom.slope = 0.25;
  EXPECT_EQ(reg.register_map(custom), "a-custom");
  auto list = reg.list();
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[0].name, "a-custom");
  auto copy = bridge::MapRegistry::from_catalog(reg.catalog());
  EXPECT_EQ(copy.list(), list);
}

TEST(MapRegistry, ConcurrentReadsDuringRegistration) {
  auto reg = bridge::MapRegistry::with_defaults();
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&] {
      for (int i = 0; i < 500; ++i) EXPECT_EQ(reg.get(bridge::kRodentToHuman).slope, 0.5);
    });
  }
  for (int i = 0; i < 50; ++i) {
    AgeMap m = bridge::default_human_to_rodent();
    m.name = "m" + std::to_string(i);
    reg.register_map(m);
  }
  for (auto& t : readers) t.join();
  EXPECT_EQ(reg.list().size(), 52u);
}

TEST(Equivalence, DecimalLiteral) {
  EXPECT_EQ(bridge::decimal_literal(7), "7.0");
  EXPECT_EQ(bridge::decimal_literal(-3.5), "-3.5");
  EXPECT_EQ(bridge::decimal_literal(0.1), "0.1");
}

TEST(Equivalence, GeneratedQueryParses) {
  for (double tol : {0.0, 0.5}) {
    auto text = bridge::equivalence_query(bridge::default_rodent_to_human(), tol);
    EXPECT_NO_THROW(query::parse_query(text)) << text;
  }
}

TEST(Equivalence, FixtureMatchesBruteForce) {
  auto store = testkit::fixture_store();
  auto pairs = bridge::equivalent_subjects(store, bridge::default_rodent_to_human(), 0);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& p : pairs) {
    got.emplace(p.from_subject, p.to_subject);
    EXPECT_EQ(p.from_units, "postnatal days");
    EXPECT_EQ(p.to_units, "postnatal years");
    EXPECT_DOUBLE_EQ(p.mapped_age, p.to_age);
  }
  auto expected = testkit::brute_force_age_pairs();
  EXPECT_EQ(std::vector(got.begin(), got.end()), expected);
  EXPECT_EQ(expected.size(), 3u);
}

TEST(Equivalence, ShippedQueryAgreesWithBridge) {
  auto store = testkit::fixture_store();
  auto table = query::run_query(testkit::age_match_query(), store).table;
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& row : table.rows) got.emplace(row[0]->value, row[1]->value);
  auto expected = testkit::brute_force_age_pairs();
  EXPECT_EQ(std::vector(got.begin(), got.end()), expected);
}

TEST(Equivalence, ToleranceWidensMatches) {
  auto store = testkit::fixture_store();
  auto r2h = bridge::default_rodent_to_human();
  // H004 is 9.25; R002 maps to 11.5, 2.25 away
  auto strict = bridge::equivalent_subjects(store, r2h, 0);
  auto loose = bridge::equivalent_subjects(store, r2h, 2.25);
  EXPECT_EQ(strict.size(), 3u);
  EXPECT_GT(loose.size(), strict.size());
  bool found = false;
  for (const auto& p : loose) found |= (p.from_subject == "R002" && p.to_subject == "H004");
  EXPECT_TRUE(found);
  // monotone in tolerance
  std::size_t prev = 0;
  for (double tol : {0.0, 0.5, 1.0, 2.25, 5.0, 100.0}) {
    auto n = bridge::equivalent_subjects(store, r2h, tol).size();
    EXPECT_GE(n, prev);
    prev = n;
  }
  EXPECT_EQ(prev, 3u * 4u);
}

TEST(Equivalence, RejectsBadInput) {
  auto store = testkit::fixture_store();
  auto r2h = bridge::default_rodent_to_human();
  EXPECT_THROW(bridge::equivalent_subjects(store, r2h, -1), bridge::EquivalenceError);
  AgeMap wrong_units = r2h;
  wrong_units.input_units = "weeks";
  EXPECT_THROW(bridge::equivalent_subjects(store, wrong_units, 0), bridge::EquivalenceError);
  AgeMap unknown = r2h;
  unknown.from_species = "Mus musculus";
  EXPECT_THROW(bridge::equivalent_subjects(store, unknown, 0), bridge::EquivalenceError);
}

TEST(Equivalence, HumanToRodentDirection) {
  auto store = testkit::fixture_store();
  // H001 (0 y) -> 7.5 d, no rodent at 7.5; with 0.5 tolerance R001 (7 d) matches
  auto pairs = bridge::equivalent_subjects(store, bridge::default_human_to_rodent(), 0.5);
  bool found = false;
  for (const auto& p : pairs) found |= (p.from_subject == "H001" && p.to_subject == "R001");
  EXPECT_TRUE(found);
  EXPECT_TRUE(bridge::equivalent_subjects(store, bridge::default_human_to_rodent(), 0).empty());
}

}  // namespace
}  // namespace semdd
