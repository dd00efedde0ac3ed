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
#include <random>

#include "stats_oracle.hpp"
#include "semdd/bench/harness.hpp"
#include "semdd/bench/report.hpp"
#include "semdd/bench/stats.hpp"
#include "semdd/bench/synth.hpp"
#include "semdd/query/executor.hpp"

namespace semdd {
namespace {

using bench::BenchmarkRecord;
using testkit::Column;

double rel(long double a, long double b) {
  return static_cast<double>(std::fabs(a - b) / std::max<long double>(1, std::fabs(b)));
}

TEST(Synth, ExactSizes) {
  for (const char* shape : {"rodent", "human", "heart-rate"}) {
    std::size_t tmpl = bench::template_size(shape);
    for (std::size_t n : {tmpl, tmpl + 1, 3 * tmpl - 1, std::size_t{1564}, std::size_t{13299}}) {
      rdf::GraphStore st;
      bench::synth_graph(st, "urn:g", n, shape);
      EXPECT_EQ(st.size("urn:g"), n) << shape << " " << n;
    }
    rdf::GraphStore st;
    EXPECT_THROW(bench::synth_graph(st, "urn:g", tmpl - 1, shape), std::invalid_argument);
  }
  EXPECT_THROW(bench::canonical_shape("mouse"), std::invalid_argument);
}

TEST(Synth, Deterministic) {
  rdf::GraphStore a, b;
  bench::synth_graph(a, "urn:g", 5000, "rodent", 7);
  bench::synth_graph(b, "urn:g", 5000, "rodent", 7);
  auto q = "SELECT ?s ?p ?o WHERE { ?s ?p ?o } ORDER BY ?s ?p ?o";
  EXPECT_EQ(query::run_query(q, a).table.rows, query::run_query(q, b).table.rows);
}

TEST(Harness, SpecValidation) {
  auto ok = R"({"graphs": [{"name": "g", "shape": "human", "triples": 100}],
                "queries": [{"label": "L", "graph": "g", "query": "SELECT * WHERE { ?s ?p ?o }"}],
                "repetitions": 3})";
  auto spec = bench::load_bench_spec(ok);
  EXPECT_EQ(spec.repetitions, 3);
  EXPECT_EQ(bench::bench_spec_from_json(bench::to_json(spec)).queries[0].text, spec.queries[0].text);
  EXPECT_THROW(bench::load_bench_spec(R"({"graphs": [], "queries": [{"label": "L", "graph": "x", "query": ""}]})"),
               std::invalid_argument);
  EXPECT_THROW(bench::load_bench_spec(R"({"graphs": [], "queries": [], "repetitions": 1})"), std::invalid_argument);
  EXPECT_THROW(bench::load_bench_spec(R"({"graphs": [{"name": "g", "shape": "fish", "triples": 10}], "queries": []})"),
               std::invalid_argument);
}

TEST(Harness, RunsEveryRepetition) {
  auto spec = bench::load_bench_spec(R"({"graphs": [{"name": "g", "shape": "human", "triples": 80}],
      "queries": [{"label": "ages", "graph": "g",
                   "query": "PREFIX ncit: <http://ncicb.nci.nih.gov/xml/owl/EVS/Thesaurus.owl#> SELECT ?a WHERE { ?d ncit:age ?a }"},
                  {"label": "broken", "graph": "g", "query": "SELECT WHERE"}],
      "repetitions": 4, "warmup": 0})");
  auto out = bench::run_bench(spec);
  ASSERT_EQ(out.records.size(), 4u);
  EXPECT_EQ(out.errors.size(), 1u);
  for (const auto& r : out.records) {
    EXPECT_EQ(r.label, "ages");
    EXPECT_EQ(r.graph_size, 80u);
    EXPECT_EQ(r.return_size, 10u);  // 8 triples per human subject
    EXPECT_GE(r.elapsed_ms, 0);
  }
}

TEST(Harness, SummarizeAgainstOracle) {
  std::vector<BenchmarkRecord> recs = {
      {"a", 10, 1, 1.0}, {"a", 10, 1, 2.0}, {"a", 10, 1, 4.5}, {"b", 20, 3, 7.0}};
  auto s = bench::summarize(recs);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].label, "a");
  EXPECT_EQ(s[0].n, 3u);
  EXPECT_NEAR(s[0].mean_ms, static_cast<double>(testkit::oracle_mean({1.0L, 2.0L, 4.5L})), 1e-12);
  EXPECT_NEAR(s[0].sd_ms, static_cast<double>(testkit::oracle_sd({1.0L, 2.0L, 4.5L})), 1e-12);
  EXPECT_TRUE(std::isnan(s[1].sd_ms));
  auto j = bench::to_json(s);
  EXPECT_TRUE(j[1]["sd_ms"].is_null());
}

TEST(Harness, RecordsCsvRoundTrip) {
  std::vector<BenchmarkRecord> recs = {{"Rodent, demographics", 1564, 3, 0.1234567890123},
                                       {"x", 1577291, 100000, 12345.5}};
  auto back = bench::records_from_csv(bench::records_to_csv(recs));
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].label, recs[i].label);
    EXPECT_EQ(back[i].graph_size, recs[i].graph_size);
    EXPECT_EQ(back[i].return_size, recs[i].return_size);
    EXPECT_DOUBLE_EQ(back[i].elapsed_ms, recs[i].elapsed_ms);
  }
  EXPECT_THROW(bench::records_from_csv("label,graph_size\nx,1\n"), std::invalid_argument);
  EXPECT_THROW(bench::records_from_csv("label,graph_size,return_size,elapsed_ms\nx,1,2,fast\n"),
               std::invalid_argument);
}

// Reference values from scipy.stats / statsmodels.
TEST(Stats, FSurvivalKnownValues) {
  EXPECT_NEAR(bench::f_survival(57.8, 2, 57) / 1.9354004262346927e-14, 1.0, 1e-9);
  EXPECT_NEAR(bench::f_survival(3.0, 4, 10), 0.07232322228814023, 1e-12);
  EXPECT_EQ(bench::f_survival(0, 2, 5), 1.0);
  EXPECT_NEAR(static_cast<double>(testkit::oracle_f_survival(57.8L, 2, 57)) / 1.9354004262346927e-14, 1.0, 1e-9);
}

TEST(Stats, OlsKnownDataset) {
  bench::Matrix<double> X(6, 2);
  X << 1, 2, 2, 1, 3, 4, 4, 3, 5, 6, 6, 5;
  bench::Vector<double> y(6);
  y << 1.1, 2.3, 2.9, 4.2, 5.1, 5.8;
  auto fit = bench::ols<double>(X, y);
  EXPECT_NEAR(fit.coefficients(0), 0.28541667, 1e-8);
  EXPECT_NEAR(fit.coefficients(1), 1.00208333, 1e-8);
  EXPECT_NEAR(fit.coefficients(2), -0.06458333, 1e-8);
  EXPECT_NEAR(fit.f_statistic, 227.0760000000001, 1e-8);
  EXPECT_NEAR(fit.p_value, 0.0005316073121171651, 1e-12);
  EXPECT_NEAR(fit.r_squared, 0.993437631247375, 1e-12);
  EXPECT_NEAR(fit.adjusted_r_squared, 0.9890627187456251, 1e-12);
  EXPECT_EQ(fit.df_model, 2);
  EXPECT_EQ(fit.df_residual, 3);
  EXPECT_NEAR(bench::pearson(X.col(0), y), 0.9959900401493974, 1e-12);
}

TEST(Stats, OlsSingularDesign) {
  bench::Matrix<double> X(5, 2);
  X << 1, 2, 2, 4, 3, 6, 4, 8, 5, 10;
  bench::Vector<double> y(5);
  y << 1, 3, 2, 5, 4;
  EXPECT_THROW(bench::ols<double>(X, y), bench::SingularDesign);
}

TEST(Stats, RandomDatasetsAgreeWithOracle) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(6, 60)(rng);
    bench::Matrix<long double> X(n, 2);
    bench::Vector<long double> y(n);
    Column x1, x2, yy;
    for (int i = 0; i < n; ++i) {
      long double a = u(rng), b = u(rng);
      long double v = 0.5 + 1.5 * a - 0.7 * b + u(rng);
      X(i, 0) = a;
      X(i, 1) = b;
      y(i) = v;
      x1.push_back(a);
      x2.push_back(b);
      yy.push_back(v);
    }
    auto fit = bench::ols<long double>(X, y);
    auto ref = testkit::oracle_ols({x1, x2}, yy);
    for (int k = 0; k < 3; ++k) EXPECT_LT(rel(fit.coefficients(k), ref.coefficients[k]), 1e-9);
    EXPECT_LT(rel(fit.r_squared, ref.r_squared), 1e-9);
    EXPECT_LT(rel(fit.f_statistic, ref.f_statistic), 1e-9);
    EXPECT_LT(rel(fit.p_value, ref.p_value), 1e-9);
    EXPECT_LT(rel(bench::pearson(X.col(0), y), testkit::oracle_pearson(x1, yy)), 1e-9);
  }
}

std::vector<BenchmarkRecord> synthetic_records(std::mt19937_64& rng) {
  std::vector<BenchmarkRecord> recs;
  std::normal_distribution<double> noise(0, 0.05);
  std::size_t sizes[] = {1564, 13299, 20253, 54499, 96210, 1577291};
  std::size_t returns[] = {3, 40, 9, 700, 120, 25000};
  for (int i = 0; i < 6; ++i) {
    for (int rep = 0; rep < 10; ++rep) {
      double t = std::exp(-6 + 0.8 * std::log(double(sizes[i])) + 0.1 * std::log(double(returns[i])) + noise(rng));
      recs.push_back({"q" + std::to_string(i), sizes[i], returns[i], t});
    }
  }
  return recs;
}

TEST(Report, LogLogAgainstOracle) {
  std::mt19937_64 rng(5);
  auto recs = synthetic_records(rng);
  auto rep = bench::analyze_loglog(recs);
  Column ls, lr, lt;
  for (const auto& r : recs) {
    ls.push_back(std::log(static_cast<long double>(r.graph_size)));
    lr.push_back(std::log(static_cast<long double>(r.return_size)));
    lt.push_back(std::log(static_cast<long double>(r.elapsed_ms)));
  }
  auto ref = testkit::oracle_ols({ls, lr}, lt);
  EXPECT_EQ(rep.n, 60u);
  EXPECT_EQ(rep.df_model, 2);
  EXPECT_EQ(rep.df_residual, 57);
  EXPECT_LT(rel(rep.intercept, ref.coefficients[0]), 1e-9);
  EXPECT_LT(rel(rep.beta_size, ref.coefficients[1]), 1e-9);
  EXPECT_LT(rel(rep.beta_return, ref.coefficients[2]), 1e-9);
  EXPECT_LT(rel(rep.r_size_time, testkit::oracle_pearson(ls, lt)), 1e-9);
  EXPECT_LT(rel(rep.r_return_time, testkit::oracle_pearson(lr, lt)), 1e-9);
  EXPECT_LT(rel(rep.r_size_return, testkit::oracle_pearson(ls, lr)), 1e-9);
  EXPECT_GT(rep.r_size_time, 0.9);
  EXPECT_NEAR(rep.beta_size, 0.8, 0.05);
  auto j = bench::to_json(rep);
  EXPECT_EQ(j["df"], nlohmann::json::array({2, 57}));
  EXPECT_NE(bench::format_report(rep).find("57"), std::string::npos);
}

TEST(Report, RejectsBadRecords) {
  std::mt19937_64 rng(1);
  auto recs = synthetic_records(rng);
  recs[3].elapsed_ms = 0;
  EXPECT_THROW(bench::analyze_loglog(recs), std::invalid_argument);
  recs = synthetic_records(rng);
  recs.resize(3);
  EXPECT_THROW(bench::analyze_loglog(recs), std::invalid_argument);
  recs = synthetic_records(rng);
  for (auto& r : recs) r.return_size = r.graph_size;  // collinear
  EXPECT_THROW(bench::analyze_loglog(recs), bench::SingularDesign);
}

TEST(Report, PValueFormatting) {
  EXPECT_EQ(bench::format_p_value(1e-14), "< 1e-12");
  EXPECT_EQ(bench::format_p_value(0.0005316073), "0.0005316");
  EXPECT_EQ(bench::format_p_value(0.5), "0.5");
}

}  // namespace
}  // namespace semdd
