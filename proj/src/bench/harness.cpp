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

#include "semdd/bench/harness.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <set>
#include <stdexcept>

#include "semdd/bench/stats.hpp"
#include "semdd/bench/synth.hpp"
#include "semdd/prov/csv.hpp"
#include "semdd/query/executor.hpp"
#include "semdd/query/parser.hpp"
#include "semdd/query/results.hpp"

namespace semdd::bench {

using nlohmann::json;

BenchmarkSpec bench_spec_from_json(const json& j) {
  BenchmarkSpec spec;
  try {
    spec.repetitions = j.value("repetitions", 10);
    spec.warmup = j.value("warmup", 1);
    spec.seed = j.value("seed", std::uint64_t{42});
    spec.optimize = j.value("optimize", true);
    for (const auto& g : j.at("graphs")) {
      spec.graphs.push_back({g.at("name").get<std::string>(), g.at("shape").get<std::string>(),
                             g.at("triples").get<std::size_t>()});
    }
    for (const auto& q : j.at("queries")) {
      spec.queries.push_back({q.at("label").get<std::string>(), q.at("graph").get<std::string>(),
                              q.at("query").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed benchmark spec: ") + e.what());
  }
  if (spec.repetitions < 2) throw std::invalid_argument("benchmark spec: repetitions must be at least 2");
  if (spec.warmup < 0) throw std::invalid_argument("benchmark spec: warmup must be >= 0");
  std::set<std::string> names;
  for (const auto& g : spec.graphs) {
    if (!names.insert(g.name).second) throw std::invalid_argument("benchmark spec: duplicate graph '" + g.name + "'");
    canonical_shape(g.shape);
  }
  for (const auto& q : spec.queries) {
    if (!names.contains(q.graph)) {
      throw std::invalid_argument("benchmark spec: query '" + q.label + "' names unknown graph '" + q.graph + "'");
    }
  }
  return spec;
}

BenchmarkSpec load_bench_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("benchmark spec is not valid JSON: ") + e.what());
  }
  return bench_spec_from_json(j);
}

json to_json(const BenchmarkSpec& spec) {
  json j{{"repetitions", spec.repetitions}, {"warmup", spec.warmup}, {"seed", spec.seed},
         {"optimize", spec.optimize}};
  j["graphs"] = json::array();
  for (const auto& g : spec.graphs) j["graphs"].push_back({{"name", g.name}, {"shape", g.shape}, {"triples", g.triples}});
  j["queries"] = json::array();
  for (const auto& q : spec.queries) j["queries"].push_back({{"label", q.label}, {"graph", q.graph}, {"query", q.text}});
  return j;
}

namespace {

void run_label(const BenchmarkSpec& spec, const BenchQuery& q, const rdf::GraphStore& store, BenchOutcome& out) {
  std::vector<BenchmarkRecord> records;
  try {
    auto parsed = query::parse_query(q.text, store.prefixes());
    auto plan = query::plan_query(parsed, store, {spec.optimize});
    for (int i = 0; i < spec.warmup; ++i) query::execute(plan, store);
    std::optional<std::size_t> returned;
    for (int i = 0; i < spec.repetitions; ++i) {
      auto result = query::execute(plan, store);
      if (returned && *returned != result.stats.result_rows) {
        throw std::runtime_error("return size changed between repetitions");
      }
      returned = result.stats.result_rows;
      records.push_back({q.label, store.total_size(), result.stats.result_rows, result.stats.elapsed_ms});
    }
  } catch (const std::exception& e) {
    out.errors.push_back(q.label + ": " + e.what());
    return;
  }
  out.records.insert(out.records.end(), records.begin(), records.end());
}

}  // namespace

BenchOutcome run_bench(const BenchmarkSpec& spec, const std::map<std::string, const rdf::GraphStore*>& stores,
                       const BenchProgress& progress) {
  BenchOutcome out;
  for (const auto& q : spec.queries) {
    auto it = stores.find(q.graph);
    if (it == stores.end() || it->second == nullptr) {
      out.errors.push_back(q.label + ": no store for graph '" + q.graph + "'");
      continue;
    }
    run_label(spec, q, *it->second, out);
    if (progress) progress("finished " + q.label);
  }
  return out;
}

BenchOutcome run_bench(const BenchmarkSpec& spec, const BenchProgress& progress) {
  BenchOutcome out;
  std::map<std::string, std::unique_ptr<rdf::GraphStore>> stores;
  std::map<std::string, std::size_t> last_use;
  for (std::size_t i = 0; i < spec.queries.size(); ++i) last_use[spec.queries[i].graph] = i;

  for (std::size_t i = 0; i < spec.queries.size(); ++i) {
    const auto& q = spec.queries[i];
    auto& store = stores[q.graph];
    if (!store) {
      const GraphSpec* g = nullptr;
      for (const auto& candidate : spec.graphs) {
        if (candidate.name == q.graph) g = &candidate;
      }
      store = std::make_unique<rdf::GraphStore>();
      try {
        synth_graph(*store, "urn:semdd:bench:" + g->name, g->triples, g->shape, spec.seed);
      } catch (const std::exception& e) {
        out.errors.push_back(q.label + ": " + e.what());
        store.reset();
        continue;
      }
      if (progress) progress("synthesized " + g->name + " (" + std::to_string(store->total_size()) + " triples)");
    }
    run_label(spec, q, *store, out);
    if (progress) progress("finished " + q.label);
    if (last_use[q.graph] == i) stores.erase(q.graph);
  }
  return out;
}

std::vector<QuerySummary> summarize(const std::vector<BenchmarkRecord>& records) {
  std::vector<QuerySummary> out;
  std::vector<std::vector<double>> times;
  for (const auto& r : records) {
    std::size_t k = 0;
    while (k < out.size() && out[k].label != r.label) ++k;
    if (k == out.size()) {
      out.push_back({r.label, r.graph_size, r.return_size, 0, 0, 0});
      times.emplace_back();
    }
    times[k].push_back(r.elapsed_ms);
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    Eigen::Map<const Vector<double>> t(times[k].data(), static_cast<Eigen::Index>(times[k].size()));
    out[k].n = times[k].size();
    out[k].mean_ms = mean(t);
    out[k].sd_ms = t.size() >= 2 ? sample_sd(t) : std::nan("");
  }
  return out;
}

std::string records_to_csv(const std::vector<BenchmarkRecord>& records) {
  prov::SourceTable t;
  t.header = {"label", "graph_size", "return_size", "elapsed_ms"};
  for (const auto& r : records) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), r.elapsed_ms);
    t.rows.push_back({r.label, std::to_string(r.graph_size), std::to_string(r.return_size), std::string(buf, ptr)});
  }
  return prov::write_csv(t);
}

std::vector<BenchmarkRecord> records_from_csv(std::string_view text) {
  auto t = prov::parse_csv(text);
  auto col = [&](const char* name) {
    auto c = t.column(name);
    if (!c) throw std::invalid_argument(std::string("records CSV lacks column '") + name + "'");
    return *c;
  };
  std::size_t label = col("label");
  std::size_t graph = col("graph_size");
  std::size_t ret = col("return_size");
  std::size_t elapsed = col("elapsed_ms");
  std::vector<BenchmarkRecord> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    BenchmarkRecord r;
    r.label = row[label];
    auto parse = [&](const std::string& s, auto& value) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("records CSV row " + std::to_string(i + 1) + ": bad number '" + s + "'");
      }
    };
    parse(row[graph], r.graph_size);
    parse(row[ret], r.return_size);
    parse(row[elapsed], r.elapsed_ms);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace semdd::bench
