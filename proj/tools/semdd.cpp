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

// Command-line front end: etl, load, query, bridge, bench and serve.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>

#include "semdd/bench/harness.hpp"
#include "semdd/bench/report.hpp"
#include "semdd/bridge/age_map.hpp"
#include "semdd/bridge/equivalence.hpp"
#include "semdd/prov/builtin_schemas.hpp"
#include "semdd/prov/csv.hpp"
#include "semdd/prov/schema.hpp"
#include "semdd/prov/transform.hpp"
#include "semdd/query/executor.hpp"
#include "semdd/query/parser.hpp"
#include "semdd/query/results.hpp"
#include "semdd/rdf/snapshot.hpp"
#include "semdd/rdf/vocab.hpp"
#include "semdd/service/http.hpp"
#include "semdd/service/service.hpp"
#include "semdd/turtle/turtle.hpp"

namespace fs = std::filesystem;
using namespace semdd;

namespace {

prov::ObjectModelSchema resolve_schema(const std::string& name_or_path) {
  if (auto s = prov::builtin_schema(name_or_path)) return *s;
  return prov::load_schema(rdf::read_file(name_or_path));
}

rdf::GraphStore open_store(const std::string& dir) {
  if (!dir.empty() && fs::exists(fs::path(dir) / "manifest.json")) return rdf::load_snapshot(dir);
  return rdf::GraphStore{};
}

std::string display(const rdf::Term& t, const rdf::PrefixMap& prefixes) {
  if (t.is_blank()) return "_:" + t.value;
  if (t.is_literal()) return t.value;
  if (auto split = prefixes.split(t.value); split && turtle::is_simple_local_name(split->second)) {
    return split->first + ":" + split->second;
  }
  return "<" + t.value + ">";
}

void print_table(const query::ResultTable& table, const rdf::PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& v : table.variables) width.push_back(v.size() + 1);
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(row[i] ? display(*row[i], prefixes) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      std::cout << (i ? "  " : "") << line[i] << std::string(width[i] - line[i].size(), ' ');
    }
    std::cout << "\n";
  };
  std::vector<std::string> header;
  for (const auto& v : table.variables) header.push_back("?" + v);
  emit(header);
  for (const auto& line : cells) emit(line);
}

int run(int argc, char** argv) {
  CLI::App app{"semdd: provenance graphs, SPARQL subset, cross-species age bridge"};
  app.require_subcommand(1);

  // etl
  auto* etl = app.add_subcommand("etl", "Transform a CSV table into Turtle through an object-model schema");
  std::string etl_schema, etl_csv, etl_out, etl_graph, etl_store = "semdd-store";
  etl->add_option("--schema", etl_schema, "Built-in schema name or schema JSON file")->required();
  etl->add_option("--input,--csv", etl_csv, "Source CSV")->required()->check(CLI::ExistingFile);
  etl->add_option("-o,--out", etl_out, "Output Turtle file (stdout if omitted)");
  etl->add_option("--graph", etl_graph, "Also load the triples into this named graph of --store");
  etl->add_option("--store", etl_store, "Store directory used with --graph")->capture_default_str();

  // load
  auto* load = app.add_subcommand("load", "Load a Turtle file into a named graph of a store directory");
  std::string load_file, load_graph, load_store = "semdd-store";
  load->add_option("file", load_file, "Turtle file")->required()->check(CLI::ExistingFile);
  load->add_option("--graph", load_graph, "Graph IRI")->required();
  load->add_option("--store", load_store, "Store directory")->capture_default_str();

  // query
  auto* query = app.add_subcommand("query", "Run a SPARQL query file");
  std::string query_file, query_store = "semdd-store", query_format = "table";
  std::vector<std::string> query_ttl;
  bool query_explain = false, query_textual = false;
  query->add_option("file", query_file, "Query file")->required()->check(CLI::ExistingFile);
  query->add_option("--store", query_store, "Store directory")->capture_default_str();
  query->add_option("--ttl", query_ttl, "Extra Turtle files loaded into the default graph");
  query->add_option("--format", query_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  query->add_flag("--explain", query_explain, "Print the plan with row counts");
  query->add_flag("--no-optimize", query_textual, "Keep patterns in textual order");

  // bridge
  auto* bridge_cmd = app.add_subcommand("bridge", "Cross-species age mapping");
  bridge_cmd->require_subcommand(1);
  std::string bridge_catalog;
  bridge_cmd->add_option("--catalog", bridge_catalog, "Map catalog JSON registered on top of the defaults")
      ->check(CLI::ExistingFile);
  auto* equivalents = bridge_cmd->add_subcommand("equivalents", "Pairs of subjects at equivalent ages");
  std::string eq_map = std::string(bridge::kRodentToHuman), eq_store = "semdd-store";
  double eq_tolerance = 0;
  bool eq_show_query = false;
  equivalents->add_option("--map", eq_map, "Map name")->capture_default_str();
  equivalents->add_option("--tolerance", eq_tolerance, "Age tolerance in output units")->capture_default_str();
  equivalents->add_option("--store", eq_store, "Store directory")->capture_default_str();
  equivalents->add_flag("--show-query", eq_show_query, "Print the generated query");
  auto* maps_cmd = bridge_cmd->add_subcommand("maps", "List registered maps as JSON");
  auto* map_age_cmd = bridge_cmd->add_subcommand("map", "Map one age");
  std::string one_map = std::string(bridge::kRodentToHuman);
  double one_age = 0;
  map_age_cmd->add_option("--map", one_map, "Map name")->capture_default_str();
  map_age_cmd->add_option("age", one_age, "Input age")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Query benchmarks");
  bench_cmd->require_subcommand(1);
  auto* bench_run = bench_cmd->add_subcommand("run", "Synthesize graphs and time the queries of a spec");
  std::string bench_spec, bench_out = "bench-records.csv", bench_report;
  bench_run->add_option("--spec", bench_spec, "Benchmark spec JSON")->required()->check(CLI::ExistingFile);
  bench_run->add_option("--out", bench_out, "Records CSV")->capture_default_str();
  bench_run->add_option("--report", bench_report, "Also write a JSON report here");
  auto* bench_analyze = bench_cmd->add_subcommand("analyze", "Summary table and log-log regression of records");
  std::string analyze_file;
  bool analyze_json = false;
  bench_analyze->add_option("--in,records", analyze_file, "Records CSV")->required()->check(CLI::ExistingFile);
  bench_analyze->add_flag("--json", analyze_json, "Print JSON instead of text");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP service");
  std::string serve_config;
  serve_cmd->add_option("--config", serve_config, "Service config JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (etl->parsed()) {
    auto schema = resolve_schema(etl_schema);
    auto triples = prov::transform(prov::read_csv_file(etl_csv), schema);
    std::string ttl = turtle::serialize_turtle(triples, schema.prefix_map());
    if (etl_out.empty()) {
      std::cout << ttl;
    } else {
      rdf::write_file(etl_out, ttl);
      std::cerr << triples.size() << " triples written to " << etl_out << "\n";
    }
    if (!etl_graph.empty()) {
      auto store = open_store(etl_store);
      store.ensure_graph(etl_graph);
      std::size_t added = store.insert_all(etl_graph, triples);
      rdf::save_snapshot(store, etl_store);
      std::cerr << added << " new triples in " << etl_graph << "\n";
    }
    return 0;
  }
  if (load->parsed()) {
    auto store = open_store(load_store);
    auto added = rdf::load_turtle_file(store, load_file, load_graph);
    rdf::save_snapshot(store, load_store);
    std::cerr << added << " new triples in " << load_graph << " (" << store.size(load_graph) << " total)\n";
    return 0;
  }
  if (query->parsed()) {
    auto store = open_store(query_store);
    for (const auto& f : query_ttl) rdf::load_turtle_file(store, f, vocab::kDefaultGraph);
    std::string text = rdf::read_file(query_file);
    auto q = query::parse_query(text, store.prefixes());
    auto plan = query::plan_query(q, store, {.optimize = !query_textual});
    auto result = query::execute(plan, store);
    if (query_format == "csv") {
      std::cout << query::to_csv(result.table);
    } else if (query_format == "json") {
      std::cout << query::to_json(result.table).dump(2) << "\n";
    } else {
      print_table(result.table, store.prefixes());
      std::cerr << result.table.rows.size() << " rows in " << result.stats.elapsed_ms << " ms\n";
    }
    if (query_explain) std::cerr << query::explain(plan, &result.stats);
    return 0;
  }
  if (bridge_cmd->parsed()) {
    auto registry = bridge::MapRegistry::with_defaults();
    if (!bridge_catalog.empty()) {
      auto extra = bridge::MapRegistry::from_catalog(nlohmann::json::parse(rdf::read_file(bridge_catalog)));
      for (auto& m : extra.list()) {
        if (!registry.contains(m.name)) registry.register_map(std::move(m));
      }
    }
    if (maps_cmd->parsed()) {
      std::cout << registry.catalog().dump(2) << "\n";
      return 0;
    }
    if (map_age_cmd->parsed()) {
      auto m = registry.get(one_map);
      std::cout << bridge::map_age(m, one_age) << " " << m.output_units << "\n";
      return 0;
    }
    auto m = registry.get(eq_map);
    if (eq_show_query) std::cerr << bridge::equivalence_query(m, eq_tolerance);
    auto store = open_store(eq_store);
    auto pairs = bridge::equivalent_subjects(store, m, eq_tolerance);
    std::cout << "from_subject,from_age,mapped_age,to_subject,to_age\r\n";
    for (const auto& p : pairs) {
      std::cout << query::csv_field(p.from_subject) << "," << p.from_age << "," << p.mapped_age << ","
                << query::csv_field(p.to_subject) << "," << p.to_age << "\r\n";
    }
    return 0;
  }
  if (bench_run->parsed()) {
    auto spec = bench::load_bench_spec(rdf::read_file(bench_spec));
    auto outcome = bench::run_bench(spec, [](const std::string& m) { std::cerr << m << "\n"; });
    rdf::write_file(bench_out, bench::records_to_csv(outcome.records));
    for (const auto& e : outcome.errors) std::cerr << "error: " << e << "\n";
    auto summary = bench::summarize(outcome.records);
    std::cout << bench::format_summary(summary);
    nlohmann::json report = {{"summary", bench::to_json(summary)}};
    try {
      auto reg = bench::analyze_loglog(outcome.records);
      std::cout << "\n" << bench::format_report(reg);
      report["regression"] = bench::to_json(reg);
    } catch (const std::exception& e) {
      std::cerr << "regression skipped: " << e.what() << "\n";
    }
    if (!bench_report.empty()) rdf::write_file(bench_report, report.dump(2) + "\n");
    return outcome.errors.empty() ? 0 : 1;
  }
  if (bench_analyze->parsed()) {
    auto records = bench::records_from_csv(rdf::read_file(analyze_file));
    auto summary = bench::summarize(records);
    auto reg = bench::analyze_loglog(records);
    if (analyze_json) {
      std::cout << nlohmann::json{{"summary", bench::to_json(summary)}, {"regression", bench::to_json(reg)}}.dump(2)
                << "\n";
    } else {
      std::cout << bench::format_summary(summary) << "\n" << bench::format_report(reg);
    }
    return 0;
  }
  if (serve_cmd->parsed()) {
    auto config = service::load_config(serve_config);
    service::Service svc(config);
    svc.load_configured_graphs();
    auto total = svc.store().read([](const rdf::GraphStore& s) { return s.total_size(); });
    std::cerr << "loaded " << total << " triples; listening on " << config.host << ":" << config.port << "\n";
    if (!service::serve(svc, config.host, config.port)) {
      std::cerr << "could not bind " << config.host << ":" << config.port << "\n";
      return 1;
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const query::QueryError& e) {
    std::cerr << "query error at " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
  } catch (const turtle::ParseError& e) {
    std::cerr << "turtle error at " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
  } catch (const prov::SchemaError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
