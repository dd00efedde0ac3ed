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

#include "semdd/service/service.hpp"

#include <algorithm>
#include <set>

#include "semdd/prov/builtin_schemas.hpp"
#include "semdd/prov/csv.hpp"
#include "semdd/prov/schema.hpp"
#include "semdd/prov/transform.hpp"
#include "semdd/query/executor.hpp"
#include "semdd/query/parser.hpp"
#include "semdd/rdf/snapshot.hpp"
#include "semdd/rdf/vocab.hpp"

namespace semdd::service {

namespace fs = std::filesystem;
using nlohmann::json;
using rdf::Term;

ServiceConfig config_from_json(const json& j, const fs::path& base) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ServiceConfig c;
  c.host = j.value("host", c.host);
  c.port = j.value("port", c.port);
  if (c.port < 0 || c.port > 65535) throw std::invalid_argument("port out of range");
  fs::path dir = j.value("data_dir", std::string("."));
  c.data_dir = dir.is_relative() && !base.empty() ? base / dir : dir;
  c.result_cap = j.value("result_cap", c.result_cap);
  if (c.result_cap == 0) throw std::invalid_argument("result_cap must be positive");
  for (const auto& g : j.value("graphs", json::array())) {
    GraphSource s;
    s.graph = g.at("graph").get<std::string>();
    s.turtle = g.value("turtle", "");
    s.csv = g.value("csv", "");
    s.schema = g.value("schema", "");
    if (s.turtle.empty() == s.csv.empty()) {
      throw std::invalid_argument("graph " + s.graph + " needs exactly one of turtle or csv");
    }
    if (!s.csv.empty() && s.schema.empty()) throw std::invalid_argument("graph " + s.graph + " has csv but no schema");
    c.graphs.push_back(std::move(s));
  }
  return c;
}

ServiceConfig load_config(const fs::path& file) {
  json j;
  try {
    j = json::parse(rdf::read_file(file));
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed config " + file.string() + ": " + e.what());
  }
  return config_from_json(j, file.parent_path());
}

json ServiceError::to_json() const {
  json j = {{"error", code_}, {"message", what()}};
  if (line) j["line"] = *line;
  if (column) j["column"] = *column;
  return j;
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)), maps_(bridge::MapRegistry::with_defaults()), terms_(default_terms()) {}

void Service::load_configured_graphs() {
  if (fs::exists(config_.data_dir / "manifest.json")) {
    auto snapshot = rdf::load_snapshot(config_.data_dir);
    store_.write([&](rdf::GraphStore& s) { s = std::move(snapshot); });
  }
  for (const auto& g : config_.graphs) {
    if (!g.turtle.empty()) {
      std::string text = rdf::read_file(config_.data_dir / g.turtle);
      load_turtle(text, g.graph);
      continue;
    }
    auto table = prov::read_csv_file((config_.data_dir / g.csv).string());
    auto schema = prov::builtin_schema(g.schema);
    if (!schema) schema = prov::load_schema(rdf::read_file(config_.data_dir / g.schema));
    auto triples = prov::transform(table, *schema);
    store_.write([&](rdf::GraphStore& s) {
      for (const auto& [prefix, ns] : schema->namespaces) {
        if (!s.prefixes().contains(prefix)) s.prefixes().set(prefix, ns);
      }
    });
    load_triples(triples, g.graph);
  }
}

std::size_t Service::load_turtle(std::string_view text, std::string_view graph) {
  return store_.write([&](rdf::GraphStore& s) { return rdf::load_turtle(s, text, graph); });
}

std::size_t Service::load_triples(const std::vector<rdf::Triple>& triples, std::string_view graph) {
  return store_.write([&](rdf::GraphStore& s) {
    s.ensure_graph(graph);
    return s.insert_all(graph, triples);
  });
}

namespace {

bool numeric_less(const std::string& a, const std::string& b) {
  auto na = rdf::numeric_value(Term::literal(a, vocab::kXsdDecimal));
  auto nb = rdf::numeric_value(Term::literal(b, vocab::kXsdDecimal));
  if (na && nb && na->value != nb->value) return na->value < nb->value;
  return a < b;
}

}  // namespace

std::vector<SubjectRow> Service::list_subjects() const {
  return store_.read([&](const rdf::GraphStore& s) {
    std::vector<SubjectRow> rows;
    const Term type = Term::iri(vocab::kRdfType);
    const Term agent_class = Term::iri(vocab::prov("Agent"));
    const Term associated = Term::iri(vocab::prov("wasAssociatedWith"));
    const Term generated = Term::iri(vocab::prov("wasGeneratedBy"));
    const Term species_p = Term::iri(vocab::ncit("species"));
    const Term age_p = Term::iri(vocab::ncit("age"));

    struct Marker {
      std::string name;
      Term predicate;
      std::optional<Term> object;
    };
    std::vector<Marker> markers;
    for (const auto& dt : default_data_types()) {
      Marker m{dt.name, Term::iri(s.expand(dt.marker_predicate)), std::nullopt};
      if (!dt.marker_object.empty()) m.object = Term::iri(s.expand(dt.marker_object));
      markers.push_back(std::move(m));
    }

    for (const auto& t : s.match(std::nullopt, std::nullopt, type, agent_class)) {
      SubjectRow row;
      row.agent = t.subject.value;
      auto species = s.match(std::nullopt, t.subject, species_p, std::nullopt);
      if (!species.empty()) row.species = species.front().object.value;

      std::vector<bridge::SpeciesProfile> candidates;
      if (auto p = bridge::find_profile(row.species)) candidates.push_back(*p);
      for (const auto& p : bridge::default_species_profiles()) candidates.push_back(p);
      for (const auto& p : candidates) {
        auto ids = s.match(std::nullopt, t.subject, Term::iri(s.expand(p.id_predicate)), std::nullopt);
        if (!ids.empty()) {
          row.subject_id = ids.front().object.value;
          break;
        }
      }
      if (row.subject_id.empty()) row.subject_id = row.agent;

      std::set<std::string> present;
      std::set<std::string> ages;
      for (const auto& act : s.match(std::nullopt, std::nullopt, associated, t.subject)) {
        for (const auto& ent : s.match(std::nullopt, std::nullopt, generated, act.subject)) {
          for (const auto& m : markers) {
            if (!present.count(m.name) && s.count(std::nullopt, ent.subject, m.predicate, m.object) > 0) {
              present.insert(m.name);
            }
          }
          for (const auto& a : s.match(std::nullopt, ent.subject, age_p, std::nullopt)) ages.insert(a.object.value);
        }
      }
      for (const auto& m : markers) {
        if (present.count(m.name)) row.data_types.push_back(m.name);
      }
      row.ages.assign(ages.begin(), ages.end());
      std::sort(row.ages.begin(), row.ages.end(), numeric_less);
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const SubjectRow& a, const SubjectRow& b) {
      return std::tie(a.species, a.subject_id, a.agent) < std::tie(b.species, b.subject_id, b.agent);
    });
    return rows;
  });
}

QueryResponse Service::run_query(const std::string& text) const {
  QueryResponse resp;
  resp.sparql = text;
  try {
    auto result = store_.read([&](const rdf::GraphStore& s) {
      auto q = query::parse_query(text, s.prefixes());
      auto plan = query::plan_query(q, s);
      return query::execute(plan, s);
    });
    resp.table = std::move(result.table);
    resp.elapsed_ms = result.stats.elapsed_ms;
  } catch (const query::QueryError& e) {
    std::string code = "syntax_error";
    if (e.kind() == query::QueryError::Kind::UnknownPrefix) code = "unknown_prefix";
    if (e.kind() == query::QueryError::Kind::Semantic) code = "semantic_error";
    ServiceError err(400, code, e.what());
    err.line = e.line();
    err.column = e.column();
    throw err;
  }
  if (resp.table.rows.size() > config_.result_cap) {
    throw ServiceError(422, "result_too_large",
                       "query returned " + std::to_string(resp.table.rows.size()) + " rows, above the cap of " +
                           std::to_string(config_.result_cap) + "; add a LIMIT clause");
  }
  return resp;
}

QueryResponse Service::run_template(const std::string& id, const json& params) const {
  const QueryTemplate* tmpl = find_template(id);
  if (!tmpl) throw ServiceError(404, "unknown_template", "no template " + id);
  std::string text;
  try {
    text = instantiate(*tmpl, params);
  } catch (const TemplateError& e) {
    throw ServiceError(400, "bad_parameters", e.what());
  }
  auto resp = run_query(text);
  for (const auto& [var, qname] : tmpl->annotations) {
    if (const auto* def = terms_.find(qname)) resp.annotations.emplace(var, *def);
  }
  return resp;
}

std::string Service::export_csv(const std::string& text) const { return query::to_csv(run_query(text).table); }

std::string Service::export_csv(const Selection& selection) const {
  if (selection.subjects.empty() || selection.data_types.empty()) {
    throw ServiceError(400, "empty_selection", "select at least one subject and one data type");
  }
  std::vector<const DataType*> types;
  for (const auto& name : selection.data_types) {
    const DataType* dt = find_data_type(name);
    if (!dt) throw ServiceError(400, "unknown_data_type", "unknown data type " + name);
    types.push_back(dt);
  }
  std::set<std::string> known;
  for (const auto& row : list_subjects()) known.insert(row.subject_id);
  for (const auto& id : selection.subjects) {
    if (!known.count(id)) throw ServiceError(400, "unknown_subject", "unknown subject " + id);
  }

  query::ResultTable out;
  auto column_of = [&](const std::string& var) {
    auto it = std::find(out.variables.begin(), out.variables.end(), var);
    if (it != out.variables.end()) return static_cast<std::size_t>(it - out.variables.begin());
    out.variables.push_back(var);
    for (auto& r : out.rows) r.emplace_back();
    return out.variables.size() - 1;
  };
  for (const DataType* dt : types) {
    for (const auto& tmpl_id : dt->templates) {
      for (const auto& subject : selection.subjects) {
        auto resp = run_template(tmpl_id, {{"subject_id", subject}});
        std::vector<std::size_t> cols;
        for (const auto& v : resp.table.variables) cols.push_back(column_of(v));
        for (auto& r : resp.table.rows) {
          std::vector<std::optional<Term>> row(out.variables.size());
          for (std::size_t i = 0; i < r.size(); ++i) row[cols[i]] = std::move(r[i]);
          out.rows.push_back(std::move(row));
        }
      }
    }
  }
  return query::to_csv(out);
}

TermDefinition Service::term_definition(std::string_view qname) const {
  if (const auto* def = terms_.find(qname)) return *def;
  throw ServiceError(404, "unknown_term", "no definition for " + std::string(qname));
}

json Service::map_catalog() const { return maps_.catalog(); }

json Service::cross_species(const std::string& name, double tolerance) const {
  bridge::AgeMap map;
  try {
    map = maps_.get(name);
  } catch (const bridge::MapError& e) {
    throw ServiceError(404, "unknown_map", e.what());
  }
  try {
    std::string text = bridge::equivalence_query(map, tolerance);
    auto pairs = store_.read([&](const rdf::GraphStore& s) { return bridge::equivalent_subjects(s, map, tolerance); });
    json out = {{"map", bridge::to_json(map)}, {"tolerance", tolerance}, {"sparql", text}, {"pairs", json::array()}};
    for (const auto& p : pairs) {
      out["pairs"].push_back({{"from_subject", p.from_subject},
                              {"from_age", p.from_age},
                              {"from_units", p.from_units},
                              {"mapped_age", p.mapped_age},
                              {"mapped_units", p.mapped_units},
                              {"to_subject", p.to_subject},
                              {"to_age", p.to_age},
                              {"to_units", p.to_units}});
    }
    return out;
  } catch (const bridge::EquivalenceError& e) {
    throw ServiceError(400, "bad_request", e.what());
  }
}

json to_json(const SubjectRow& row) {
  return {{"subject_id", row.subject_id},
          {"species", row.species},
          {"agent", row.agent},
          {"data_types", row.data_types},
          {"ages", row.ages}};
}

json to_json(const std::vector<SubjectRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return {{"row_count", rows.size()}, {"subjects", arr}};
}

json to_json(const QueryResponse& r) {
  json j = query::to_json(r.table);
  j["sparql"] = r.sparql;
  j["elapsed_ms"] = r.elapsed_ms;
  j["row_count"] = r.table.rows.size();
  j["annotations"] = json::object();
  for (const auto& [var, def] : r.annotations) j["annotations"][var] = to_json(def);
  return j;
}

Selection selection_from_json(const json& j) {
  Selection s;
  s.subjects = j.value("subjects", std::vector<std::string>{});
  s.data_types = j.value("data_types", std::vector<std::string>{});
  return s;
}

}  // namespace semdd::service
