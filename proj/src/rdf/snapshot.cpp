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

#include "semdd/rdf/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "semdd/turtle/turtle.hpp"

namespace semdd::rdf {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kManifest = "manifest.json";
constexpr std::string_view kFormat = "semdd-snapshot/1";

void insert_document(GraphStore& store, const turtle::TurtleDocument& doc, std::string_view graph,
                     bool rewrite_blanks, std::size_t& added) {
  for (const auto& [prefix, ns] : doc.prefixes) {
    if (!store.prefixes().contains(prefix)) store.prefixes().set(prefix, ns);
  }
  store.ensure_graph(graph);
  if (!rewrite_blanks) {
    added += store.insert_all(graph, doc.triples);
    return;
  }
  std::string scope = store.next_blank_scope();
  std::unordered_map<std::string, std::string> labels;
  auto rewrite = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto [it, inserted] = labels.emplace(t.value, std::string());
    if (inserted) it->second = scope + "b" + std::to_string(labels.size());
    return Term::blank(it->second);
  };
  for (const auto& t : doc.triples) {
    added += store.insert(graph, Triple{rewrite(t.subject), t.predicate, rewrite(t.object)}) ? 1 : 0;
  }
}

}  // namespace

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw SnapshotError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& file, std::string_view contents) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("cannot write " + file.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw SnapshotError("short write to " + file.string());
}

std::size_t load_turtle(GraphStore& store, std::string_view text, std::string_view graph) {
  auto doc = turtle::parse_turtle(text);
  std::size_t added = 0;
  insert_document(store, doc, graph, true, added);
  return added;
}

std::size_t load_turtle_file(GraphStore& store, const fs::path& file, std::string_view graph) {
  return load_turtle(store, read_file(file), graph);
}

void save_snapshot(const GraphStore& store, const fs::path& dir) {
  fs::create_directories(dir);
  json manifest;
  manifest["format"] = kFormat;
  manifest["prefixes"] = json::object();
  for (const auto& [prefix, ns] : store.prefixes().entries()) manifest["prefixes"][prefix] = ns;
  manifest["blank_scope_counter"] = store.blank_scope_counter();
  manifest["graphs"] = json::array();

  // Remove stale graph files from an earlier snapshot.
  if (fs::exists(dir / kManifest)) {
    auto old = json::parse(read_file(dir / kManifest), nullptr, false);
    if (old.is_object() && old.contains("graphs")) {
      for (const auto& g : old["graphs"]) {
        if (g.contains("file")) fs::remove(dir / g["file"].get<std::string>());
      }
    }
  }

  std::size_t index = 0;
  for (const auto& name : store.graph_names()) {
    char file[32];
    std::snprintf(file, sizeof(file), "graph-%04zu.ttl", index++);
    auto triples = store.triples(name);
    write_file(dir / file, turtle::serialize_turtle(triples, store.prefixes()));
    manifest["graphs"].push_back({{"iri", name}, {"file", file}, {"triples", triples.size()}});
  }
  write_file(dir / kManifest, manifest.dump(2) + "\n");
}

GraphStore load_snapshot(const fs::path& dir) {
  if (!fs::exists(dir / kManifest)) throw SnapshotError("no manifest in " + dir.string());
  json manifest;
  try {
    manifest = json::parse(read_file(dir / kManifest));
  } catch (const json::exception& e) {
    throw SnapshotError("malformed manifest: " + std::string(e.what()));
  }
  if (manifest.value("format", "") != kFormat) throw SnapshotError("unsupported snapshot format");

  GraphStore store;
  const json prefixes = manifest.value("prefixes", json::object());
  for (const auto& [prefix, ns] : prefixes.items()) {
    store.prefixes().set(prefix, ns.get<std::string>());
  }
  store.set_blank_scope_counter(manifest.value("blank_scope_counter", std::uint64_t{0}));
  const json graphs = manifest.value("graphs", json::array());
  for (const auto& g : graphs) {
    auto iri = g.at("iri").get<std::string>();
    auto file = g.at("file").get<std::string>();
    auto doc = turtle::parse_turtle(read_file(dir / file));
    std::size_t added = 0;
    insert_document(store, doc, iri, false, added);
    if (g.contains("triples") && g["triples"].get<std::size_t>() != store.size(iri)) {
      throw SnapshotError("graph " + iri + " has " + std::to_string(store.size(iri)) +
                          " triples, manifest says " + std::to_string(g["triples"].get<std::size_t>()));
    }
  }
  return store;
}

}  // namespace semdd::rdf
