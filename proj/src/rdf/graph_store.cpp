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

#include "semdd/rdf/graph_store.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace semdd::rdf {

// ---------------------------------------------------------------------------
// Dictionary

TermId Dictionary::intern(const Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);

  TermId canon = id;
  if (auto num = numeric_value(t); num && !std::isnan(num->value)) {
    auto [it, inserted] = numeric_classes_.emplace(num->value, id);
    if (!inserted) {
      canon = it->second;
      auto& members = members_[canon];
      if (members.empty()) members.push_back(canon);
      members.push_back(id);
    }
  }
  canonical_.push_back(canon);
  return id;
}

std::optional<TermId> Dictionary::find(const Term& t) const {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  return std::nullopt;
}

std::span<const TermId> Dictionary::equivalents(TermId id) const {
  TermId canon = canonical_[id];
  if (auto it = members_.find(canon); it != members_.end()) return it->second;
  return {&canonical_[canon], 1};
}

std::optional<TermId> Dictionary::find_canonical(const Term& t) const {
  if (auto id = find(t)) return canonical_[*id];
  if (auto num = numeric_value(t); num && !std::isnan(num->value)) {
    if (auto it = numeric_classes_.find(num->value); it != numeric_classes_.end()) {
      return it->second;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PrefixMap

PrefixMap PrefixMap::standard() {
  PrefixMap m;
  for (auto& [prefix, ns] : vocab::standard_prefixes()) m.set(prefix, ns);
  return m;
}

void PrefixMap::set(std::string prefix, std::string ns) { entries_[std::move(prefix)] = std::move(ns); }

std::optional<std::string_view> PrefixMap::find(std::string_view prefix) const {
  if (auto it = entries_.find(prefix); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::string PrefixMap::expand(std::string_view qname) const {
  auto colon = qname.find(':');
  if (colon == std::string_view::npos) throw UnknownPrefix(std::string(qname));
  auto prefix = qname.substr(0, colon);
  auto ns = find(prefix);
  if (!ns) throw UnknownPrefix(std::string(prefix));
  std::string out(*ns);
  out.append(qname.substr(colon + 1));
  return out;
}

std::optional<std::pair<std::string, std::string>> PrefixMap::split(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    const auto& ns = entry.second;
    if (ns.size() <= iri.size() && iri.compare(0, ns.size(), ns) == 0 &&
        (best == nullptr || ns.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best == nullptr) return std::nullopt;
  return std::pair{best->first, std::string(iri.substr(best->second.size()))};
}

// ---------------------------------------------------------------------------
// GraphIndex

IndexChoice choose_index(bool s, bool p, bool o) {
  if (s && !p && o) return IndexChoice::Osp;
  if (s) return IndexChoice::Spo;
  if (p) return IndexChoice::Pos;
  if (o) return IndexChoice::Osp;
  return IndexChoice::Spo;
}

bool GraphIndex::insert(const IdTriple& t) {
  if (!spo_.insert({t.s, t.p, t.o}).second) return false;
  pos_.insert({t.p, t.o, t.s});
  osp_.insert({t.o, t.s, t.p});
  return true;
}

bool GraphIndex::contains(const IdTriple& t) const { return spo_.count({t.s, t.p, t.o}) > 0; }

IdTriple GraphIndex::decode(Order order, const Key& k) {
  switch (order) {
    case Order::Spo: return {k[0], k[1], k[2]};
    case Order::Pos: return {k[2], k[0], k[1]};
    case Order::Osp: return {k[1], k[2], k[0]};
  }
  return {};
}

GraphIndex::Range GraphIndex::select(IdPattern s, IdPattern p, IdPattern o) const {
  Order order = Order::Spo;
  std::array<IdPattern, 3> key{};
  switch (choose_index(s.has_value(), p.has_value(), o.has_value())) {
    case IndexChoice::Spo: order = Order::Spo; key = {s, p, o}; break;
    case IndexChoice::Pos: order = Order::Pos; key = {p, o, s}; break;
    case IndexChoice::Osp: order = Order::Osp; key = {o, s, p}; break;
  }
  const Index& index = order == Order::Spo ? spo_ : order == Order::Pos ? pos_ : osp_;

  Key lo{0, 0, 0};
  Key hi{kNoTerm, kNoTerm, kNoTerm};
  for (std::size_t i = 0; i < 3 && key[i]; ++i) {
    lo[i] = *key[i];
    hi[i] = *key[i];
  }
  return {order, index.lower_bound(lo), index.upper_bound(hi)};
}

std::size_t GraphIndex::count(IdPattern s, IdPattern p, IdPattern o) const {
  if (!s && !p && !o) return size();
  Range r = select(s, p, o);
  return static_cast<std::size_t>(std::distance(r.begin, r.end));
}

std::vector<IdTriple> GraphIndex::spo_order() const {
  std::vector<IdTriple> out;
  out.reserve(spo_.size());
  for (const auto& k : spo_) out.push_back(decode(Order::Spo, k));
  return out;
}

std::vector<IdTriple> GraphIndex::pos_order() const {
  std::vector<IdTriple> out;
  out.reserve(pos_.size());
  for (const auto& k : pos_) out.push_back(decode(Order::Pos, k));
  return out;
}

std::vector<IdTriple> GraphIndex::osp_order() const {
  std::vector<IdTriple> out;
  out.reserve(osp_.size());
  for (const auto& k : osp_) out.push_back(decode(Order::Osp, k));
  return out;
}

// ---------------------------------------------------------------------------
// GraphStore

GraphStore::GraphStore() : prefixes_(PrefixMap::standard()) {}

bool GraphStore::insert(std::string_view graph, const Triple& triple) {
  if (auto err = validation_error(triple)) throw InvalidTerm(*err);
  if (graph.empty()) throw InvalidTerm("empty graph IRI");
  auto it = graphs_.find(graph);
  if (it == graphs_.end()) it = graphs_.emplace(std::string(graph), GraphIndex{}).first;
  IdTriple ids{dict_.intern(triple.subject), dict_.intern(triple.predicate),
               dict_.intern(triple.object)};
  return it->second.insert(ids);
}

std::size_t GraphStore::insert_all(std::string_view graph, std::span<const Triple> triples) {
  std::size_t added = 0;
  for (const auto& t : triples) added += insert(graph, t) ? 1 : 0;
  return added;
}

std::optional<IdPattern> GraphStore::to_id_pattern(const TermPattern& t) const {
  if (!t) return IdPattern{};
  auto id = dict_.find(*t);
  if (!id) return std::nullopt;
  return IdPattern{*id};
}

const GraphIndex* GraphStore::graph_index(std::string_view graph) const {
  auto it = graphs_.find(graph);
  return it == graphs_.end() ? nullptr : &it->second;
}

std::vector<Triple> GraphStore::match(std::optional<std::string_view> graph, const TermPattern& s,
                                      const TermPattern& p, const TermPattern& o) const {
  std::vector<Triple> out;
  const GraphIndex* g = nullptr;
  if (graph) {
    g = graph_index(*graph);
    if (g == nullptr) return out;
  }
  auto si = to_id_pattern(s);
  auto pi = to_id_pattern(p);
  auto oi = to_id_pattern(o);
  if (!si || !pi || !oi) return out;
  for_each_match(g, *si, *pi, *oi, [&](const IdTriple& t) {
    out.push_back({dict_.term(t.s), dict_.term(t.p), dict_.term(t.o)});
  });
  return out;
}

std::size_t GraphStore::count_ids(const GraphIndex* graph, IdPattern s, IdPattern p,
                                  IdPattern o) const {
  if (graph != nullptr) return graph->count(s, p, o);
  if (graphs_.size() == 1) return graphs_.begin()->second.count(s, p, o);
  std::size_t n = 0;
  for_each_match(nullptr, s, p, o, [&](const IdTriple&) { ++n; });
  return n;
}

std::size_t GraphStore::count(std::optional<std::string_view> graph, const TermPattern& s,
                              const TermPattern& p, const TermPattern& o) const {
  const GraphIndex* g = nullptr;
  if (graph) {
    g = graph_index(*graph);
    if (g == nullptr) return 0;
  }
  auto si = to_id_pattern(s);
  auto pi = to_id_pattern(p);
  auto oi = to_id_pattern(o);
  if (!si || !pi || !oi) return 0;
  return count_ids(g, *si, *pi, *oi);
}

std::vector<std::string> GraphStore::graph_names() const {
  std::vector<std::string> out;
  for (const auto& [name, g] : graphs_) out.push_back(name);
  return out;
}

bool GraphStore::has_graph(std::string_view graph) const { return graphs_.contains(graph); }

std::size_t GraphStore::size(std::string_view graph) const {
  const GraphIndex* g = graph_index(graph);
  return g == nullptr ? 0 : g->size();
}

std::size_t GraphStore::total_size() const {
  std::size_t n = 0;
  for (const auto& [name, g] : graphs_) n += g.size();
  return n;
}

void GraphStore::drop_graph(std::string_view graph) {
  if (auto it = graphs_.find(graph); it != graphs_.end()) graphs_.erase(it);
}

void GraphStore::ensure_graph(std::string_view graph) {
  if (!graphs_.contains(graph)) graphs_.emplace(std::string(graph), GraphIndex{});
}

std::vector<Triple> GraphStore::triples(std::string_view graph) const {
  std::vector<Triple> out = match(graph, {}, {}, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::string GraphStore::next_blank_scope() { return "d" + std::to_string(++blank_scopes_) + "_"; }

}  // namespace semdd::rdf
