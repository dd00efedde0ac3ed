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

// In-memory quad store. Terms are dictionary-encoded; every named graph keeps
// three sorted orderings (SPO, POS, OSP) so that any pattern with bound
// positions is answered by a prefix range scan.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semdd/rdf/term.hpp"

namespace semdd::rdf {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = std::numeric_limits<TermId>::max();

struct IdTriple {
  TermId s = kNoTerm;
  TermId p = kNoTerm;
  TermId o = kNoTerm;
  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

// A pattern position: nullopt is a wildcard.
using TermPattern = std::optional<Term>;
using IdPattern = std::optional<TermId>;

// Bidirectional Term <-> TermId mapping. Each id also belongs to a value
// class: numeric literals with equal values share a class, every other term
// is alone in its class.
class Dictionary {
 public:
  TermId intern(const Term& t);
  std::optional<TermId> find(const Term& t) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t size() const { return terms_.size(); }

  // Representative id of `id`'s value class.
  TermId canonical(TermId id) const { return canonical_[id]; }
  // All ids in the value class of `id` (including `id`).
  std::span<const TermId> equivalents(TermId id) const;
  // Representative of the value class `t` would belong to, if that class has
  // any member in the dictionary.
  std::optional<TermId> find_canonical(const Term& t) const;

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::vector<TermId> canonical_;
  std::map<long double, TermId> numeric_classes_;
  std::unordered_map<TermId, std::vector<TermId>> members_;
};

class UnknownPrefix : public std::invalid_argument {
 public:
  explicit UnknownPrefix(std::string prefix)
      : std::invalid_argument("unregistered prefix: " + prefix), prefix_(std::move(prefix)) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

class PrefixMap {
 public:
  PrefixMap() = default;
  static PrefixMap standard();

  // Registers or rebinds `prefix`.
  void set(std::string prefix, std::string ns);
  std::optional<std::string_view> find(std::string_view prefix) const;
  bool contains(std::string_view prefix) const { return find(prefix).has_value(); }

  // "ncit:age" -> namespace("ncit") + "age". Throws UnknownPrefix.
  std::string expand(std::string_view qname) const;
  // Longest-namespace match; nullopt if no namespace is a prefix of `iri`.
  std::optional<std::pair<std::string, std::string>> split(std::string_view iri) const;

  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// One named graph: the same triple set held in three orderings.
class GraphIndex {
 public:
  bool insert(const IdTriple& t);
  bool contains(const IdTriple& t) const;
  std::size_t size() const { return spo_.size(); }

  template <typename Visitor>
  void for_each(IdPattern s, IdPattern p, IdPattern o, Visitor&& visit) const;
  std::size_t count(IdPattern s, IdPattern p, IdPattern o) const;

  // Triples in each ordering, returned in SPO form. Exposed for consistency
  // checks.
  std::vector<IdTriple> spo_order() const;
  std::vector<IdTriple> pos_order() const;
  std::vector<IdTriple> osp_order() const;

 private:
  using Key = std::array<TermId, 3>;
  using Index = std::set<Key>;
  enum class Order { Spo, Pos, Osp };

  struct Range {
    Order order;
    Index::const_iterator begin;
    Index::const_iterator end;
  };
  Range select(IdPattern s, IdPattern p, IdPattern o) const;
  static IdTriple decode(Order order, const Key& k);

  Index spo_;
  Index pos_;
  Index osp_;
};

// Index-selection result, reported for diagnostics and tests.
enum class IndexChoice { Spo, Pos, Osp };
IndexChoice choose_index(bool s_bound, bool p_bound, bool o_bound);

// Not internally synchronized; wrap in SharedStore for concurrent use.
class GraphStore {
 public:
  GraphStore();

  // Validates and inserts; returns true iff the triple was new to `graph`.
  // Throws InvalidTerm.
  bool insert(std::string_view graph, const Triple& triple);
  std::size_t insert_all(std::string_view graph, std::span<const Triple> triples);

  // Triples matching the bound positions. Without a graph the result is the
  // set union over all graphs. Unknown graphs yield nothing.
  std::vector<Triple> match(std::optional<std::string_view> graph, const TermPattern& s,
                            const TermPattern& p, const TermPattern& o) const;
  std::size_t count(std::optional<std::string_view> graph, const TermPattern& s,
                    const TermPattern& p, const TermPattern& o) const;

  std::string expand(std::string_view qname) const { return prefixes_.expand(qname); }
  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  std::vector<std::string> graph_names() const;
  bool has_graph(std::string_view graph) const;
  std::size_t size(std::string_view graph) const;
  std::size_t total_size() const;
  void drop_graph(std::string_view graph);
  void ensure_graph(std::string_view graph);

  // Triples of one graph sorted by (subject, predicate, object) term order.
  std::vector<Triple> triples(std::string_view graph) const;

  // Fresh scope prefix for blank node labels of one loaded document.
  std::string next_blank_scope();
  std::uint64_t blank_scope_counter() const { return blank_scopes_; }
  void set_blank_scope_counter(std::uint64_t n) { blank_scopes_ = n; }

  // ---- id-level access used by the query engine ----
  const Dictionary& dictionary() const { return dict_; }
  const GraphIndex* graph_index(std::string_view graph) const;
  // A null graph means the union of all graphs.
  template <typename Visitor>
  void for_each_match(const GraphIndex* graph, IdPattern s, IdPattern p, IdPattern o,
                      Visitor&& visit) const;
  std::size_t count_ids(const GraphIndex* graph, IdPattern s, IdPattern p, IdPattern o) const;

 private:
  std::optional<IdPattern> to_id_pattern(const TermPattern& t) const;

  Dictionary dict_;
  PrefixMap prefixes_;
  std::map<std::string, GraphIndex, std::less<>> graphs_;
  std::uint64_t blank_scopes_ = 0;
};

// Readers-writer wrapper: any number of concurrent readers or one writer.
class SharedStore {
 public:
  SharedStore() = default;
  explicit SharedStore(GraphStore store) : store_(std::move(store)) {}

  template <typename Fn>
  decltype(auto) read(Fn&& fn) const {
    std::shared_lock lock(mutex_);
    return std::forward<Fn>(fn)(std::as_const(store_));
  }

  template <typename Fn>
  decltype(auto) write(Fn&& fn) {
    std::unique_lock lock(mutex_);
    return std::forward<Fn>(fn)(store_);
  }

 private:
  GraphStore store_;
  mutable std::shared_mutex mutex_;
};

// ---------------------------------------------------------------------------

template <typename Visitor>
void GraphIndex::for_each(IdPattern s, IdPattern p, IdPattern o, Visitor&& visit) const {
  Range r = select(s, p, o);
  for (auto it = r.begin; it != r.end; ++it) {
    IdTriple t = decode(r.order, *it);
    // The range covers the longest bound prefix; a bound position outside
    // that prefix (only possible for s+o with p wild, handled by OSP) is
    // re-checked here.
    if ((s && t.s != *s) || (p && t.p != *p) || (o && t.o != *o)) continue;
    visit(t);
  }
}

template <typename Visitor>
void GraphStore::for_each_match(const GraphIndex* graph, IdPattern s, IdPattern p, IdPattern o,
                                Visitor&& visit) const {
  if (graph != nullptr) {
    graph->for_each(s, p, o, visit);
    return;
  }
  if (graphs_.size() == 1) {
    graphs_.begin()->second.for_each(s, p, o, visit);
    return;
  }
  std::vector<IdTriple> all;
  for (const auto& [name, g] : graphs_) {
    g.for_each(s, p, o, [&](const IdTriple& t) { all.push_back(t); });
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& t : all) visit(t);
}

}  // namespace semdd::rdf
