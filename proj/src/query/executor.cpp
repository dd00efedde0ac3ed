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

#include "semdd/query/executor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "semdd/query/expression.hpp"
#include "semdd/query/parser.hpp"
#include "semdd/turtle/turtle.hpp"

namespace semdd::query {

using rdf::kNoTerm;
using rdf::Term;
using rdf::TermId;

std::size_t ExecutionStats::peak_rows() const {
  return step_rows.empty() ? 0 : *std::max_element(step_rows.begin(), step_rows.end());
}

std::size_t ExecutionStats::total_intermediate() const {
  return std::accumulate(step_rows.begin(), step_rows.end(), std::size_t{0});
}

namespace {

using Row = std::vector<TermId>;

struct RowHash {
  std::size_t operator()(const Row& r) const noexcept {
    std::size_t h = r.size();
    for (TermId id : r) h ^= id + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};

// Dictionary terms plus values computed during the query. Computed terms
// that already exist in the store reuse the store's id, so id equality is
// term equality throughout.
class TermTable {
 public:
  explicit TermTable(const rdf::Dictionary& dict) : dict_(dict) {}

  static constexpr TermId kLocalBase = 0x80000000u;

  const Term& term(TermId id) const { return id >= kLocalBase ? local_[id - kLocalBase] : dict_.term(id); }

  TermId intern(const Term& t) {
    if (auto id = dict_.find(t)) return *id;
    if (auto it = local_ids_.find(t); it != local_ids_.end()) return it->second;
    TermId id = kLocalBase + static_cast<TermId>(local_.size());
    local_.push_back(t);
    local_ids_.emplace(t, id);
    return id;
  }

  // Store ids in the value class of `id`.
  std::vector<TermId> equivalents(TermId id) const {
    if (id < kLocalBase) {
      auto eq = dict_.equivalents(id);
      return {eq.begin(), eq.end()};
    }
    auto rep = dict_.find_canonical(term(id));
    if (!rep) return {};
    auto eq = dict_.equivalents(*rep);
    return {eq.begin(), eq.end()};
  }

  bool same_value(TermId a, TermId b) const {
    if (a == b) return true;
    if (a < kLocalBase && b < kLocalBase) return dict_.canonical(a) == dict_.canonical(b);
    return rdf::value_equal(term(a), term(b));
  }

 private:
  const rdf::Dictionary& dict_;
  std::deque<Term> local_;
  std::unordered_map<Term, TermId, rdf::TermHash> local_ids_;
};

class RowEnv : public Environment {
 public:
  RowEnv(const TermTable& terms, const Row& row, const std::vector<int>* masked = nullptr)
      : terms_(terms), row_(row), masked_(masked) {}

  const Term* lookup(const Expr& var) const override {
    if (var.slot < 0 || static_cast<std::size_t>(var.slot) >= row_.size()) return nullptr;
    if (masked_ && std::find(masked_->begin(), masked_->end(), var.slot) != masked_->end()) return nullptr;
    TermId id = row_[var.slot];
    return id == kNoTerm ? nullptr : &terms_.term(id);
  }

 private:
  const TermTable& terms_;
  const Row& row_;
  const std::vector<int>* masked_;
};

class GroupEnv : public Environment {
 public:
  GroupEnv(const TermTable& terms, const Row* rep, const std::vector<std::optional<Term>>& aggs)
      : terms_(terms), rep_(rep), aggs_(aggs) {}

  const Term* lookup(const Expr& var) const override {
    if (!rep_ || var.slot < 0) return nullptr;
    TermId id = (*rep_)[var.slot];
    return id == kNoTerm ? nullptr : &terms_.term(id);
  }
  std::optional<Term> aggregate(const Expr& e) const override {
    if (e.aggregate_index < 0 || static_cast<std::size_t>(e.aggregate_index) >= aggs_.size()) {
      return std::nullopt;
    }
    return aggs_[e.aggregate_index];
  }

 private:
  const TermTable& terms_;
  const Row* rep_;
  const std::vector<std::optional<Term>>& aggs_;
};

class Executor {
 public:
  Executor(const Plan& plan, const rdf::GraphStore& store)
      : plan_(plan), store_(store), terms_(store.dictionary()) {}

  QueryResult run() {
    auto start = std::chrono::steady_clock::now();
    std::vector<Row> rows{Row(plan_.slot_names.size(), kNoTerm)};
    for (const auto& step : plan_.steps) {
      switch (step.kind) {
        case StepKind::Scan: rows = scan(step, rows); break;
        case StepKind::Filter: filter(step, rows); break;
        case StepKind::Extend: extend(step, rows); break;
      }
      result_.stats.step_rows.push_back(rows.size());
    }

    std::vector<Row> out;
    std::size_t width = plan_.outputs.size();
    if (plan_.grouped) {
      out = group(rows);
      order(out);
    } else {
      for (const auto& st : plan_.select_extends) extend(st, rows);
      order(rows);
      out.reserve(rows.size());
      for (const auto& r : rows) {
        Row o(width);
        for (std::size_t i = 0; i < width; ++i) o[i] = r[plan_.outputs[i].slot];
        out.push_back(std::move(o));
      }
    }
    for (auto& r : out) r.resize(width);
    if (plan_.distinct) distinct(out);
    slice(out);

    result_.table.variables = plan_.variables();
    result_.table.rows.reserve(out.size());
    for (const auto& r : out) {
      std::vector<std::optional<Term>> row(width);
      for (std::size_t i = 0; i < width; ++i) {
        if (r[i] != kNoTerm) row[i] = terms_.term(r[i]);
      }
      result_.table.rows.push_back(std::move(row));
    }
    result_.stats.result_rows = result_.table.rows.size();
    result_.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return std::move(result_);
  }

 private:
  std::vector<Row> scan(const PlanStep& st, const std::vector<Row>& rows) {
    std::vector<Row> out;
    std::array<std::vector<rdf::IdPattern>, 3> cands;
    for (const auto& row : rows) {
      bool possible = true;
      for (int i = 0; i < 3 && possible; ++i) {
        cands[i].clear();
        int slot = st.slots[i];
        if (slot < 0) {
          for (TermId id : st.constants[i]) cands[i].push_back(id);
        } else if (row[slot] != kNoTerm) {
          for (TermId id : terms_.equivalents(row[slot])) cands[i].push_back(id);
        } else {
          cands[i].push_back(std::nullopt);
        }
        possible = !cands[i].empty();
      }
      if (!possible) continue;
      for (const auto& s : cands[0]) {
        for (const auto& p : cands[1]) {
          for (const auto& o : cands[2]) {
            store_.for_each_match(nullptr, s, p, o, [&](const rdf::IdTriple& t) {
              Row next = row;
              const TermId ids[3] = {t.s, t.p, t.o};
              for (int i = 0; i < 3; ++i) {
                int slot = st.slots[i];
                if (slot < 0 || row[slot] != kNoTerm) continue;
                if (next[slot] == kNoTerm) {
                  next[slot] = ids[i];
                } else if (!terms_.same_value(next[slot], ids[i])) {
                  return;  // repeated variable, different values
                }
              }
              out.push_back(std::move(next));
            });
          }
        }
      }
    }
    return out;
  }

  void filter(const PlanStep& st, std::vector<Row>& rows) {
    std::erase_if(rows, [&](const Row& r) { return !filter_passes(st.expr, RowEnv(terms_, r)); });
  }

  void extend(const PlanStep& st, std::vector<Row>& rows) {
    std::erase_if(rows, [&](Row& r) {
      auto v = evaluate(st.expr, RowEnv(terms_, r, &st.masked));
      TermId& cell = r[st.target];
      if (cell == kNoTerm) {
        if (v) cell = terms_.intern(*v);
        return false;
      }
      // Target already bound by a pattern placed earlier: behaves as a join.
      return v && !rdf::value_equal(terms_.term(cell), *v);
    });
  }

  std::optional<Term> aggregate(const Expr& agg, const std::vector<const Row*>& members) {
    if (agg.count_star) {
      if (!agg.distinct) return Term::integer(static_cast<std::int64_t>(members.size()));
      // Distinct solutions: path intermediates are not part of a solution.
      std::set<Row> seen;
      for (const Row* r : members) {
        Row visible;
        for (std::size_t i = 0; i < r->size(); ++i) {
          if (plan_.slot_names[i][0] != '#') visible.push_back((*r)[i]);
        }
        seen.insert(std::move(visible));
      }
      return Term::integer(static_cast<std::int64_t>(seen.size()));
    }
    std::vector<Term> values;
    for (const Row* r : members) {
      if (auto v = evaluate(agg.args[0], RowEnv(terms_, *r))) values.push_back(std::move(*v));
    }
    if (agg.distinct) {
      std::set<Term> seen;
      std::erase_if(values, [&](const Term& t) { return !seen.insert(t).second; });
    }
    switch (agg.aggregate) {
      case AggregateFn::Count: return Term::integer(static_cast<std::int64_t>(values.size()));
      case AggregateFn::Sum:
      case AggregateFn::Avg: {
        auto type = rdf::NumericType::Integer;
        long double sum = 0;
        for (const auto& t : values) {
          auto n = rdf::numeric_value(t);
          if (!n) return std::nullopt;
          type = std::max(type, n->type);
          sum += n->value;
        }
        if (values.empty()) return Term::integer(0);
        if (agg.aggregate == AggregateFn::Sum) return rdf::make_numeric(type, sum);
        type = std::max(type, rdf::NumericType::Decimal);
        return rdf::make_numeric(type, sum / static_cast<long double>(values.size()));
      }
      case AggregateFn::Min:
      case AggregateFn::Max: {
        if (values.empty()) return std::nullopt;
        const Term* best = &values[0];
        for (const auto& t : values) {
          int c = order_compare(&t, best);
          if (agg.aggregate == AggregateFn::Min ? c < 0 : c > 0) best = &t;
        }
        return *best;
      }
    }
    return std::nullopt;
  }

  std::vector<Row> group(const std::vector<Row>& rows) {
    std::unordered_map<Row, std::size_t, RowHash> index;
    std::vector<std::vector<const Row*>> groups;
    for (const auto& r : rows) {
      Row key;
      for (int s : plan_.group_slots) key.push_back(r[s]);
      auto [it, inserted] = index.emplace(std::move(key), groups.size());
      if (inserted) groups.emplace_back();
      groups[it->second].push_back(&r);
    }
    // Aggregates without GROUP BY form one group, even over no rows.
    if (groups.empty() && plan_.group_slots.empty()) groups.emplace_back();

    std::vector<Row> out;
    for (const auto& members : groups) {
      std::vector<std::optional<Term>> aggs;
      for (const auto& a : plan_.aggregates) aggs.push_back(aggregate(a, members));
      const Row* rep = members.empty() ? nullptr : members.front();
      GroupEnv env(terms_, rep, aggs);
      Row o;
      for (const auto& output : plan_.outputs) {
        auto v = evaluate(*output.expr, env);
        o.push_back(v ? terms_.intern(*v) : kNoTerm);
      }
      for (int s : plan_.extra_key_slots) o.push_back(rep ? (*rep)[s] : kNoTerm);
      out.push_back(std::move(o));
    }
    return out;
  }

  void order(std::vector<Row>& rows) {
    if (plan_.order.empty()) return;
    struct Key {
      std::optional<Term> value;
      bool error = false;
    };
    std::vector<std::vector<Key>> keys(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RowEnv env(terms_, rows[i]);
      for (const auto& k : plan_.order) {
        Key key;
        if (k.expr.kind == ExprKind::Variable) {
          if (const Term* t = env.lookup(k.expr)) key.value = *t;
        } else {
          key.value = evaluate(k.expr, env);
          key.error = !key.value;
        }
        keys[i].push_back(std::move(key));
      }
    }
    std::vector<std::size_t> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < plan_.order.size(); ++k) {
        const Key& x = keys[a][k];
        const Key& y = keys[b][k];
        if (x.error != y.error) return y.error;
        if (x.error) continue;
        int c = order_compare(x.value ? &*x.value : nullptr, y.value ? &*y.value : nullptr);
        if (plan_.order[k].descending) c = -c;
        if (c != 0) return c < 0;
      }
      return false;
    });
    std::vector<Row> sorted;
    sorted.reserve(rows.size());
    for (std::size_t i : perm) sorted.push_back(std::move(rows[i]));
    rows = std::move(sorted);
  }

  static void distinct(std::vector<Row>& rows) {
    std::unordered_map<Row, bool, RowHash> seen;
    std::erase_if(rows, [&](const Row& r) { return !seen.emplace(r, true).second; });
  }

  void slice(std::vector<Row>& rows) const {
    std::size_t begin = std::min(plan_.offset, rows.size());
    std::size_t end = rows.size();
    if (plan_.limit) end = std::min(end, begin + *plan_.limit);
    rows = std::vector<Row>(std::make_move_iterator(rows.begin() + static_cast<std::ptrdiff_t>(begin)),
                            std::make_move_iterator(rows.begin() + static_cast<std::ptrdiff_t>(end)));
  }

  const Plan& plan_;
  const rdf::GraphStore& store_;
  TermTable terms_;
  QueryResult result_;
};

std::string render(const Term& t, const rdf::PrefixMap& prefixes) {
  if (t.is_iri()) {
    if (auto split = prefixes.split(t.value); split && turtle::is_simple_local_name(split->second)) {
      return split->first + ":" + split->second;
    }
  }
  return rdf::to_string(t);
}

std::string render(const PatternTerm& t, const rdf::PrefixMap& prefixes) {
  if (const auto* v = std::get_if<Variable>(&t)) return "?" + v->name;
  return render(std::get<Term>(t), prefixes);
}

std::string render_estimate(double e) {
  if (e > 0 && e < 1) return "<1";
  return std::to_string(std::llround(e));
}

}  // namespace

QueryResult execute(const Plan& plan, const rdf::GraphStore& store) { return Executor(plan, store).run(); }

QueryResult run_query(std::string_view text, const rdf::GraphStore& store, PlanOptions options) {
  Query q = parse_query(text, store.prefixes());
  Plan plan = plan_query(q, store, options);
  return execute(plan, store);
}

std::string explain(const Plan& plan, const ExecutionStats* stats) {
  std::string out = std::string("plan (") + (plan.optimized ? "optimized" : "textual order") + ", " +
                    std::to_string(plan.steps.size()) + " steps)\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& st = plan.steps[i];
    std::string line = "  " + std::to_string(i + 1) + ". ";
    switch (st.kind) {
      case StepKind::Scan:
        line += "scan   " + render(st.pattern[0], plan.prefixes) + " " + render(st.pattern[1], plan.prefixes) +
                " " + render(st.pattern[2], plan.prefixes);
        if (st.path_index >= 0) line += "  [path " + std::to_string(st.path_index) + "]";
        break;
      case StepKind::Filter: line += "filter " + to_string(st.expr); break;
      case StepKind::Extend:
        line += "extend ?" + plan.slot_names[st.target] + " := " + to_string(st.expr);
        break;
    }
    line += "  est=" + render_estimate(st.estimate);
    if (stats && i < stats->step_rows.size()) line += " rows=" + std::to_string(stats->step_rows[i]);
    out += line + "\n";
  }
  for (const auto& st : plan.select_extends) {
    out += "  select ?" + plan.slot_names[st.target] + " := " + to_string(st.expr) + "\n";
  }
  if (plan.grouped) {
    out += "  group by";
    for (int s : plan.group_slots) out += " ?" + plan.slot_names[s];
    if (plan.group_slots.empty()) out += " ()";
    for (const auto& a : plan.aggregates) out += " " + to_string(a);
    out += "\n";
  }
  if (!plan.order.empty()) {
    out += "  order by";
    for (const auto& k : plan.order) out += std::string(k.descending ? " desc " : " asc ") + to_string(k.expr);
    out += "\n";
  }
  out += "  project";
  for (const auto& o : plan.outputs) out += " ?" + o.name;
  out += "\n";
  if (plan.distinct) out += "  distinct\n";
  if (plan.offset > 0 || plan.limit) {
    out += "  slice offset " + std::to_string(plan.offset) + " limit " +
           (plan.limit ? std::to_string(*plan.limit) : std::string("none")) + "\n";
  }
  if (stats) {
    out += "  result rows=" + std::to_string(stats->result_rows) + "\n";
  }
  return out;
}

}  // namespace semdd::query
