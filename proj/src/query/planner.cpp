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

#include "semdd/query/planner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace semdd::query {

using rdf::TermId;

std::string path_variable(std::size_t path, std::size_t step) {
  return "#path" + std::to_string(path) + "_" + std::to_string(step);
}

std::vector<std::string> Plan::variables() const {
  std::vector<std::string> out;
  for (const auto& o : outputs) out.push_back(o.name);
  return out;
}

std::size_t Plan::scan_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const PlanStep& s) { return s.kind == StepKind::Scan; }));
}

namespace {

struct Unit {
  PlanStep step;
  std::size_t textual = 0;
  std::set<int> binds;
  std::set<int> uses;
  // Cardinality data for scans.
  double count = 0;
  std::array<std::optional<double>, 3> distinct;
  bool placed = false;
};

class Planner {
 public:
  Planner(const Query& q, const rdf::GraphStore& store, PlanOptions options)
      : q_(q), store_(store), dict_(store.dictionary()) {
    plan_.optimized = options.optimize;
  }

  Plan run() {
    for (const auto& v : q_.where_variables()) slot_of(v);
    collect_units();
    if (plan_.optimized) {
      order_greedy();
    } else {
      order_textual();
    }
    finish();
    return std::move(plan_);
  }

 private:
  int slot_of(const std::string& name) {
    auto it = slots_.find(name);
    if (it != slots_.end()) return it->second;
    int s = static_cast<int>(plan_.slot_names.size());
    plan_.slot_names.push_back(name);
    slots_.emplace(name, s);
    return s;
  }

  void resolve_all(Expr& e) {
    if (e.kind == ExprKind::Variable) e.slot = slot_of(e.variable);
    for (auto& a : e.args) resolve_all(a);
    if (e.kind == ExprKind::Aggregate) {
      e.aggregate_index = static_cast<int>(plan_.aggregates.size());
      plan_.aggregates.push_back(e);
    }
  }

  static std::set<int> expr_slots(const Expr& e) {
    std::set<int> out;
    auto walk = [&](auto& self, const Expr& x) -> void {
      if (x.kind == ExprKind::Variable) out.insert(x.slot);
      for (const auto& a : x.args) self(self, a);
    };
    walk(walk, e);
    return out;
  }

  std::vector<TermId> constant_ids(const rdf::Term& t) const {
    auto rep = dict_.find_canonical(t);
    if (!rep) return {};
    auto eq = dict_.equivalents(*rep);
    return {eq.begin(), eq.end()};
  }

  void add_scan(const PatternTerm& s, const PatternTerm& p, const PatternTerm& o, std::size_t textual,
                int path_index) {
    Unit u;
    u.textual = textual;
    u.step.kind = StepKind::Scan;
    u.step.pattern = {s, p, o};
    u.step.path_index = path_index;
    for (int i = 0; i < 3; ++i) {
      const auto& t = u.step.pattern[i];
      if (const auto* v = std::get_if<Variable>(&t)) {
        u.step.slots[i] = slot_of(v->name);
        u.binds.insert(u.step.slots[i]);
      } else {
        u.step.constants[i] = constant_ids(std::get<rdf::Term>(t));
      }
    }
    u.count = count_matches(u.step, [](const rdf::IdTriple&) {});
    units_.push_back(std::move(u));
  }

  // Iterates triples matching the constant positions; returns how many.
  template <typename Visit>
  double count_matches(const PlanStep& st, Visit&& visit) const {
    std::array<std::vector<rdf::IdPattern>, 3> cands;
    for (int i = 0; i < 3; ++i) {
      if (st.slots[i] >= 0) {
        cands[i] = {std::nullopt};
      } else {
        for (TermId id : st.constants[i]) cands[i].push_back(id);
      }
    }
    double n = 0;
    for (const auto& s : cands[0]) {
      for (const auto& p : cands[1]) {
        for (const auto& o : cands[2]) {
          store_.for_each_match(nullptr, s, p, o, [&](const rdf::IdTriple& t) {
            ++n;
            visit(t);
          });
        }
      }
    }
    return n;
  }

  double distinct_at(Unit& u, int pos) {
    if (!u.distinct[pos]) {
      std::unordered_set<TermId> seen;
      count_matches(u.step, [&](const rdf::IdTriple& t) {
        TermId id = pos == 0 ? t.s : (pos == 1 ? t.p : t.o);
        seen.insert(dict_.canonical(id));
      });
      u.distinct[pos] = std::max<double>(1.0, static_cast<double>(seen.size()));
    }
    return *u.distinct[pos];
  }

  void collect_units() {
    std::size_t textual = 0;
    std::size_t paths = 0;
    std::set<int> in_scope;
    for (const auto& el : q_.where) {
      if (const auto* tp = std::get_if<TriplePattern>(&el)) {
        add_scan(tp->subject, tp->predicate, tp->object, textual, -1);
      } else if (const auto* pp = std::get_if<PathPattern>(&el)) {
        std::size_t k = paths++;
        PatternTerm prev = pp->subject;
        for (std::size_t i = 0; i < pp->steps.size(); ++i) {
          PatternTerm next = i + 1 == pp->steps.size() ? pp->object
                                                       : PatternTerm(Variable{path_variable(k, i + 1)});
          add_scan(prev, pp->steps[i], next, textual, static_cast<int>(k));
          prev = next;
        }
      } else if (const auto* b = std::get_if<BindClause>(&el)) {
        Unit u;
        u.textual = textual;
        u.step.kind = StepKind::Extend;
        u.step.expr = b->expr;
        resolve_all(u.step.expr);
        u.step.target = slot_of(b->target.name);
        u.uses = expr_slots(u.step.expr);
        for (int s : u.uses) {
          if (!in_scope.contains(s)) u.step.masked.push_back(s);
        }
        u.binds.insert(u.step.target);
        units_.push_back(std::move(u));
      } else if (const auto* f = std::get_if<FilterClause>(&el)) {
        Unit u;
        u.textual = textual;
        u.step.kind = StepKind::Filter;
        u.step.expr = f->condition;
        resolve_all(u.step.expr);
        u.uses = expr_slots(u.step.expr);
        units_.push_back(std::move(u));
      }
      for (std::size_t i = scope_mark_; i < units_.size(); ++i) {
        in_scope.insert(units_[i].binds.begin(), units_[i].binds.end());
      }
      scope_mark_ = units_.size();
      ++textual;
    }
  }

  bool ready(const Unit& u) const {
    for (const auto& other : units_) {
      if (&other == &u || other.placed) continue;
      if (u.step.kind == StepKind::Extend && other.textual >= u.textual) continue;
      for (int s : u.uses) {
        if (other.binds.contains(s)) return false;
      }
    }
    return true;
  }

  double scan_estimate(Unit& u) {
    double est = rows_ * u.count;
    for (int i = 0; i < 3; ++i) {
      int s = u.step.slots[i];
      if (s < 0 || !bound_.contains(s)) continue;
      // A variable repeated within the pattern divides only once.
      bool repeated = false;
      for (int j = 0; j < i; ++j) repeated = repeated || u.step.slots[j] == s;
      if (!repeated) est /= distinct_at(u, i);
    }
    return est;
  }

  void place(Unit& u) {
    u.placed = true;
    if (u.step.kind == StepKind::Scan) rows_ = scan_estimate(u);
    u.step.estimate = rows_;
    bound_.insert(u.binds.begin(), u.binds.end());
    plan_.steps.push_back(u.step);
  }

  void place_ready_non_scans() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& u : units_) {
        if (u.placed || u.step.kind == StepKind::Scan || !ready(u)) continue;
        place(u);
        progress = true;
        break;
      }
    }
  }

  void order_greedy() {
    while (true) {
      place_ready_non_scans();
      Unit* best = nullptr;
      double best_est = 0;
      for (auto& u : units_) {
        if (u.placed || u.step.kind != StepKind::Scan) continue;
        double est = scan_estimate(u);
        if (best == nullptr || est < best_est) {
          best = &u;
          best_est = est;
        }
      }
      if (best == nullptr) break;
      place(*best);
    }
    for (auto& u : units_) {
      if (!u.placed) place(u);
    }
  }

  void order_textual() {
    for (auto& u : units_) {
      if (u.step.kind != StepKind::Filter) place(u);
    }
    for (auto& u : units_) {
      if (!u.placed) place(u);
    }
  }

  void finish() {
    plan_.distinct = q_.distinct;
    plan_.offset = q_.offset;
    plan_.limit = q_.limit;
    plan_.prefixes = store_.prefixes();
    for (const auto& [prefix, ns] : q_.prefix_decls) plan_.prefixes.set(prefix, ns);

    plan_.grouped = q_.is_grouped();
    if (!plan_.grouped) {
      if (q_.select_all) {
        for (const auto& v : q_.projected_variables()) plan_.outputs.push_back({v, slot_of(v), std::nullopt});
      }
      for (const auto& item : q_.select) {
        int slot = slot_of(item.var.name);
        plan_.outputs.push_back({item.var.name, slot, std::nullopt});
        if (item.expr) {
          PlanStep st;
          st.kind = StepKind::Extend;
          st.expr = *item.expr;
          resolve_all(st.expr);
          st.target = slot;
          st.estimate = rows_;
          plan_.select_extends.push_back(std::move(st));
        }
      }
      for (auto key : q_.order_by) {
        resolve_all(key.expr);
        plan_.order.push_back(std::move(key));
      }
      return;
    }

    for (const auto& v : q_.group_by) plan_.group_slots.push_back(slot_of(v.name));
    std::map<std::string, int> columns;
    for (const auto& item : q_.select) {
      PlanOutput out{item.var.name, slot_of(item.var.name), std::nullopt};
      if (item.expr) {
        out.expr = *item.expr;
        resolve_all(*out.expr);
      } else {
        out.expr = Expr::make_variable(item.var.name);
        resolve_all(*out.expr);
      }
      columns.emplace(item.var.name, static_cast<int>(plan_.outputs.size()));
      plan_.outputs.push_back(std::move(out));
    }
    int next = static_cast<int>(plan_.outputs.size());
    for (const auto& v : q_.group_by) {
      if (columns.contains(v.name)) continue;
      columns.emplace(v.name, next++);
      plan_.extra_key_slots.push_back(slot_of(v.name));
    }
    for (auto key : q_.order_by) {
      auto walk = [&](auto& self, Expr& x) -> void {
        if (x.kind == ExprKind::Variable) {
          auto it = columns.find(x.variable);
          x.slot = it == columns.end() ? -1 : it->second;
        }
        for (auto& a : x.args) self(self, a);
      };
      walk(walk, key.expr);
      plan_.order.push_back(std::move(key));
    }
  }

  const Query& q_;
  const rdf::GraphStore& store_;
  const rdf::Dictionary& dict_;
  Plan plan_;
  std::map<std::string, int> slots_;
  std::vector<Unit> units_;
  std::size_t scope_mark_ = 0;
  std::set<int> bound_;
  double rows_ = 1;
};

}  // namespace

Plan plan_query(const Query& q, const rdf::GraphStore& store, PlanOptions options) {
  return Planner(q, store, options).run();
}

}  // namespace semdd::query
