// Copyright 2026 The nsrl Authors.
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

#include "nsrl/logic.h"

#include <algorithm>

#include "nsrl/error.h"

namespace nsrl {

bool IsVariable(std::string_view term) {
  return !term.empty() && term.front() >= 'A' && term.front() <= 'Z';
}

bool IsEntityId(std::string_view term) {
  if (term.size() < 2 || term.front() < 'a' || term.front() > 'z') return false;
  return std::all_of(term.begin() + 1, term.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool Atom::IsGround() const {
  return std::none_of(args.begin(), args.end(),
                      [](const std::string& a) { return IsVariable(a); });
}

std::string Atom::ToString() const {
  std::string out = predicate + "(";
  for (size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
  return out + ")";
}

Atom Substitute(const Atom& atom, const Binding& binding) {
  Atom out = atom;
  for (auto& a : out.args) {
    if (!IsVariable(a)) continue;
    auto it = binding.find(a);
    if (it != binding.end()) a = it->second;
  }
  return out;
}

std::vector<std::string> Rule::Variables() const {
  std::vector<std::string> vars;
  auto add = [&](const Atom& a) {
    for (const auto& t : a.args)
      if (IsVariable(t) && std::find(vars.begin(), vars.end(), t) == vars.end())
        vars.push_back(t);
  };
  add(head);
  for (const auto& a : body_pos) add(a);
  for (const auto& a : body_naf) add(a);
  return vars;
}

std::string Rule::ToString() const {
  std::string out = head.ToString();
  if (body_pos.empty() && body_naf.empty()) return out + ".";
  out += " :- ";
  bool first = true;
  for (const auto& a : body_pos) {
    out += (first ? "" : ", ") + a.ToString();
    first = false;
  }
  for (const auto& a : body_naf) {
    out += (first ? "not " : ", not ") + a.ToString();
    first = false;
  }
  return out + ".";
}

bool Rule::SameClause(const Rule& other) const {
  return head == other.head && body_pos == other.body_pos;
}

FactBase::FactBase(std::initializer_list<Atom> atoms) {
  for (const auto& a : atoms) Add(a);
}

void FactBase::Add(Atom atom) {
  if (!atom.IsGround()) throw ContractError("fact is not ground: " + atom.ToString());
  facts_.insert(std::move(atom));
}

std::vector<const Atom*> FactBase::WithPredicate(std::string_view predicate) const {
  std::vector<const Atom*> out;
  auto it = facts_.lower_bound(Atom(std::string(predicate), {}));
  for (; it != facts_.end() && it->predicate == predicate; ++it) out.push_back(&*it);
  return out;
}

std::set<std::string> FactBase::Entities() const {
  std::set<std::string> out;
  for (const auto& f : facts_)
    for (const auto& a : f.args)
      if (IsEntityId(a)) out.insert(a);
  return out;
}

std::vector<std::string> FactBase::UnaryPredicatesOf(std::string_view entity) const {
  std::vector<std::string> out;
  for (const auto& f : facts_)
    if (f.args.size() == 1 && f.args[0] == entity) out.push_back(f.predicate);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FactBase::ToString() const {
  std::string out;
  for (const auto& f : facts_) out += f.ToString() + ".\n";
  return out;
}

std::string AbnormalPredicate(std::string_view rule_id) {
  return "ab_" + std::string(rule_id);
}

const Rule* RuleStore::Find(std::string_view rule_id) const {
  for (const auto& r : rules_)
    if (r.id == rule_id) return &r;
  return nullptr;
}

Rule* RuleStore::Find(std::string_view rule_id) {
  for (auto& r : rules_)
    if (r.id == rule_id) return &r;
  return nullptr;
}

const Rule* RuleStore::FindClause(const Rule& clause) const {
  for (const auto& r : rules_)
    if (r.SameClause(clause)) return &r;
  return nullptr;
}

std::vector<const Rule*> RuleStore::ExceptionsOf(std::string_view rule_id) const {
  std::vector<const Rule*> out;
  const std::string ab = AbnormalPredicate(rule_id);
  for (const auto& e : exceptions_)
    if (e.head.predicate == ab) out.push_back(&e);
  return out;
}

std::string RuleStore::AddRule(Rule rule) {
  if (const Rule* existing = FindClause(rule)) return existing->id;
  if (rule.id.empty()) {
    do {
      rule.id = "r" + std::to_string(next_id_++);
    } while (Find(rule.id));
  } else if (Find(rule.id)) {
    throw ContractError("duplicate rule id " + rule.id);
  }
  rules_.push_back(std::move(rule));
  return rules_.back().id;
}

bool RuleStore::AddException(std::string_view rule_id, std::vector<Atom> body) {
  Rule* def = Find(rule_id);
  if (!def) throw ContractError("unknown rule id " + std::string(rule_id));
  if (def->head.args.empty()) throw ContractError("rule has no argument to guard");
  const std::string var = def->head.args[0];
  Atom ab(AbnormalPredicate(rule_id), {var});

  Rule exc;
  exc.head = ab;
  exc.body_pos = std::move(body);
  for (const auto* e : ExceptionsOf(rule_id))
    if (e->SameClause(exc)) return false;
  exc.id = std::string(rule_id) + "_e" + std::to_string(ExceptionsOf(rule_id).size() + 1);
  exceptions_.push_back(std::move(exc));
  if (std::find(def->body_naf.begin(), def->body_naf.end(), ab) == def->body_naf.end())
    def->body_naf.push_back(ab);
  return true;
}

void RuleStore::RemoveRule(std::string_view rule_id) {
  const std::string ab = AbnormalPredicate(rule_id);
  std::erase_if(rules_, [&](const Rule& r) { return r.id == rule_id; });
  std::erase_if(exceptions_, [&](const Rule& r) { return r.head.predicate == ab; });
}

namespace {

void CheckSafety(const Rule& r) {
  std::set<std::string> bound;
  for (const auto& a : r.body_pos)
    for (const auto& t : a.args)
      if (IsVariable(t)) bound.insert(t);
  for (const auto& t : r.head.args)
    if (IsVariable(t) && !bound.count(t))
      throw ContractError("unsafe head variable " + t + " in " + r.ToString());
  for (const auto& a : r.body_naf)
    for (const auto& t : a.args)
      if (IsVariable(t) && !bound.count(t))
        throw ContractError("NAF variable " + t + " not bound in " + r.ToString());
}

}  // namespace

void RuleStore::Validate() const {
  std::set<std::string> ids;
  for (const auto* list : {&rules_, &exceptions_}) {
    for (const auto& r : *list) {
      if (!ids.insert(r.id).second) throw ContractError("duplicate rule id " + r.id);
      CheckSafety(r);
    }
  }
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = i + 1; j < rules_.size(); ++j)
      if (rules_[i].SameClause(rules_[j]))
        throw ContractError("duplicate clause " + rules_[i].ToString());
  for (const auto& e : exceptions_) {
    if (!e.body_naf.empty())
      throw ContractError("exception with NAF literal breaks stratification: " + e.ToString());
    int refs = 0;
    for (const auto& r : rules_)
      for (const auto& n : r.body_naf)
        if (n.predicate == e.head.predicate) ++refs;
    if (refs != 1)
      throw ContractError("exception head " + e.head.predicate +
                          " must be referenced by exactly one default");
  }
}

namespace {

void Extend(const std::vector<Atom>& body, size_t i, const FactBase& facts,
            Binding& binding, std::vector<Binding>& out) {
  if (i == body.size()) {
    out.push_back(binding);
    return;
  }
  const Atom& pattern = body[i];
  for (const Atom* fact : facts.WithPredicate(pattern.predicate)) {
    if (fact->args.size() != pattern.args.size()) continue;
    std::vector<std::string> newly_bound;
    bool ok = true;
    for (size_t k = 0; k < pattern.args.size() && ok; ++k) {
      const std::string& t = pattern.args[k];
      const std::string& v = fact->args[k];
      if (!IsVariable(t)) {
        ok = (t == v);
      } else if (auto it = binding.find(t); it != binding.end()) {
        ok = (it->second == v);
      } else if (!IsEntityId(v)) {
        ok = false;
      } else {
        binding.emplace(t, v);
        newly_bound.push_back(t);
      }
    }
    if (ok) Extend(body, i + 1, facts, binding, out);
    for (const auto& t : newly_bound) binding.erase(t);
  }
}

}  // namespace

std::vector<Binding> MatchBody(const std::vector<Atom>& body, const FactBase& facts) {
  std::vector<Binding> out;
  Binding b;
  Extend(body, 0, facts, b, out);
  return out;
}

std::set<Atom> DeriveAbnormals(const RuleStore& store, const FactBase& facts) {
  std::set<Atom> derived;
  if (store.exceptions().empty()) return derived;
  FactBase work = facts;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : store.exceptions()) {
      for (const auto& b : MatchBody(e.body_pos, work)) {
        Atom head = Substitute(e.head, b);
        if (!head.IsGround()) continue;
        if (derived.insert(head).second) {
          work.Add(head);
          changed = true;
        }
      }
    }
  }
  return derived;
}

bool CheckRuleBody(const Rule& rule, const FactBase& facts,
                   const std::set<Atom>& abnormals, const Binding& binding) {
  for (const auto& v : rule.Variables())
    if (!binding.count(v))
      throw ContractError("unbound variable " + v + " in " + rule.ToString());
  for (const auto& a : rule.body_pos)
    if (!facts.Contains(Substitute(a, binding))) return false;
  for (const auto& a : rule.body_naf)
    if (abnormals.count(Substitute(a, binding))) return false;
  return true;
}

std::vector<Derivation> GroundQuery(const RuleStore& store, const FactBase& facts) {
  std::vector<Derivation> out;
  if (store.rules().empty()) return out;
  const std::set<Atom> abnormals = DeriveAbnormals(store, facts);
  for (const auto& rule : store.rules()) {
    for (const auto& b : MatchBody(rule.body_pos, facts)) {
      if (!CheckRuleBody(rule, facts, abnormals, b)) continue;
      Atom head = Substitute(rule.head, b);
      if (head.IsGround()) out.push_back({std::move(head), rule.id});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nsrl
