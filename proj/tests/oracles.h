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

// Test-side reference implementations, written independently of the
// library code they check.

#ifndef NSRL_TESTS_ORACLES_H_
#define NSRL_TESTS_ORACLES_H_

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nsrl/logic.h"

namespace nsrl::oracle {

inline std::vector<std::string> Domain(const FactBase& facts) {
  std::set<std::string> d;
  for (const auto& a : facts)
    for (const auto& t : a.args)
      if (t.size() > 1 && t[0] >= 'a' && t[0] <= 'z' &&
          std::all_of(t.begin() + 1, t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        d.insert(t);
  return {d.begin(), d.end()};
}

inline std::vector<std::string> VarsOf(const Rule& r) {
  std::set<std::string> v;
  auto scan = [&](const Atom& a) {
    for (const auto& t : a.args)
      if (!t.empty() && t[0] >= 'A' && t[0] <= 'Z') v.insert(t);
  };
  scan(r.head);
  for (const auto& a : r.body_pos) scan(a);
  for (const auto& a : r.body_naf) scan(a);
  return {v.begin(), v.end()};
}

inline Atom Ground(const Atom& a, const std::map<std::string, std::string>& b) {
  Atom g = a;
  for (auto& t : g.args)
    if (auto it = b.find(t); it != b.end()) t = it->second;
  return g;
}

// Calls fn(binding) for every assignment of the rule's variables over dom.
template <typename Fn>
void ForEachAssignment(const std::vector<std::string>& vars, const std::vector<std::string>& dom,
                       Fn fn) {
  if (dom.empty() && !vars.empty()) return;
  std::vector<size_t> idx(vars.size(), 0);
  while (true) {
    std::map<std::string, std::string> b;
    for (size_t i = 0; i < vars.size(); ++i) b[vars[i]] = dom[idx[i]];
    fn(b);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == dom.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
}

// Bottom-up evaluation: exceptions to fixpoint, then one pass of defaults.
inline std::vector<std::pair<Atom, std::string>> Query(const RuleStore& store,
                                                       const FactBase& facts) {
  const auto dom = Domain(facts);
  std::set<Atom> ab;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : store.exceptions()) {
      ForEachAssignment(VarsOf(e), dom, [&](const auto& b) {
        for (const auto& a : e.body_pos)
          if (!facts.Contains(Ground(a, b)) && !ab.count(Ground(a, b))) return;
        if (ab.insert(Ground(e.head, b)).second) changed = true;
      });
    }
  }
  std::set<std::pair<Atom, std::string>> out;
  for (const auto& r : store.rules()) {
    ForEachAssignment(VarsOf(r), dom, [&](const auto& b) {
      for (const auto& a : r.body_pos)
        if (!facts.Contains(Ground(a, b))) return;
      for (const auto& a : r.body_naf)
        if (ab.count(Ground(a, b))) return;
      out.insert({Ground(r.head, b), r.id});
    });
  }
  return {out.begin(), out.end()};
}

struct RandomProgram {
  RuleStore store;
  FactBase facts;
};

// Up to `max_entities` entities, `max_rules` defaults and `max_exceptions`
// exception rules over a small predicate vocabulary.
inline RandomProgram MakeRandomProgram(std::mt19937_64& rng, int max_entities = 10,
                                       int max_rules = 10, int max_exceptions = 3) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
  const std::vector<std::string> unary = {"apple", "rotten", "red", "fruit", "held"};
  const std::vector<std::string> binary = {"near", "inside"};
  RandomProgram p;
  const int n_ent = 1 + pick(max_entities);
  std::vector<std::string> ents;
  for (int i = 1; i <= n_ent; ++i) ents.push_back((pick(2) ? "o" : "c") + std::to_string(i));
  const int n_facts = pick(3 * n_ent + 1);
  for (int i = 0; i < n_facts; ++i) {
    if (pick(4) == 0) {
      p.facts.Add(Atom(binary[pick(2)], {ents[pick(n_ent)], ents[pick(n_ent)]}));
    } else {
      p.facts.Add(Atom(unary[pick(5)], {ents[pick(n_ent)]}));
    }
  }
  const int n_rules = pick(max_rules + 1);
  std::vector<std::string> ids;
  for (int i = 0; i < n_rules; ++i) {
    Rule r;
    const bool two = pick(3) == 0;
    r.head = pick(2) ? Atom("insert", {"X", pick(2) ? "fridge" : "bin"}) : Atom("take", {"X"});
    const int len = 1 + pick(3);
    for (int k = 0; k < len; ++k) {
      if (two && k == 0) {
        r.body_pos.push_back(Atom(binary[pick(2)], {"X", "Y"}));
      } else {
        r.body_pos.push_back(Atom(unary[pick(5)], {two && pick(2) ? "Y" : "X"}));
      }
    }
    if (std::none_of(r.body_pos.begin(), r.body_pos.end(),
                     [](const Atom& a) { return a.args[0] == "X"; }))
      r.body_pos.push_back(Atom(unary[pick(5)], {"X"}));
    if (two) r.head = Atom("insert", {"X", "Y"});
    if (p.store.FindClause(r)) continue;
    ids.push_back(p.store.AddRule(r));
  }
  const int n_exc = ids.empty() ? 0 : pick(max_exceptions + 1);
  for (int i = 0; i < n_exc; ++i) {
    std::vector<Atom> body;
    body.push_back(Atom(unary[pick(5)], {"X"}));
    if (pick(3) == 0) body.push_back(Atom(unary[pick(5)], {"X"}));
    p.store.AddException(ids[pick(static_cast<int>(ids.size()))], body);
  }
  return p;
}

// Direct high-precision evaluation of the gain formula.
inline double InformationGain(int p0, int n0, int p1, int n1, int total) {
  using F = boost::multiprecision::cpp_bin_float_50;
  if (p1 == 0) return -std::numeric_limits<double>::infinity();
  const F ln2 = log(F(2));
  const F a = log(F(p1) / F(p1 + n1)) / ln2;
  const F b = log(F(p0) / F(p0 + n0)) / ln2;
  return static_cast<double>(F(total) * (a - b));
}

}  // namespace nsrl::oracle

#endif  // NSRL_TESTS_ORACLES_H_
