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

#ifndef NSRL_LOGIC_H_
#define NSRL_LOGIC_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nsrl {

// Terms are plain strings: a leading uppercase letter marks a variable,
// anything else is a constant (an entity id such as `o1` or a lemma).
bool IsVariable(std::string_view term);
// Entity ids are one lowercase letter followed by digits (o1, c12, r3).
bool IsEntityId(std::string_view term);

struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  Atom() = default;
  Atom(std::string pred, std::vector<std::string> a)
      : predicate(std::move(pred)), args(std::move(a)) {}

  bool IsGround() const;
  std::string ToString() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

Atom ParseAtom(std::string_view text);

using Binding = std::map<std::string, std::string, std::less<>>;

Atom Substitute(const Atom& atom, const Binding& binding);

struct RuleStats {
  int uses = 0;
  int positive_uses = 0;

  friend bool operator==(const RuleStats&, const RuleStats&) = default;
};

// head :- body_pos..., not body_naf...
struct Rule {
  std::string id;
  Atom head;
  std::vector<Atom> body_pos;
  std::vector<Atom> body_naf;
  bool generalized = false;
  std::optional<int> gen_distance;
  RuleStats stats;

  // Variables in order of first appearance (head first).
  std::vector<std::string> Variables() const;
  // `head :- a, b, not c.` without the metadata comment.
  std::string ToString() const;
  // True when head and positive body match (NAF literals and metadata are
  // not part of a rule's identity).
  bool SameClause(const Rule& other) const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Set of ground atoms describing one observation.
class FactBase {
 public:
  FactBase() = default;
  FactBase(std::initializer_list<Atom> atoms);

  // Throws ContractError for non-ground atoms.
  void Add(Atom atom);
  bool Contains(const Atom& atom) const { return facts_.count(atom) > 0; }
  size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  const std::set<Atom>& facts() const { return facts_; }

  // All facts with this predicate, in sorted order.
  std::vector<const Atom*> WithPredicate(std::string_view predicate) const;
  // Entity ids occurring as arguments.
  std::set<std::string> Entities() const;
  // Unary predicates true of `entity`, sorted.
  std::vector<std::string> UnaryPredicatesOf(std::string_view entity) const;

  // `pred(a,b).` lines, sorted.
  std::string ToString() const;

  auto begin() const { return facts_.begin(); }
  auto end() const { return facts_.end(); }

  friend bool operator==(const FactBase&, const FactBase&) = default;

 private:
  std::set<Atom> facts_;
};

FactBase ParseFacts(std::string_view text);

std::string AbnormalPredicate(std::string_view rule_id);

// Default rules plus the abnormality rules guarding them. A default with id
// `r3` may carry `not ab_r3(X)`; the exceptions defining ab_r3 live in
// `exceptions()`.
class RuleStore {
 public:
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Rule>& exceptions() const { return exceptions_; }
  bool empty() const { return rules_.empty() && exceptions_.empty(); }

  const Rule* Find(std::string_view rule_id) const;
  Rule* Find(std::string_view rule_id);
  // Default with the same head and positive body, if stored.
  const Rule* FindClause(const Rule& clause) const;
  // Exceptions attached to `rule_id`.
  std::vector<const Rule*> ExceptionsOf(std::string_view rule_id) const;

  // Inserts a default rule. An empty id gets a fresh `r<N>`. If the same
  // clause is already present the store is unchanged and the existing id
  // is returned.
  std::string AddRule(Rule rule);
  // Adds `ab_<rule_id>(X) :- body.` and makes sure the default carries the
  // matching NAF literal. Returns false if an identical exception exists.
  // Throws ContractError if `rule_id` is unknown.
  bool AddException(std::string_view rule_id, std::vector<Atom> body);
  void RemoveRule(std::string_view rule_id);

  // Checks safety, NAF variable scoping, exception linkage and unique
  // ids; throws ContractError describing the first violation.
  void Validate() const;

  int next_id() const { return next_id_; }
  void set_next_id(int n) { next_id_ = n; }

  friend bool operator==(const RuleStore&, const RuleStore&) = default;

 private:
  friend RuleStore ParseRuleStore(std::string_view text);

  std::vector<Rule> rules_;
  std::vector<Rule> exceptions_;
  int next_id_ = 1;
};

// Rule file text format. One clause per line, `%` starts a comment. A
// trailing `% id=r1 uses=3 pos=2 [gen d=1]` comment carries metadata.
std::string PrintRuleStore(const RuleStore& store);
// Throws ParseError with the offending line number.
RuleStore ParseRuleStore(std::string_view text);
Rule ParseRule(std::string_view text);

// Least fixpoint of the exception rules over `facts`.
std::set<Atom> DeriveAbnormals(const RuleStore& store, const FactBase& facts);

// True iff every positive body atom, grounded by `binding`, is a fact and
// no NAF atom is among `abnormals`. Throws ContractError if a rule variable
// is unbound.
bool CheckRuleBody(const Rule& rule, const FactBase& facts,
                   const std::set<Atom>& abnormals, const Binding& binding);

struct Derivation {
  Atom head;
  std::string rule_id;

  friend auto operator<=>(const Derivation&, const Derivation&) = default;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Every ground head derivable by a default rule, paired with the rule that
// derives it. Sorted by (predicate, args, rule_id); variables range over
// entity ids of `facts`.
std::vector<Derivation> GroundQuery(const RuleStore& store, const FactBase& facts);

// All bindings of `body` (positive atoms only) against `facts`, restricted
// to entity-id values.
std::vector<Binding> MatchBody(const std::vector<Atom>& body, const FactBase& facts);

}  // namespace nsrl

#endif  // NSRL_LOGIC_H_
