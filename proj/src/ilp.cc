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

#include "nsrl/ilp.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "nsrl/error.h"
#include "nsrl/information_gain.h"

namespace nsrl {

bool Example::Has(std::string_view predicate) const {
  return std::binary_search(features.begin(), features.end(), predicate);
}

std::string Goal::Name() const {
  return second ? action + "_" + *second : action;
}

Atom Goal::Head() const {
  if (second) return Atom(action, {"X", *second});
  return Atom(action, {"X"});
}

namespace {

std::optional<Goal> GoalOf(const StepRecord& step) {
  if (!step.action_atom || step.action_atom->args.empty()) return std::nullopt;
  const Atom& a = *step.action_atom;
  if (!IsEntityId(a.args[0]) || !step.types.count(a.args[0])) return std::nullopt;
  Goal g{a.predicate, std::nullopt};
  if (a.args.size() == 2) g.second = a.args[1];
  return g;
}

}  // namespace

std::optional<Example> ExampleFromStep(const StepRecord& step) {
  if (!GoalOf(step)) return std::nullopt;
  Example ex;
  ex.entity = step.action_atom->args[0];
  ex.type = step.types.at(ex.entity);
  ex.features = step.facts.UnaryPredicatesOf(ex.entity);
  if (!std::binary_search(ex.features.begin(), ex.features.end(), ex.type)) {
    ex.features.insert(std::lower_bound(ex.features.begin(), ex.features.end(), ex.type), ex.type);
  }
  ex.episode = step.episode;
  ex.step = step.step;
  return ex;
}

std::vector<Goal> ListGoals(const ExperienceStore& store) {
  std::set<Goal> goals;
  for (const auto& s : store.steps())
    if (auto g = GoalOf(s)) goals.insert(*g);
  return {goals.begin(), goals.end()};
}

std::optional<IlpTask> BuildIlpTask(const ExperienceStore& store, const Goal& goal) {
  IlpTask task;
  task.goal = goal;
  bool any = false;
  for (const auto& s : store.steps()) {
    auto g = GoalOf(s);
    if (!g || *g != goal) continue;
    any = true;
    Example ex = *ExampleFromStep(s);
    task.predicate_list.insert(ex.features.begin(), ex.features.end());
    (s.reward > 0 ? task.pos : task.neg).push_back(std::move(ex));
  }
  if (!any) return std::nullopt;
  return task;
}

std::vector<IlpTask> BuildIlpTasks(const ExperienceStore& store) {
  std::map<Goal, IlpTask> tasks;
  for (const auto& s : store.steps()) {
    auto g = GoalOf(s);
    if (!g) continue;
    IlpTask& task = tasks[*g];
    task.goal = *g;
    Example ex = *ExampleFromStep(s);
    task.predicate_list.insert(ex.features.begin(), ex.features.end());
    (s.reward > 0 ? task.pos : task.neg).push_back(std::move(ex));
  }
  std::vector<IlpTask> out;
  for (auto& [g, t] : tasks) out.push_back(std::move(t));
  return out;
}

namespace {

struct Candidate {
  std::string literal;
  double gain = kInvalidGain;
  bool is_type = false;
};

// Larger gain first, then type predicates, then the smaller name.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.is_type != b.is_type) return a.is_type;
  return a.literal < b.literal;
}

std::vector<const Example*> Filter(const std::vector<const Example*>& xs,
                                   const std::string& literal) {
  std::vector<const Example*> out;
  for (const auto* x : xs)
    if (x->Has(literal)) out.push_back(x);
  return out;
}

}  // namespace

std::vector<Rule> InduceRules(const IlpTask& task, const InduceOptions& options) {
  if (task.pos.empty()) throw ContractError("nothing to learn: task " + task.goal.Name() + " has no positive example");

  std::set<std::string> types;
  for (const auto* set : {&task.pos, &task.neg})
    for (const auto& e : *set) types.insert(e.type);

  std::vector<const Example*> remaining;
  for (const auto& e : task.pos) remaining.push_back(&e);
  std::vector<const Example*> all_neg;
  for (const auto& e : task.neg) all_neg.push_back(&e);

  std::vector<Rule> rules;
  while (!remaining.empty()) {
    std::vector<std::string> body;
    auto cov_pos = remaining;
    auto cov_neg = all_neg;
    while (static_cast<int>(body.size()) < options.max_body_literals) {
      if (!body.empty() && cov_neg.empty()) break;
      std::optional<Candidate> best;
      const int p0 = static_cast<int>(cov_pos.size());
      const int n0 = static_cast<int>(cov_neg.size());
      for (const auto& lit : task.predicate_list) {
        if (std::find(body.begin(), body.end(), lit) != body.end()) continue;
        int p1 = 0, n1 = 0;
        for (const auto* x : cov_pos) p1 += x->Has(lit);
        for (const auto* x : cov_neg) n1 += x->Has(lit);
        if (p1 == 0) continue;
        Candidate c{lit, InformationGain(p0, n0, p1, n1, p1), types.count(lit) > 0};
        // A body must have at least one literal; with no negatives left
        // every literal is equally pure and any of them may start it.
        const bool admissible = c.gain > 0 || (cov_neg.empty() && c.gain >= 0);
        if (!admissible) continue;
        if (!best || Better(c, *best)) best = c;
      }
      if (!best) break;
      body.push_back(best->literal);
      cov_pos = Filter(cov_pos, best->literal);
      cov_neg = Filter(cov_neg, best->literal);
    }
    if (body.empty()) break;

    Rule r;
    r.head = task.goal.Head();
    for (const auto& lit : body) r.body_pos.push_back(Atom(lit, {"X"}));
    rules.push_back(std::move(r));

    std::erase_if(remaining, [&](const Example* x) {
      return std::find(cov_pos.begin(), cov_pos.end(), x) != cov_pos.end();
    });
  }
  return rules;
}

bool RuleCoversExample(const Rule& rule, const Example& example) {
  if (rule.head.args.empty()) return false;
  const std::string& var = rule.head.args[0];
  for (const auto& a : rule.body_pos) {
    if (a.args.size() != 1 || a.args[0] != var) return false;
    if (!example.Has(a.predicate)) return false;
  }
  return true;
}

bool ExceptionCoverageHolds(const Rule& default_rule, const Rule& exception,
                            const std::vector<Example>& examples) {
  int default_cov = 0, exception_cov = 0;
  for (const auto& e : examples) {
    default_cov += RuleCoversExample(default_rule, e);
    exception_cov += RuleCoversExample(exception, e);
  }
  return exception_cov < default_cov;
}

ExceptionOutcome LearnException(RuleStore& store, std::string_view rule_id,
                                const Example& failure,
                                const std::vector<Example>& successes,
                                const std::vector<Example>& task_examples) {
  const Rule* def = store.Find(rule_id);
  if (!def) throw ContractError("unknown rule id " + std::string(rule_id));

  // Positives of the exception are the failure, negatives the successes.
  const int n0 = static_cast<int>(successes.size());
  struct Scored {
    std::string literal;
    double gain;
    int coverage;  // task examples carrying the literal; smaller is more specific
  };
  std::optional<Scored> best;
  for (const auto& f : failure.features) {
    int n1 = 0;
    for (const auto& s : successes) n1 += s.Has(f);
    const double gain = InformationGain(1, n0, 1, n1, 1);
    if (!(gain > 0)) continue;
    int coverage = 0;
    for (const auto& e : task_examples) coverage += e.Has(f);
    Scored c{f, gain, coverage};
    if (!best || std::tie(best->gain, c.coverage, c.literal) < std::tie(c.gain, best->coverage, best->literal)) {
      best = c;
    }
  }
  if (!best) return ExceptionOutcome::kNoDiscriminator;

  Rule candidate;
  candidate.head = Atom(AbnormalPredicate(rule_id), {def->head.args[0]});
  candidate.body_pos = {Atom(best->literal, {def->head.args[0]})};
  if (!ExceptionCoverageHolds(*def, candidate, task_examples))
    return ExceptionOutcome::kCoverageViolation;

  const std::string var = def->head.args[0];
  if (!store.AddException(rule_id, {Atom(best->literal, {var})})) return ExceptionOutcome::kAlreadyKnown;
  return ExceptionOutcome::kLearned;
}

ExceptionOutcome LearnException(RuleStore& store, std::string_view rule_id,
                                const Example& failure,
                                const std::vector<Example>& successes) {
  std::vector<Example> all = successes;
  all.push_back(failure);
  return LearnException(store, rule_id, failure, successes, all);
}

}  // namespace nsrl
