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

#ifndef NSRL_ILP_H_
#define NSRL_ILP_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsrl/experience.h"
#include "nsrl/logic.h"

namespace nsrl {

// One entity as seen at one step: its id, type lemma and every unary
// predicate true of it.
struct Example {
  std::string entity;
  std::string type;
  std::vector<std::string> features;  // sorted, includes `type`
  int episode = -1;
  int step = -1;

  bool Has(std::string_view predicate) const;
  friend bool operator==(const Example&, const Example&) = default;
};

// An action name plus, for two-argument actions, the fixed second argument.
struct Goal {
  std::string action;
  std::optional<std::string> second;

  // `insert_fridge` or `take`.
  std::string Name() const;
  // Head atom with variable X in the first position.
  Atom Head() const;

  friend auto operator<=>(const Goal&, const Goal&) = default;
  friend bool operator==(const Goal&, const Goal&) = default;
};

struct IlpTask {
  Goal goal;
  std::set<std::string> predicate_list;
  std::vector<Example> pos;
  std::vector<Example> neg;
};

// The example a step contributes for its action's first argument, or
// nullopt when the action has no typed entity argument.
std::optional<Example> ExampleFromStep(const StepRecord& step);

// Distinct goals among stored actions with a typed entity argument, sorted.
std::vector<Goal> ListGoals(const ExperienceStore& store);

// Splits the store's records of `goal` by reward sign (reward > 0 is
// positive, zero/negative is negative). nullopt when no record matches.
std::optional<IlpTask> BuildIlpTask(const ExperienceStore& store, const Goal& goal);
// Every goal's task in one pass over the store, ordered by goal.
std::vector<IlpTask> BuildIlpTasks(const ExperienceStore& store);

struct InduceOptions {
  int max_body_literals = 3;
};

// Greedy sequential covering with information gain. Emitted rules have the
// form `goal(X[,c]) :- f1(X), ...` and no id (the RuleStore assigns one).
// Throws ContractError when the task has no positive example.
std::vector<Rule> InduceRules(const IlpTask& task, const InduceOptions& options = {});

// True iff every positive body literal of `rule` (all unary on the head's
// first variable) holds for `example`.
bool RuleCoversExample(const Rule& rule, const Example& example);

// True iff fewer of `examples` satisfy the exception body than the default
// body.
bool ExceptionCoverageHolds(const Rule& default_rule, const Rule& exception,
                            const std::vector<Example>& examples);

enum class ExceptionOutcome {
  kLearned,
  kAlreadyKnown,
  kNoDiscriminator,
  kCoverageViolation,
};

// Learns `ab_<rule_id>(X) :- f(X).` from a failed use of `rule_id`, picking
// the feature of `failure` that best separates it from `successes`. The
// candidate is rejected unless ExceptionCoverageHolds over `task_examples`.
// On any outcome other than kLearned the store is untouched.
ExceptionOutcome LearnException(RuleStore& store, std::string_view rule_id,
                                const Example& failure,
                                const std::vector<Example>& successes,
                                const std::vector<Example>& task_examples);

// Same, with `successes` plus `failure` as the coverage set.
ExceptionOutcome LearnException(RuleStore& store, std::string_view rule_id,
                                const Example& failure,
                                const std::vector<Example>& successes);

}  // namespace nsrl

#endif  // NSRL_ILP_H_
