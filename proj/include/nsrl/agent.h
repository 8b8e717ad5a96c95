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

#ifndef NSRL_AGENT_H_
#define NSRL_AGENT_H_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/experience.h"
#include "nsrl/game.h"
#include "nsrl/generalizer.h"
#include "nsrl/ilp.h"
#include "nsrl/logic.h"
#include "nsrl/policy.h"
#include "nsrl/taxonomy.h"

namespace nsrl {

struct Confidence {
  std::string rule_id;
  double accuracy = 1.0;
  double proximity = 0.0;
  double score = 1.0;
};

// accuracy = positive_uses / uses (1.0 before the first use), proximity =
// 1 / gen_distance for generalized rules and 0 otherwise.
Confidence ComputeConfidence(const Rule& rule);

struct Candidate {
  std::string action;
  std::string rule_id;
  double score = 0.0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct AdmissibleAction {
  std::string action;
  std::optional<Atom> atom;
};

// Derived action atoms matched against the admissible list, one entry per
// action (its best-scoring rule), sorted by score desc then action.
std::vector<Candidate> SymbolicCandidates(const RuleStore& store, const FactBase& facts,
                                          const std::vector<AdmissibleAction>& admissible);

struct Decision {
  std::string action;
  Provenance provenance;
  double score = 0.0;  // confidence of the supporting rule; 0 for neural
  std::vector<Candidate> candidates;
};

// Top symbolic candidate if any, otherwise the policy's epsilon-greedy pick.
// Throws ContractError if `admissible` is empty.
Decision SelectAction(const std::vector<Candidate>& candidates, const ExplorationPolicy& policy,
                      std::string_view context, const std::vector<std::string>& admissible,
                      double epsilon, std::mt19937_64& rng);

// Throws ContractError if `rule_id` is not a stored default.
void UpdateConfidence(RuleStore& store, std::string_view rule_id, double reward);

void PolicyUpdate(ExplorationPolicy& policy, const EpisodeRecord& trajectory);

// Text the policy scores: room description, inventory line, the previous
// action and every distinct action taken so far in the episode.
std::string ContextOf(const Observation& observation,
                      const std::vector<std::string>& history = {});

struct AgentConfig {
  bool symbolic = true;
  GenConfig gen;
  PolicyConfig policy;
  bool log_decisions = false;
};

struct DecisionRecord {
  int episode = 0;
  int step = 0;
  Decision decision;
  double reward = 0.0;
};

// Renders one JSON object per line.
std::string DecisionLogJson(const std::vector<DecisionRecord>& log);

class Agent {
 public:
  Agent(AgentConfig config, const Taxonomy* taxonomy);

  // Starts an episode; `seed` drives all random choices inside it.
  void BeginEpisode(uint64_t seed);
  Decision Act(const Observation& observation, bool learn);
  // Reward of the action returned by the last Act().
  void Feedback(double reward);
  // Closes the episode and returns its raw record. With `learn`, shapes
  // rewards, updates confidences and the policy, then re-induces rules and
  // exceptions from the whole experience.
  EpisodeRecord EndEpisode(bool learn);

  // Exploration rate for the next training episode.
  double TrainingEpsilon() const { return policy_.EpsilonAfter(episodes_trained_); }

  const AgentConfig& config() const { return config_; }
  const RuleStore& rules() const { return rules_; }
  RuleStore& mutable_rules() { return rules_; }
  const ExplorationPolicy& policy() const { return policy_; }
  const ExperienceStore& experience() const { return experience_; }
  const std::vector<DecisionRecord>& decision_log() const { return decision_log_; }
  int episodes_trained() const { return episodes_trained_; }

 private:
  // Example as seen by rule bodies: with hypernym features when
  // generalization is on.
  Example Lift(const Example& e) const;
  void RebuildRules();
  void LearnExceptions(const EpisodeRecord& shaped);

  AgentConfig config_;
  const Taxonomy* taxonomy_;
  RuleStore rules_;
  ExplorationPolicy policy_;
  ExperienceStore experience_;
  ObservationParser parser_;
  std::mt19937_64 rng_;
  int episodes_trained_ = 0;
  int episode_index_ = 0;
  bool learning_ = false;
  EpisodeRecord current_;
  std::optional<StepRecord> pending_;
  std::optional<Decision> pending_decision_;
  std::set<std::string> failed_symbolic_;
  std::vector<std::string> history_;
  std::vector<DecisionRecord> decision_log_;
};

}  // namespace nsrl

#endif  // NSRL_AGENT_H_
