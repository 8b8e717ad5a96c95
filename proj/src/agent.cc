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

#include "nsrl/agent.h"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "nsrl/error.h"
#include "nsrl/ilp.h"

namespace nsrl {

Confidence ComputeConfidence(const Rule& rule) {
  Confidence c;
  c.rule_id = rule.id;
  c.accuracy = rule.stats.uses == 0
                   ? 1.0
                   : static_cast<double>(rule.stats.positive_uses) / rule.stats.uses;
  c.proximity = rule.generalized && rule.gen_distance.value_or(0) > 0 ? 1.0 / *rule.gen_distance : 0.0;
  c.score = c.accuracy + c.proximity;
  return c;
}

std::vector<Candidate> SymbolicCandidates(const RuleStore& store, const FactBase& facts,
                                          const std::vector<AdmissibleAction>& admissible) {
  if (store.rules().empty()) return {};
  std::map<Atom, std::vector<const std::string*>> by_atom;
  for (const auto& a : admissible)
    if (a.atom) by_atom[*a.atom].push_back(&a.action);

  std::map<std::string, Candidate> best;
  for (const auto& d : GroundQuery(store, facts)) {
    auto it = by_atom.find(d.head);
    if (it == by_atom.end()) continue;
    const Rule* rule = store.Find(d.rule_id);
    const double score = ComputeConfidence(*rule).score;
    for (const auto* action : it->second) {
      auto [pos, inserted] = best.try_emplace(*action, Candidate{*action, d.rule_id, score});
      if (!inserted && (score > pos->second.score ||
                        (score == pos->second.score && d.rule_id < pos->second.rule_id))) {
        pos->second = Candidate{*action, d.rule_id, score};
      }
    }
  }
  std::vector<Candidate> out;
  for (auto& [a, c] : best) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.action < b.action;
  });
  return out;
}

Decision SelectAction(const std::vector<Candidate>& candidates, const ExplorationPolicy& policy,
                      std::string_view context, const std::vector<std::string>& admissible,
                      double epsilon, std::mt19937_64& rng) {
  if (admissible.empty()) throw ContractError("empty admissible action set");
  Decision d;
  d.candidates = candidates;
  const Candidate* top = nullptr;
  for (const auto& c : candidates) {
    if (std::find(admissible.begin(), admissible.end(), c.action) == admissible.end()) continue;
    if (!top || c.score > top->score || (c.score == top->score && c.action < top->action)) top = &c;
  }
  if (top) {
    d.action = top->action;
    d.provenance = Provenance::Symbolic(top->rule_id);
    d.score = top->score;
    return d;
  }
  d.action = policy.Choose(context, admissible, epsilon, rng);
  d.provenance = Provenance::Neural();
  return d;
}

void UpdateConfidence(RuleStore& store, std::string_view rule_id, double reward) {
  Rule* r = store.Find(rule_id);
  if (!r) throw ContractError("unknown rule id " + std::string(rule_id));
  ++r->stats.uses;
  if (reward > 0) ++r->stats.positive_uses;
}

void PolicyUpdate(ExplorationPolicy& policy, const EpisodeRecord& trajectory) {
  policy.Update(trajectory);
}

std::string ContextOf(const Observation& observation, const std::vector<std::string>& history) {
  std::string out = observation.text + "\n" + observation.inventory_text;
  if (history.empty()) return out;
  out += "\n" + std::string(kLastActionPrefix) + " " + history.back();
  std::set<std::string_view> seen(history.begin(), history.end());
  for (auto a : seen) out += "\n" + std::string(kTriedPrefix) + " " + std::string(a);
  return out;
}

std::string DecisionLogJson(const std::vector<DecisionRecord>& log) {
  std::string out;
  for (const auto& r : log) {
    nlohmann::ordered_json j;
    j["episode"] = r.episode;
    j["step"] = r.step;
    j["action"] = r.decision.action;
    j["provenance"] = r.decision.provenance.ToString();
    j["score"] = r.decision.score;
    j["reward"] = r.reward;
    auto cands = nlohmann::ordered_json::array();
    for (const auto& c : r.decision.candidates)
      cands.push_back({{"action", c.action}, {"rule", c.rule_id}, {"score", c.score}});
    j["candidates"] = std::move(cands);
    out += j.dump();
    out += '\n';
  }
  return out;
}

Agent::Agent(AgentConfig config, const Taxonomy* taxonomy)
    : config_(std::move(config)), taxonomy_(taxonomy), policy_(config_.policy) {
  if (config_.gen.mode != GenMode::kNone) {
    config_.gen.Validate();
    if (!taxonomy_) throw ConfigError("generalization needs a taxonomy");
  }
}

void Agent::BeginEpisode(uint64_t seed) {
  rng_.seed(seed);
  parser_.Reset();
  current_ = EpisodeRecord{};
  current_.episode = episode_index_;
  pending_.reset();
  pending_decision_.reset();
  failed_symbolic_.clear();
  history_.clear();
}

Decision Agent::Act(const Observation& observation, bool learn) {
  if (pending_) throw ContractError("Act() called twice without Feedback()");
  learning_ = learn;
  ParsedObservation parsed = parser_.Parse(observation);

  std::vector<AdmissibleAction> admissible;
  for (const auto& a : observation.admissible) {
    if (failed_symbolic_.count(a)) continue;
    admissible.push_back({a, parser_.ActionAtom(a)});
  }

  std::vector<Candidate> candidates;
  if (config_.symbolic && !rules_.rules().empty()) {
    const FactBase query =
        config_.gen.mode == GenMode::kNone
            ? parsed.facts
            : WithHypernyms(parsed.facts, parsed.types, *taxonomy_, kExhaustiveLevel);
    candidates = SymbolicCandidates(rules_, query, admissible);
  }

  const std::string context = ContextOf(observation, history_);
  const double epsilon = learn ? TrainingEpsilon() : config_.policy.epsilon_min;
  Decision d = SelectAction(candidates, policy_, context, observation.admissible, epsilon, rng_);

  StepRecord s;
  s.episode = current_.episode;
  s.step = static_cast<int>(current_.steps.size());
  s.facts = std::move(parsed.facts);
  s.types = std::move(parsed.types);
  s.observation = context;
  s.admissible = observation.admissible;
  s.action = d.action;
  s.action_atom = parser_.ActionAtom(d.action);
  s.provenance = d.provenance;
  pending_ = std::move(s);
  pending_decision_ = d;
  return d;
}

void Agent::Feedback(double reward) {
  if (!pending_) throw ContractError("Feedback() without a pending action");
  pending_->reward = reward;
  history_.push_back(pending_->action);
  if (pending_->provenance.symbolic() && reward <= 0) failed_symbolic_.insert(pending_->action);
  if (config_.log_decisions) {
    decision_log_.push_back({current_.episode, pending_->step, *pending_decision_, reward});
  }
  current_.steps.push_back(std::move(*pending_));
  pending_.reset();
  pending_decision_.reset();
}

EpisodeRecord Agent::EndEpisode(bool learn) {
  if (pending_) throw ContractError("EndEpisode() with an action awaiting feedback");
  ++episode_index_;
  EpisodeRecord raw = std::move(current_);
  current_ = EpisodeRecord{};
  if (!learn) return raw;

  const EpisodeRecord shaped = ShapeRewards(raw);
  experience_.BeginEpisode();
  for (const auto& s : shaped.steps) experience_.RecordStep(s);
  PolicyUpdate(policy_, shaped);
  ++episodes_trained_;

  if (config_.symbolic) {
    for (const auto& s : shaped.steps)
      if (s.provenance.symbolic() && rules_.Find(*s.provenance.rule_id))
        UpdateConfidence(rules_, *s.provenance.rule_id, s.reward);
    RebuildRules();
    LearnExceptions(shaped);
  }
  return raw;
}

namespace {

Goal GoalOfHead(const Atom& head) {
  Goal g{head.predicate, std::nullopt};
  if (head.args.size() > 1) g.second = head.args[1];
  return g;
}

}  // namespace

Example Agent::Lift(const Example& e) const {
  return config_.gen.mode == GenMode::kNone ? e : WithHypernyms(e, *taxonomy_, kExhaustiveLevel);
}

void Agent::RebuildRules() {
  const std::vector<IlpTask> tasks = BuildIlpTasks(experience_);
  std::vector<Rule> induced;
  for (const auto& t : tasks) {
    if (t.pos.empty()) continue;
    for (auto& r : InduceRules(t)) induced.push_back(std::move(r));
  }
  if (config_.gen.mode != GenMode::kNone) {
    for (auto& r : GetGeneralizedRules(tasks, *taxonomy_, config_.gen)) induced.push_back(std::move(r));
  }

  std::map<Goal, const IlpTask*> by_goal;
  for (const auto& t : tasks) by_goal[t.goal] = &t;
  std::map<Goal, std::vector<Example>> examples;
  auto examples_of = [&](const Goal& g) -> const std::vector<Example>& {
    auto it = examples.find(g);
    if (it != examples.end()) return it->second;
    std::vector<Example> all;
    if (auto t = by_goal.find(g); t != by_goal.end()) {
      for (const auto& e : t->second->pos) all.push_back(Lift(e));
      for (const auto& e : t->second->neg) all.push_back(Lift(e));
    }
    return examples.emplace(g, std::move(all)).first->second;
  };

  RuleStore next;
  next.set_next_id(rules_.next_id());
  // Rules seen before keep their id and statistics, and the exceptions that
  // still satisfy the coverage constraint on the grown example set.
  for (const auto& r : induced) {
    if (next.FindClause(r)) continue;
    const Rule* old = rules_.FindClause(r);
    if (!old) continue;
    Rule kept = *old;
    kept.body_naf.clear();
    kept.generalized = r.generalized;
    kept.gen_distance = r.gen_distance;
    next.AddRule(kept);
    const auto& ex = examples_of(GoalOfHead(kept.head));
    for (const Rule* e : rules_.ExceptionsOf(old->id))
      if (ExceptionCoverageHolds(kept, *e, ex)) next.AddException(old->id, e->body_pos);
  }
  for (const auto& r : induced)
    if (!next.FindClause(r)) next.AddRule(r);
  // Earlier defaults that ILP no longer emits stay while they still cover a
  // positive example; their failures are handled by exceptions.
  for (const auto& old : rules_.rules()) {
    if (next.FindClause(old) || next.Find(old.id)) continue;
    const Goal goal = GoalOfHead(old.head);
    auto t = by_goal.find(goal);
    if (t == by_goal.end()) continue;
    const bool covers = std::any_of(t->second->pos.begin(), t->second->pos.end(),
                                    [&](const Example& e) { return RuleCoversExample(old, Lift(e)); });
    if (!covers) continue;
    Rule kept = old;
    kept.body_naf.clear();
    next.AddRule(kept);
    const auto& ex = examples_of(goal);
    for (const Rule* e : rules_.ExceptionsOf(old.id))
      if (ExceptionCoverageHolds(kept, *e, ex)) next.AddException(old.id, e->body_pos);
  }
  rules_ = std::move(next);
}

void Agent::LearnExceptions(const EpisodeRecord& shaped) {
  auto lift = [&](const Example& e) { return Lift(e); };
  std::map<Goal, IlpTask> tasks;
  for (const auto& s : shaped.steps) {
    if (!s.provenance.symbolic() || s.reward > 0) continue;
    const Rule* rule = rules_.Find(*s.provenance.rule_id);
    if (!rule) continue;
    auto failure = ExampleFromStep(s);
    if (!failure) continue;
    const Goal goal = GoalOfHead(*s.action_atom);

    auto it = tasks.find(goal);
    if (it == tasks.end()) {
      auto task = BuildIlpTask(experience_, goal);
      if (!task) continue;
      for (auto& e : task->pos) e = lift(e);
      for (auto& e : task->neg) e = lift(e);
      it = tasks.emplace(goal, std::move(*task)).first;
    }
    const IlpTask& task = it->second;
    std::vector<Example> successes;
    for (const auto& e : task.pos)
      if (RuleCoversExample(*rule, e)) successes.push_back(e);
    std::vector<Example> all = task.pos;
    all.insert(all.end(), task.neg.begin(), task.neg.end());
    LearnException(rules_, rule->id, lift(*failure), successes, all);
  }
}

}  // namespace nsrl
