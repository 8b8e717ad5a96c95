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

#include "nsrl/generalizer.h"

#include <algorithm>
#include <set>

#include "nsrl/error.h"

namespace nsrl {

void GenConfig::Validate() const {
  if (max_level != 2 && max_level != 3)
    throw ConfigError("hypernym level must be 2 or 3, got " + std::to_string(max_level));
}

HypEvidence ExtractHypernymPredicates(const Taxonomy& taxonomy,
                                      const std::vector<Example>& pos,
                                      const std::vector<Example>& neg,
                                      int max_level) {
  HypEvidence ev;
  for (const auto& e : pos) {
    for (const auto& hit : taxonomy.HypernymsUpTo(e.type, max_level)) {
      ++ev.hyp_pos[hit.lemma];
      auto [it, inserted] = ev.pos_distance.emplace(hit.lemma, hit.distance);
      if (!inserted) it->second = std::min(it->second, hit.distance);
    }
  }
  for (const auto& e : neg)
    for (const auto& hit : taxonomy.HypernymsUpTo(e.type, max_level)) ++ev.hyp_neg[hit.lemma];
  return ev;
}

std::optional<GenChoice> BestGeneralization(const HypEvidence& evidence, int p0, int n0) {
  std::optional<GenChoice> best;
  for (const auto& [h, p1] : evidence.hyp_pos) {
    auto nit = evidence.hyp_neg.find(h);
    const int n1 = nit == evidence.hyp_neg.end() ? 0 : nit->second;
    GenChoice c{h, evidence.pos_distance.at(h), InformationGain(p0, n0, p1, n1, p1)};
    // With no negatives every hypernym scores 0; otherwise the lift must
    // not be less pure than the bare goal.
    if (!(c.gain > 0 || (n1 == 0 && c.gain >= 0))) continue;
    if (!best || c.gain > best->gain ||
        (c.gain == best->gain && std::tie(c.distance, c.hypernym) < std::tie(best->distance, best->hypernym))) {
      best = c;
    }
  }
  return best;
}

std::vector<Rule> GetGeneralizedRules(const ExperienceStore& store,
                                      const Taxonomy& taxonomy,
                                      const GenConfig& config) {
  return GetGeneralizedRules(BuildIlpTasks(store), taxonomy, config);
}

std::vector<Rule> GetGeneralizedRules(const std::vector<IlpTask>& tasks,
                                      const Taxonomy& taxonomy,
                                      const GenConfig& config) {
  if (config.mode == GenMode::kNone) throw ContractError("generalization is disabled");
  config.Validate();
  std::vector<Rule> out;
  for (const auto& t : tasks) {
    const IlpTask* task = &t;
    const Goal& goal = t.goal;
    if (task->pos.empty()) continue;

    auto make_rule = [&](const std::string& hypernym, int distance) {
      Rule r;
      r.head = goal.Head();
      r.body_pos.push_back(Atom(hypernym, {"X"}));
      r.generalized = true;
      r.gen_distance = distance;
      return r;
    };

    if (config.mode == GenMode::kExhaustive) {
      HypEvidence ev = ExtractHypernymPredicates(taxonomy, task->pos, task->neg, kExhaustiveLevel);
      for (const auto& [h, d] : ev.pos_distance) out.push_back(make_rule(h, d));
    } else {
      HypEvidence ev = ExtractHypernymPredicates(taxonomy, task->pos, task->neg, config.max_level);
      auto best = BestGeneralization(ev, static_cast<int>(task->pos.size()),
                                     static_cast<int>(task->neg.size()));
      if (best) out.push_back(make_rule(best->hypernym, best->distance));
    }
  }
  return out;
}

FactBase WithHypernyms(const FactBase& facts,
                       const std::map<std::string, std::string>& types,
                       const Taxonomy& taxonomy, int max_level) {
  FactBase out = facts;
  for (const auto& [entity, type] : types)
    for (const auto& hit : taxonomy.HypernymsUpTo(type, max_level))
      out.Add(Atom(hit.lemma, {entity}));
  return out;
}

Example WithHypernyms(const Example& example, const Taxonomy& taxonomy, int max_level) {
  Example out = example;
  for (const auto& hit : taxonomy.HypernymsUpTo(example.type, max_level))
    out.features.push_back(hit.lemma);
  std::sort(out.features.begin(), out.features.end());
  out.features.erase(std::unique(out.features.begin(), out.features.end()), out.features.end());
  return out;
}

}  // namespace nsrl
