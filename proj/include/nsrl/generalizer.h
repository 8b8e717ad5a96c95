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

#ifndef NSRL_GENERALIZER_H_
#define NSRL_GENERALIZER_H_

#include <map>
#include <string>
#include <vector>

#include "nsrl/experience.h"
#include "nsrl/ilp.h"
#include "nsrl/information_gain.h"
#include "nsrl/logic.h"
#include "nsrl/taxonomy.h"

namespace nsrl {

enum class GenMode { kNone, kExhaustive, kInformationGain };

struct GenConfig {
  GenMode mode = GenMode::kNone;
  int max_level = 3;  // 2 or 3; exhaustive mode always uses 3

  // Throws ConfigError unless max_level is 2 or 3.
  void Validate() const;
};

// Hypernym search depth of exhaustive generalization.
inline constexpr int kExhaustiveLevel = 3;

struct HypEvidence {
  std::map<std::string, int> hyp_pos;
  std::map<std::string, int> hyp_neg;
  // Minimal distance from any positive example's type to the hypernym.
  std::map<std::string, int> pos_distance;
};

// Counts, per hypernym within `max_level` of each example's type, how many
// examples reach it (each example counted once per hypernym).
HypEvidence ExtractHypernymPredicates(const Taxonomy& taxonomy,
                                      const std::vector<Example>& pos,
                                      const std::vector<Example>& neg,
                                      int max_level);

// Best single-hypernym body for a goal; nullopt if no hypernym of a positive
// example is a valid refinement. Ties go to the smaller distance, then the
// smaller lemma.
struct GenChoice {
  std::string hypernym;
  int distance = 0;
  double gain = kInvalidGain;
};
std::optional<GenChoice> BestGeneralization(const HypEvidence& evidence, int p0, int n0);

// Lifts stored evidence to hypernym rules, one goal at a time. In IG mode a
// goal gets the single highest-gain hypernym; in exhaustive mode every
// hypernym within distance 3 of a positive example's type. Output rules are
// generalized, carry gen_distance, and have no id. Throws ContractError for
// mode == kNone.
std::vector<Rule> GetGeneralizedRules(const ExperienceStore& store,
                                      const Taxonomy& taxonomy,
                                      const GenConfig& config);
std::vector<Rule> GetGeneralizedRules(const std::vector<IlpTask>& tasks,
                                      const Taxonomy& taxonomy,
                                      const GenConfig& config);

// Adds `h(e)` for every hypernym h within `max_level` of each typed entity.
FactBase WithHypernyms(const FactBase& facts,
                       const std::map<std::string, std::string>& types,
                       const Taxonomy& taxonomy, int max_level);
Example WithHypernyms(const Example& example, const Taxonomy& taxonomy, int max_level);

}  // namespace nsrl

#endif  // NSRL_GENERALIZER_H_
