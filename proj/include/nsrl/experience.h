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

#ifndef NSRL_EXPERIENCE_H_
#define NSRL_EXPERIENCE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/logic.h"

namespace nsrl {

// Who chose an action: the rule engine (with the supporting rule) or the
// exploration policy.
struct Provenance {
  std::optional<std::string> rule_id;  // nullopt means neural

  static Provenance Neural() { return {}; }
  static Provenance Symbolic(std::string id) { return {std::move(id)}; }
  bool symbolic() const { return rule_id.has_value(); }
  std::string ToString() const;
  static Provenance FromString(std::string_view s);

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct StepRecord {
  int episode = -1;
  int step = -1;
  FactBase facts;
  // entity id -> type lemma for the entities in `facts`.
  std::map<std::string, std::string> types;
  std::string observation;  // context text the policy scored
  std::vector<std::string> admissible;
  std::string action;
  std::optional<Atom> action_atom;
  double reward = 0.0;
  Provenance provenance;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct EpisodeRecord {
  int episode = 0;
  std::vector<StepRecord> steps;

  double TotalReward() const;
  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

// Append-only log of every step taken, across episodes.
class ExperienceStore {
 public:
  // Opens a new episode; subsequent steps are indexed inside it.
  int BeginEpisode();
  // Appends `s`, stamping the current episode and the next step index.
  void RecordStep(StepRecord s);
  // Overwrites rewards of an already recorded episode (reward shaping).
  void ReplaceRewards(const EpisodeRecord& episode);

  const std::vector<StepRecord>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  int current_episode() const { return current_episode_; }
  EpisodeRecord Episode(int episode) const;

  // One JSON object per line: episode, step, facts, types, action, reward,
  // provenance.
  std::string ToJsonLines() const;
  static ExperienceStore FromJsonLines(std::string_view text);

 private:
  std::vector<StepRecord> steps_;
  int current_episode_ = -1;
  int next_step_ = 0;
};

// Reward given to an unrewarded `open C` that enables a later rewarded
// action on the same container C.
inline constexpr double kShapedReward = 0.5;

// Receptacle an action string operates on ("open S", "insert O into S",
// "put O on S", "take O from S"), if any.
std::optional<std::string> ActionTarget(std::string_view action);

EpisodeRecord ShapeRewards(const EpisodeRecord& episode);

}  // namespace nsrl

#endif  // NSRL_EXPERIENCE_H_
