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

#include "nsrl/experience.h"

#include "json.hpp"
#include "nsrl/error.h"
#include "nsrl/text_util.h"

namespace nsrl {

std::string Provenance::ToString() const {
  return rule_id ? "symbolic:" + *rule_id : "neural";
}

Provenance Provenance::FromString(std::string_view s) {
  if (s == "neural") return Neural();
  if (StartsWith(s, "symbolic:")) return Symbolic(std::string(s.substr(9)));
  throw ParseError("bad provenance '" + std::string(s) + "'", 0);
}

double EpisodeRecord::TotalReward() const {
  double t = 0;
  for (const auto& s : steps) t += s.reward;
  return t;
}

int ExperienceStore::BeginEpisode() {
  ++current_episode_;
  next_step_ = 0;
  return current_episode_;
}

void ExperienceStore::RecordStep(StepRecord s) {
  if (current_episode_ < 0) BeginEpisode();
  s.episode = current_episode_;
  s.step = next_step_++;
  steps_.push_back(std::move(s));
}

void ExperienceStore::ReplaceRewards(const EpisodeRecord& episode) {
  for (const auto& shaped : episode.steps) {
    for (auto& s : steps_) {
      if (s.episode == shaped.episode && s.step == shaped.step) s.reward = shaped.reward;
    }
  }
}

EpisodeRecord ExperienceStore::Episode(int episode) const {
  EpisodeRecord rec{episode, {}};
  for (const auto& s : steps_)
    if (s.episode == episode) rec.steps.push_back(s);
  return rec;
}

std::string ExperienceStore::ToJsonLines() const {
  std::string out;
  for (const auto& s : steps_) {
    nlohmann::json j;
    j["episode"] = s.episode;
    j["step"] = s.step;
    std::vector<std::string> facts;
    for (const auto& f : s.facts) facts.push_back(f.ToString());
    j["facts"] = facts;
    j["types"] = s.types;
    j["observation"] = s.observation;
    j["admissible"] = s.admissible;
    j["action"] = s.action;
    j["action_atom"] = s.action_atom ? s.action_atom->ToString() : "";
    j["reward"] = s.reward;
    j["provenance"] = s.provenance.ToString();
    out += j.dump() + "\n";
  }
  return out;
}

ExperienceStore ExperienceStore::FromJsonLines(std::string_view text) {
  ExperienceStore store;
  int line_no = 0;
  for (auto line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      StepRecord s;
      s.episode = j.at("episode").get<int>();
      s.step = j.at("step").get<int>();
      for (const auto& f : j.at("facts")) s.facts.Add(ParseAtom(f.get<std::string>()));
      s.types = j.value("types", std::map<std::string, std::string>{});
      s.observation = j.value("observation", "");
      s.admissible = j.value("admissible", std::vector<std::string>{});
      s.action = j.at("action").get<std::string>();
      auto atom = j.value("action_atom", "");
      if (!atom.empty()) s.action_atom = ParseAtom(atom);
      s.reward = j.at("reward").get<double>();
      s.provenance = Provenance::FromString(j.at("provenance").get<std::string>());
      store.current_episode_ = std::max(store.current_episode_, s.episode);
      store.steps_.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  int next = 0;
  for (const auto& s : store.steps_)
    if (s.episode == store.current_episode_) next = std::max(next, s.step + 1);
  store.next_step_ = next;
  return store;
}

std::optional<std::string> ActionTarget(std::string_view action) {
  if (StartsWith(action, "open ")) return std::string(Trim(action.substr(5)));
  for (std::string_view sep : {" into ", " on ", " from "}) {
    auto at = action.rfind(sep);
    if (at != std::string_view::npos) return std::string(Trim(action.substr(at + sep.size())));
  }
  return std::nullopt;
}

EpisodeRecord ShapeRewards(const EpisodeRecord& episode) {
  EpisodeRecord out = episode;
  for (size_t i = 0; i < out.steps.size(); ++i) {
    auto& s = out.steps[i];
    if (s.reward != 0.0 || !StartsWith(s.action, "open ")) continue;
    auto container = ActionTarget(s.action);
    for (size_t j = i + 1; j < episode.steps.size(); ++j) {
      const auto& later = episode.steps[j];
      if (later.reward > 0 && !StartsWith(later.action, "open ") &&
          ActionTarget(later.action) == container) {
        s.reward = kShapedReward;
        break;
      }
    }
  }
  return out;
}

}  // namespace nsrl
