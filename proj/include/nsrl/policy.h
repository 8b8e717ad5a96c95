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

#ifndef NSRL_POLICY_H_
#define NSRL_POLICY_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/experience.h"

namespace nsrl {

struct PolicyConfig {
  int hash_bits = 18;
  double learning_rate = 0.2;
  double discount = 0.9;
  double epsilon0 = 1.0;
  double epsilon_decay = 0.95;
  double epsilon_min = 0.05;
};

// Linear action scorer over hashed (context token, action token) and
// (action token, action token) pairs,
// trained by Monte-Carlo regression on discounted returns and acting
// epsilon-greedily. Any scorer with this interface can replace it.
class ExplorationPolicy {
 public:
  explicit ExplorationPolicy(PolicyConfig config = {});

  // Context string: observation text plus inventory line.
  double Score(std::string_view context, std::string_view action) const;

  // Epsilon-greedy choice; ties among best scores are broken by `rng`.
  // Throws ContractError if `admissible` is empty.
  std::string Choose(std::string_view context, const std::vector<std::string>& admissible,
                     double epsilon, std::mt19937_64& rng) const;

  // Moves the score of each (context, action) of the trajectory toward its
  // discounted return; the error is clipped to [-1, 1] so every step is
  // bounded by the learning rate.
  void Update(const EpisodeRecord& trajectory);

  // max(epsilon_min, epsilon0 * decay^episodes)
  double EpsilonAfter(int episodes) const;

  const PolicyConfig& config() const { return config_; }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const ExplorationPolicy& a, const ExplorationPolicy& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<uint32_t> Features(std::string_view context, std::string_view action) const;

  PolicyConfig config_;
  std::vector<double> weights_;
};

// Context line naming the previous action of the episode.
inline constexpr std::string_view kLastActionPrefix = "Last action:";
// Context line naming an action already taken in the episode; scoring such
// an action again adds a per-verb repeat feature.
inline constexpr std::string_view kTriedPrefix = "Tried:";

// Lowercased content words of an observation; inventory words get an `inv:`
// prefix and words of the last-action line a `prev:` prefix.
std::vector<std::string> ContextTokens(std::string_view context);

}  // namespace nsrl

#endif  // NSRL_POLICY_H_
