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

#include "nsrl/policy.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "nsrl/error.h"
#include "nsrl/text_util.h"

namespace nsrl {

namespace {

uint64_t Fnv1a(std::string_view s, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

const std::set<std::string, std::less<>>& StopWords() {
  static const std::set<std::string, std::less<>> kWords = {
      "a", "an", "and", "are", "carrying", "exits", "in", "on", "see", "the", "you", "-=", "=-"};
  return kWords;
}

std::string Clean(std::string_view w) {
  std::string out;
  for (char c : w) {
    if (c == '.' || c == ',' || c == ':') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::vector<std::string> ContextTokens(std::string_view context) {
  std::set<std::string> tokens;
  for (auto line : SplitLines(context)) {
    std::string_view body = Trim(line);
    if (StartsWith(body, kTriedPrefix)) continue;
    std::string prefix;
    if (StartsWith(body, "You are carrying")) {
      prefix = "inv:";
    } else if (StartsWith(body, kLastActionPrefix)) {
      prefix = "prev:";
      body.remove_prefix(kLastActionPrefix.size());
    }
    for (const auto& w : SplitWords(body)) {
      std::string t = Clean(w);
      if (t.empty() || StopWords().count(t)) continue;
      tokens.insert(prefix + t);
    }
  }
  return {tokens.begin(), tokens.end()};
}

ExplorationPolicy::ExplorationPolicy(PolicyConfig config)
    : config_(config), weights_(size_t{1} << config.hash_bits, 0.0) {}

std::vector<uint32_t> ExplorationPolicy::Features(std::string_view context,
                                                  std::string_view action) const {
  const uint64_t mask = (uint64_t{1} << config_.hash_bits) - 1;
  std::vector<uint32_t> out;
  const auto ctx = ContextTokens(context);
  const auto act = SplitWords(action);
  for (const auto& a : act) {
    const uint64_t ha = Fnv1a(a, Fnv1a("act|"));
    out.push_back(static_cast<uint32_t>(ha & mask));
    for (const auto& c : ctx) out.push_back(static_cast<uint32_t>(Fnv1a(c, ha ^ 0x5bd1e995ULL) & mask));
  }
  for (size_t i = 0; i < act.size(); ++i)
    for (size_t j = i + 1; j < act.size(); ++j)
      out.push_back(static_cast<uint32_t>(Fnv1a(act[j], Fnv1a(act[i], Fnv1a("pair|"))) & mask));
  if (!act.empty()) {
    const std::string tried = std::string(kTriedPrefix) + " " + std::string(action);
    for (auto line : SplitLines(context)) {
      if (Trim(line) == tried) {
        out.push_back(static_cast<uint32_t>(Fnv1a(act[0], Fnv1a("repeat|")) & mask));
        break;
      }
    }
  }
  return out;
}

double ExplorationPolicy::Score(std::string_view context, std::string_view action) const {
  const auto f = Features(context, action);
  if (f.empty()) return 0.0;
  double s = 0.0;
  for (auto i : f) s += weights_[i];
  return s / std::sqrt(static_cast<double>(f.size()));
}

std::string ExplorationPolicy::Choose(std::string_view context,
                                      const std::vector<std::string>& admissible,
                                      double epsilon, std::mt19937_64& rng) const {
  if (admissible.empty()) throw ContractError("no admissible action to choose from");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < epsilon) {
    return admissible[std::uniform_int_distribution<size_t>(0, admissible.size() - 1)(rng)];
  }
  std::vector<size_t> best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < admissible.size(); ++i) {
    const double s = Score(context, admissible[i]);
    if (s > best_score + 1e-12) {
      best_score = s;
      best = {i};
    } else if (std::abs(s - best_score) <= 1e-12) {
      best.push_back(i);
    }
  }
  return admissible[best[std::uniform_int_distribution<size_t>(0, best.size() - 1)(rng)]];
}

void ExplorationPolicy::Update(const EpisodeRecord& trajectory) {
  const auto& steps = trajectory.steps;
  std::vector<double> returns(steps.size());
  double g = 0.0;
  for (size_t i = steps.size(); i-- > 0;) {
    g = steps[i].reward + config_.discount * g;
    returns[i] = g;
  }
  for (size_t i = 0; i < steps.size(); ++i) {
    const auto f = Features(steps[i].observation, steps[i].action);
    if (f.empty()) continue;
    const double norm = 1.0 / std::sqrt(static_cast<double>(f.size()));
    double q = 0.0;
    for (auto k : f) q += weights_[k];
    q *= norm;
    const double err = std::clamp(returns[i] - q, -1.0, 1.0);
    if (err == 0.0) continue;
    for (auto k : f) weights_[k] += config_.learning_rate * err * norm;
  }
}

double ExplorationPolicy::EpsilonAfter(int episodes) const {
  return std::max(config_.epsilon_min, config_.epsilon0 * std::pow(config_.epsilon_decay, episodes));
}

}  // namespace nsrl
