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

#ifndef NSRL_HARNESS_H_
#define NSRL_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/agent.h"
#include "nsrl/catalog.h"
#include "nsrl/game.h"
#include "nsrl/taxonomy.h"

namespace nsrl {

enum class Variant { kTextOnly, kWithoutGen, kExhaustive, kIg2, kIg3 };

std::string ToString(Variant v);
Variant ParseVariant(std::string_view s);  // throws ConfigError
const std::vector<Variant>& AllVariants();
AgentConfig AgentConfigFor(Variant v);

struct ExperimentConfig {
  Variant variant = Variant::kIg3;
  Difficulty difficulty = Difficulty::kEasy;
  std::optional<SplitKind> split;  // evaluation split; nullopt evaluates both
  int episodes = 100;
  int max_steps = 50;
  std::vector<uint64_t> seeds = {1};
  int test_games = 10;

  // Throws ConfigError on non-positive counts or an empty seed list.
  void Validate() const;
};

// Catalog and taxonomy shared by every game of an experiment.
struct World {
  Catalog catalog;
  Taxonomy taxonomy;

  static World Load(const std::filesystem::path& taxonomy_path,
                    const std::filesystem::path& catalog_path);
  static std::filesystem::path DefaultTaxonomyPath();
  static std::filesystem::path DefaultCatalogPath();
};

struct EpisodeResult {
  EpisodeRecord record;
  int steps = 0;
  double normalized_score = 0.0;
};

// Plays one game to completion. `seed` drives the agent's random choices.
// Errors from the simulator or the agent are rethrown with the game seed.
EpisodeResult RunEpisode(Agent& agent, const World& world, const EntitySplit& split,
                         const GameConfig& game, bool learn, uint64_t seed);

// One JSON object per step with the game config, so the episode can be
// replayed by feeding the actions back into NewGame/Step.
std::string TranscriptJson(const GameConfig& game, const EpisodeRecord& record);

struct SeedResult {
  uint64_t seed = 0;
  std::vector<double> train_scores;
  // Per evaluated split: mean steps and mean normalized score over test games.
  std::vector<SplitKind> splits;
  std::vector<double> steps;
  std::vector<double> scores;
};

// Trains a fresh agent on in-pool games, then evaluates it without learning.
// `trained` (if given) receives the agent after training.
SeedResult RunSeed(const ExperimentConfig& config, const World& world, uint64_t seed,
                   Agent* trained = nullptr);

struct MetricRow {
  std::string variant;
  std::string difficulty;
  std::string split;
  int seeds = 0;
  int games_per_seed = 0;
  double steps_mean = 0, steps_sd = 0;
  double score_mean = 0, score_sd = 0;
  double train_first20 = 0, train_last20 = 0;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct MetricsReport {
  std::vector<MetricRow> rows;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline constexpr std::string_view kAggregationNote =
    "mean and sample SD over seeds of per-seed means over test games";

// Runs every seed on its own thread and reduces in seed-list order.
MetricsReport RunExperiment(const ExperimentConfig& config, const World& world);

// Rows sorted by difficulty, split, then variant.
void SortRows(MetricsReport& report);

enum class ReportFormat { kCsv, kJson };
ReportFormat ParseReportFormat(std::string_view s);  // throws ConfigError
std::string RenderReport(const MetricsReport& report, ReportFormat format);
MetricsReport ParseReportJson(std::string_view text);
MetricsReport ParseReportCsv(std::string_view text);

double Mean(const std::vector<double>& xs);
double SampleSd(const std::vector<double>& xs);  // 0 for fewer than two values

void SaveRules(const RuleStore& store, const std::filesystem::path& path);
// Throws ParseError with the line number of a malformed clause.
RuleStore LoadRules(const std::filesystem::path& path);

}  // namespace nsrl

#endif  // NSRL_HARNESS_H_
