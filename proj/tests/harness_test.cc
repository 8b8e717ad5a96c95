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

#include "nsrl/harness.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "nsrl/error.h"
#include "nsrl/text_util.h"
#include "test_util.h"

namespace nsrl {
namespace {

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nsrl_harness_" + name);
}

ExperimentConfig SmallConfig(Variant v) {
  ExperimentConfig c;
  c.variant = v;
  c.difficulty = Difficulty::kEasy;
  c.episodes = 8;
  c.max_steps = 20;
  c.seeds = {1, 2};
  c.test_games = 3;
  return c;
}

TEST(HarnessTest, VariantNames) {
  for (Variant v : AllVariants()) EXPECT_EQ(ParseVariant(ToString(v)), v);
  EXPECT_THROW(ParseVariant("explorer_ig9"), ConfigError);
  EXPECT_FALSE(AgentConfigFor(Variant::kTextOnly).symbolic);
  EXPECT_EQ(AgentConfigFor(Variant::kIg2).gen.max_level, 2);
  EXPECT_EQ(AgentConfigFor(Variant::kWithoutGen).gen.mode, GenMode::kNone);
}

TEST(HarnessTest, ConfigValidation) {
  ExperimentConfig c = SmallConfig(Variant::kIg3);
  c.episodes = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = SmallConfig(Variant::kIg3);
  c.seeds.clear();
  EXPECT_THROW(c.Validate(), ConfigError);
}

TEST(HarnessTest, EpisodeAccounting) {
  const World& w = testing::FixtureWorld();
  auto split = MakeSplit(w.catalog, w.taxonomy, 1);
  Agent agent(AgentConfigFor(Variant::kIg3), &w.taxonomy);
  auto r = RunEpisode(agent, w, split, GameConfig{Difficulty::kEasy, SplitKind::kIn, 3, 50}, true, 3);
  EXPECT_EQ(static_cast<int>(r.record.steps.size()), r.steps);
  EXPECT_LE(r.steps, 50);
  double total = 0;
  for (const auto& s : r.record.steps) total += s.reward;
  EXPECT_GE(r.normalized_score, 0.0);
  EXPECT_LE(r.normalized_score, 1.0);
  if (r.normalized_score == 1.0) EXPECT_GT(total, 0.0);
}

TEST(HarnessTest, EvaluationLeavesAgentUntouched) {
  const World& w = testing::FixtureWorld();
  auto split = MakeSplit(w.catalog, w.taxonomy, 1);
  Agent agent(AgentConfigFor(Variant::kIg3), &w.taxonomy);
  for (int i = 0; i < 5; ++i)
    RunEpisode(agent, w, split, GameConfig{Difficulty::kEasy, SplitKind::kIn, 10u + i, 50}, true, i);
  const RuleStore rules = agent.rules();
  const ExplorationPolicy policy = agent.policy();
  RunEpisode(agent, w, split, GameConfig{Difficulty::kEasy, SplitKind::kOut, 99, 50}, false, 99);
  EXPECT_EQ(agent.rules(), rules);
  EXPECT_TRUE(agent.policy() == policy);
}

TEST(HarnessTest, ExperimentDeterministic) {
  const World& w = testing::FixtureWorld();
  auto a = RunExperiment(SmallConfig(Variant::kIg3), w);
  auto b = RunExperiment(SmallConfig(Variant::kIg3), w);
  EXPECT_EQ(RenderReport(a, ReportFormat::kJson), RenderReport(b, ReportFormat::kJson));
  ASSERT_EQ(a.rows.size(), 2u);
  for (const auto& r : a.rows) {
    EXPECT_GE(r.score_mean, 0.0);
    EXPECT_LE(r.score_mean, 1.0);
    EXPECT_LE(r.steps_mean, 20.0);
  }
}

TEST(HarnessTest, TextOnlyMakesNoSymbolicDecisions) {
  const World& w = testing::FixtureWorld();
  ExperimentConfig c = SmallConfig(Variant::kTextOnly);
  Agent trained(AgentConfigFor(Variant::kTextOnly), &w.taxonomy);
  RunSeed(c, w, 1, &trained);
  for (const auto& s : trained.experience().steps()) EXPECT_FALSE(s.provenance.symbolic());
  EXPECT_TRUE(trained.rules().empty());
}

TEST(HarnessTest, ReportFormatsAgree) {
  MetricsReport r;
  r.rows.push_back({"explorer_ig3", "easy", "out", 1, 10, 12.5, 0, 0.8333333333333334, 0, 0.5, 0.9});
  auto from_json = ParseReportJson(RenderReport(r, ReportFormat::kJson));
  auto from_csv = ParseReportCsv(RenderReport(r, ReportFormat::kCsv));
  EXPECT_EQ(from_json, r);
  EXPECT_EQ(from_csv, from_json);
  EXPECT_NE(RenderReport(r, ReportFormat::kCsv).find(kAggregationNote), std::string::npos);
  EXPECT_THROW(ParseReportFormat("xml"), ConfigError);
}

TEST(HarnessTest, SingleSeedSdIsZero) {
  EXPECT_EQ(SampleSd({0.4}), 0.0);
  EXPECT_NEAR(SampleSd({1, 2, 3}), 1.0, 1e-12);
  EXPECT_NEAR(Mean({1, 2, 3}), 2.0, 1e-12);
}

TEST(HarnessTest, RuleFileRoundTrip) {
  RuleStore s;
  s.AddRule(ParseRule("insert(X,fridge) :- apple(X)."));
  s.AddException("r1", {Atom("rotten", {"X"})});
  Rule g = ParseRule("insert(X,fridge) :- edible_fruit(X).");
  g.generalized = true;
  g.gen_distance = 1;
  g.stats = {4, 3};
  s.AddRule(g);
  const auto path = TempPath("rules.txt");
  SaveRules(s, path);
  EXPECT_EQ(LoadRules(path), s);

  SaveRules(RuleStore{}, path);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_TRUE(first.starts_with("%"));
  EXPECT_TRUE(LoadRules(path).rules().empty());

  std::ofstream(path) << "% nsrl rules v1\ninsert(X,fridge) :- apple(X)\n";
  try {
    LoadRules(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace nsrl

namespace nsrl {
namespace {

TEST(HarnessTest, TranscriptReplays) {
  const World& w = testing::FixtureWorld();
  auto split = MakeSplit(w.catalog, w.taxonomy, 2);
  Agent agent(AgentConfigFor(Variant::kIg3), &w.taxonomy);
  const GameConfig g{Difficulty::kMedium, SplitKind::kIn, 5, 30};
  auto r = RunEpisode(agent, w, split, g, true, 5);
  const std::string text = TranscriptJson(g, r.record);
  GameState st = NewGame(w.catalog, w.taxonomy, split, g).state;
  double total = 0;
  for (auto line : SplitLines(text)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("seed").get<uint64_t>(), 5u);
    auto step = Step(st, j.at("action").get<std::string>());
    st = step.state;
    EXPECT_EQ(step.observation.reward_last, j.at("reward").get<double>());
    total += step.observation.reward_last;
  }
  EXPECT_EQ(st.NormalizedScore(), r.normalized_score);
}

}  // namespace
}  // namespace nsrl
