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

// Command-line entry point: train, eval and bench subcommands.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nsrl/error.h"
#include "nsrl/harness.h"
#include "nsrl/text_util.h"

namespace {

struct Options {
  std::vector<std::string> variants = {"explorer_ig3"};
  std::vector<std::string> difficulties = {"easy"};
  std::string split = "both";
  int episodes = 100;
  int max_steps = 50;
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  int test_games = 10;
  std::string taxonomy = nsrl::World::DefaultTaxonomyPath().string();
  std::string catalog = nsrl::World::DefaultCatalogPath().string();
  std::string rules_out;
  std::string decisions_out;
  std::string experience_out;
  std::string transcript_out;
  std::string report = "json";
  std::string out;
};

void AddCommon(CLI::App* cmd, Options& o, bool multi) {
  if (multi) {
    cmd->add_option("--variant", o.variants, "agent variants")->delimiter(',');
    cmd->add_option("--difficulty", o.difficulties, "easy, medium, hard")->delimiter(',');
  } else {
    cmd->add_option("--variant", o.variants, "agent variant")->expected(1);
    cmd->add_option("--difficulty", o.difficulties, "easy, medium or hard")->expected(1);
  }
  cmd->add_option("--split", o.split, "evaluation split: in, out or both");
  cmd->add_option("--episodes", o.episodes, "training episodes per seed");
  cmd->add_option("--max-steps", o.max_steps, "step limit per game");
  cmd->add_option("--seeds", o.seeds, "comma-separated seeds")->delimiter(',');
  cmd->add_option("--test-games", o.test_games, "evaluation games per split and seed");
  cmd->add_option("--taxonomy", o.taxonomy, "hypernym edge file");
  cmd->add_option("--catalog", o.catalog, "entity catalog file");
  cmd->add_option("--report", o.report, "csv or json");
  cmd->add_option("--out", o.out, "report path (default stdout)");
}

nsrl::ExperimentConfig MakeConfig(const Options& o, const std::string& variant,
                                  const std::string& difficulty) {
  nsrl::ExperimentConfig c;
  c.variant = nsrl::ParseVariant(variant);
  c.difficulty = nsrl::ParseDifficulty(difficulty);
  if (o.split != "both") c.split = nsrl::ParseSplit(o.split);
  c.episodes = o.episodes;
  c.max_steps = o.max_steps;
  c.seeds = o.seeds;
  c.test_games = o.test_games;
  c.Validate();
  return c;
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw nsrl::Error("cannot write " + path);
  f << text;
}

int Train(const Options& o) {
  const auto fmt = nsrl::ParseReportFormat(o.report);
  auto cfg = MakeConfig(o, o.variants.at(0), o.difficulties.at(0));
  const auto world = nsrl::World::Load(o.taxonomy, o.catalog);
  nsrl::AgentConfig ac = nsrl::AgentConfigFor(cfg.variant);
  ac.log_decisions = !o.decisions_out.empty();
  nsrl::Agent agent(ac, &world.taxonomy);
  const uint64_t seed = cfg.seeds.front();
  const auto split = nsrl::MakeSplit(world.catalog, world.taxonomy, seed);
  std::vector<double> scores;
  std::string transcript;
  for (int i = 0; i < cfg.episodes; ++i) {
    nsrl::GameConfig g{cfg.difficulty, nsrl::SplitKind::kIn, seed * 1000003ULL + i, cfg.max_steps};
    auto r = nsrl::RunEpisode(agent, world, split, g, true, seed * 7919ULL + i);
    scores.push_back(r.normalized_score);
    if (!o.transcript_out.empty()) transcript += nsrl::TranscriptJson(g, r.record);
  }
  if (!o.rules_out.empty()) nsrl::SaveRules(agent.rules(), o.rules_out);
  if (!o.experience_out.empty()) Emit(agent.experience().ToJsonLines(), o.experience_out);
  if (!o.transcript_out.empty()) Emit(transcript, o.transcript_out);
  if (!o.decisions_out.empty()) Emit(nsrl::DecisionLogJson(agent.decision_log()), o.decisions_out);
  if (fmt == nsrl::ReportFormat::kJson) {
    std::string s = "{\n  \"variant\": \"" + nsrl::ToString(cfg.variant) + "\",\n  \"train_scores\": [";
    for (size_t i = 0; i < scores.size(); ++i) s += (i ? ", " : "") + std::to_string(scores[i]);
    Emit(s + "]\n}\n", o.out);
  } else {
    std::string s = "episode,normalized_score\n";
    for (size_t i = 0; i < scores.size(); ++i) s += std::to_string(i) + "," + std::to_string(scores[i]) + "\n";
    Emit(s, o.out);
  }
  return 0;
}

int Evaluate(const Options& o) {
  const auto fmt = nsrl::ParseReportFormat(o.report);
  std::vector<nsrl::ExperimentConfig> configs;
  for (const auto& d : o.difficulties)
    for (const auto& v : o.variants) configs.push_back(MakeConfig(o, v, d));
  const auto world = nsrl::World::Load(o.taxonomy, o.catalog);
  nsrl::MetricsReport report;
  for (const auto& c : configs) {
    auto r = nsrl::RunExperiment(c, world);
    report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
  }
  nsrl::SortRows(report);
  Emit(nsrl::RenderReport(report, fmt), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neuro-symbolic agent for text-based games"};
  app.require_subcommand(1);
  Options train_o, eval_o, bench_o;
  bench_o.variants.clear();
  for (auto v : nsrl::AllVariants()) bench_o.variants.push_back(nsrl::ToString(v));
  bench_o.difficulties = {"easy", "medium", "hard"};

  auto* train = app.add_subcommand("train", "train one agent and write its rules");
  AddCommon(train, train_o, false);
  train->add_option("--rules-out", train_o.rules_out, "rule file to write");
  train->add_option("--decisions-out", train_o.decisions_out, "decision log (JSON lines)");
  train->add_option("--experience-out", train_o.experience_out, "experience log (JSON lines)");
  train->add_option("--transcript-out", train_o.transcript_out, "episode transcripts (JSON lines)");
  auto* eval = app.add_subcommand("eval", "train and evaluate one variant over seeds");
  AddCommon(eval, eval_o, false);
  auto* bench = app.add_subcommand("bench", "evaluate a grid of variants and difficulties");
  AddCommon(bench, bench_o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (*train) return Train(train_o);
    if (*eval) return Evaluate(eval_o);
    return Evaluate(bench_o);
  } catch (const nsrl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
