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

#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nsrl/error.h"
#include "nsrl/text_util.h"

#ifndef NSRL_DATA_DIR
#define NSRL_DATA_DIR "data"
#endif

namespace nsrl {

namespace {

uint64_t SplitMix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

uint64_t Mix(uint64_t a, uint64_t b, uint64_t c = 0) {
  return SplitMix(SplitMix(SplitMix(a) ^ b) ^ c);
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double ParseDouble(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "'", 0);
  return v;
}

double MeanOfRange(const std::vector<double>& xs, size_t begin, size_t end) {
  if (begin >= end) return 0.0;
  double s = 0;
  for (size_t i = begin; i < end; ++i) s += xs[i];
  return s / static_cast<double>(end - begin);
}

}  // namespace

std::string ToString(Variant v) {
  switch (v) {
    case Variant::kTextOnly: return "text_only";
    case Variant::kWithoutGen: return "explorer_wo_gen";
    case Variant::kExhaustive: return "explorer_exhaustive";
    case Variant::kIg2: return "explorer_ig2";
    case Variant::kIg3: return "explorer_ig3";
  }
  return "?";
}

Variant ParseVariant(std::string_view s) {
  for (Variant v : AllVariants())
    if (ToString(v) == s) return v;
  throw ConfigError("unknown variant '" + std::string(s) + "'");
}

const std::vector<Variant>& AllVariants() {
  static const std::vector<Variant> kAll = {Variant::kTextOnly, Variant::kWithoutGen,
                                            Variant::kExhaustive, Variant::kIg2, Variant::kIg3};
  return kAll;
}

AgentConfig AgentConfigFor(Variant v) {
  AgentConfig c;
  switch (v) {
    case Variant::kTextOnly: c.symbolic = false; break;
    case Variant::kWithoutGen: c.gen.mode = GenMode::kNone; break;
    case Variant::kExhaustive: c.gen = {GenMode::kExhaustive, kExhaustiveLevel}; break;
    case Variant::kIg2: c.gen = {GenMode::kInformationGain, 2}; break;
    case Variant::kIg3: c.gen = {GenMode::kInformationGain, 3}; break;
  }
  return c;
}

void ExperimentConfig::Validate() const {
  if (episodes < 1) throw ConfigError("episodes must be >= 1");
  if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
  if (test_games < 1) throw ConfigError("test_games must be >= 1");
  if (seeds.empty()) throw ConfigError("at least one seed is required");
}

World World::Load(const std::filesystem::path& taxonomy_path,
                  const std::filesystem::path& catalog_path) {
  return World{Catalog::Load(catalog_path), Taxonomy::Load(taxonomy_path)};
}

std::filesystem::path World::DefaultTaxonomyPath() {
  return std::filesystem::path(NSRL_DATA_DIR) / "household.tsv";
}

std::filesystem::path World::DefaultCatalogPath() {
  return std::filesystem::path(NSRL_DATA_DIR) / "household.catalog";
}

EpisodeResult RunEpisode(Agent& agent, const World& world, const EntitySplit& split,
                         const GameConfig& game, bool learn, uint64_t seed) {
  try {
    GameStart start = NewGame(world.catalog, world.taxonomy, split, game);
    GameState state = std::move(start.state);
    Observation obs = std::move(start.observation);
    agent.BeginEpisode(seed);
    while (!obs.done && !obs.admissible.empty()) {
      Decision d = agent.Act(obs, learn);
      StepResult r = Step(state, d.action);
      state = std::move(r.state);
      obs = std::move(r.observation);
      agent.Feedback(obs.reward_last);
    }
    EpisodeResult out;
    out.record = agent.EndEpisode(learn);
    out.steps = state.steps;
    out.normalized_score = state.NormalizedScore();
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw Error("episode (game seed " + std::to_string(game.seed) + "): " + e.what());
  }
}

std::string TranscriptJson(const GameConfig& game, const EpisodeRecord& record) {
  std::string out;
  for (const auto& s : record.steps) {
    nlohmann::ordered_json j;
    j["difficulty"] = ToString(game.difficulty);
    j["split"] = ToString(game.split);
    j["seed"] = game.seed;
    j["max_steps"] = game.max_steps;
    j["episode"] = record.episode;
    j["step"] = s.step;
    j["observation"] = s.observation;
    j["action"] = s.action;
    j["reward"] = s.reward;
    j["provenance"] = s.provenance.ToString();
    out += j.dump();
    out += '\n';
  }
  return out;
}

SeedResult RunSeed(const ExperimentConfig& config, const World& world, uint64_t seed,
                   Agent* trained) {
  config.Validate();
  const EntitySplit split = MakeSplit(world.catalog, world.taxonomy, seed);
  Agent agent(AgentConfigFor(config.variant), &world.taxonomy);
  SeedResult out;
  out.seed = seed;
  for (int i = 0; i < config.episodes; ++i) {
    GameConfig g{config.difficulty, SplitKind::kIn, Mix(seed, 1, i), config.max_steps};
    out.train_scores.push_back(
        RunEpisode(agent, world, split, g, true, Mix(seed, 2, i)).normalized_score);
  }
  std::vector<SplitKind> splits;
  if (config.split) splits = {*config.split};
  else splits = {SplitKind::kIn, SplitKind::kOut};
  for (SplitKind sk : splits) {
    double steps = 0, score = 0;
    for (int j = 0; j < config.test_games; ++j) {
      const uint64_t tag = sk == SplitKind::kIn ? 3 : 4;
      GameConfig g{config.difficulty, sk, Mix(seed, tag, j), config.max_steps};
      EpisodeResult r = RunEpisode(agent, world, split, g, false, Mix(seed, tag + 2, j));
      steps += r.steps;
      score += r.normalized_score;
    }
    out.splits.push_back(sk);
    out.steps.push_back(steps / config.test_games);
    out.scores.push_back(score / config.test_games);
  }
  if (trained) *trained = std::move(agent);
  return out;
}

double Mean(const std::vector<double>& xs) { return MeanOfRange(xs, 0, xs.size()); }

double SampleSd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = Mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

MetricsReport RunExperiment(const ExperimentConfig& config, const World& world) {
  config.Validate();
  std::vector<SeedResult> results(config.seeds.size());
  std::vector<std::exception_ptr> errors(config.seeds.size());
  {
    std::vector<std::jthread> workers;
    for (size_t i = 0; i < config.seeds.size(); ++i) {
      workers.emplace_back([&, i] {
        try {
          results[i] = RunSeed(config, world, config.seeds[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  MetricsReport report;
  const size_t n_splits = results.front().splits.size();
  for (size_t k = 0; k < n_splits; ++k) {
    std::vector<double> steps, scores, first, last;
    for (const auto& r : results) {
      steps.push_back(r.steps[k]);
      scores.push_back(r.scores[k]);
      const size_t n = r.train_scores.size();
      const size_t w = std::min<size_t>(20, n);
      first.push_back(MeanOfRange(r.train_scores, 0, w));
      last.push_back(MeanOfRange(r.train_scores, n - w, n));
    }
    MetricRow row;
    row.variant = ToString(config.variant);
    row.difficulty = ToString(config.difficulty);
    row.split = ToString(results.front().splits[k]);
    row.seeds = static_cast<int>(results.size());
    row.games_per_seed = config.test_games;
    row.steps_mean = Mean(steps);
    row.steps_sd = SampleSd(steps);
    row.score_mean = Mean(scores);
    row.score_sd = SampleSd(scores);
    row.train_first20 = Mean(first);
    row.train_last20 = Mean(last);
    report.rows.push_back(row);
  }
  return report;
}

void SortRows(MetricsReport& report) {
  auto rank = [](const std::string& s, const std::vector<std::string>& order) {
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] == s) return static_cast<int>(i);
    return static_cast<int>(order.size());
  };
  static const std::vector<std::string> kDiff = {"easy", "medium", "hard"};
  static const std::vector<std::string> kSplit = {"in", "out"};
  std::vector<std::string> vars;
  for (Variant v : AllVariants()) vars.push_back(ToString(v));
  std::stable_sort(report.rows.begin(), report.rows.end(), [&](const MetricRow& a, const MetricRow& b) {
    return std::tuple(rank(a.difficulty, kDiff), rank(a.split, kSplit), rank(a.variant, vars)) <
           std::tuple(rank(b.difficulty, kDiff), rank(b.split, kSplit), rank(b.variant, vars));
  });
}

ReportFormat ParseReportFormat(std::string_view s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  throw ConfigError("unknown report format '" + std::string(s) + "' (expected csv or json)");
}

namespace {

constexpr const char* kCsvColumns =
    "variant,difficulty,split,seeds,games_per_seed,steps_mean,steps_sd,score_mean,score_sd,"
    "train_first20,train_last20";

}  // namespace

std::string RenderReport(const MetricsReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["aggregation"] = kAggregationNote;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"variant", r.variant},
                      {"difficulty", r.difficulty},
                      {"split", r.split},
                      {"seeds", r.seeds},
                      {"games_per_seed", r.games_per_seed},
                      {"steps_mean", r.steps_mean},
                      {"steps_sd", r.steps_sd},
                      {"score_mean", r.score_mean},
                      {"score_sd", r.score_sd},
                      {"train_first20", r.train_first20},
                      {"train_last20", r.train_last20}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  std::string out = "# aggregation: " + std::string(kAggregationNote) + "\n";
  out += kCsvColumns;
  out += '\n';
  for (const auto& r : report.rows) {
    out += r.variant + "," + r.difficulty + "," + r.split + "," + std::to_string(r.seeds) + "," +
           std::to_string(r.games_per_seed) + "," + FormatDouble(r.steps_mean) + "," +
           FormatDouble(r.steps_sd) + "," + FormatDouble(r.score_mean) + "," +
           FormatDouble(r.score_sd) + "," + FormatDouble(r.train_first20) + "," +
           FormatDouble(r.train_last20) + "\n";
  }
  return out;
}

MetricsReport ParseReportJson(std::string_view text) {
  MetricsReport report;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    for (const auto& r : j.at("rows")) {
      MetricRow row;
      row.variant = r.at("variant").get<std::string>();
      row.difficulty = r.at("difficulty").get<std::string>();
      row.split = r.at("split").get<std::string>();
      row.seeds = r.at("seeds").get<int>();
      row.games_per_seed = r.at("games_per_seed").get<int>();
      row.steps_mean = r.at("steps_mean").get<double>();
      row.steps_sd = r.at("steps_sd").get<double>();
      row.score_mean = r.at("score_mean").get<double>();
      row.score_sd = r.at("score_sd").get<double>();
      row.train_first20 = r.at("train_first20").get<double>();
      row.train_last20 = r.at("train_last20").get<double>();
      report.rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what(), 0);
  }
  return report;
}

MetricsReport ParseReportCsv(std::string_view text) {
  MetricsReport report;
  int line_no = 0;
  bool header = false;
  for (auto line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || StartsWith(line, "#")) continue;
    if (!header) {
      if (line != kCsvColumns) throw ParseError("unexpected csv header", line_no);
      header = true;
      continue;
    }
    auto f = Split(line, ',');
    if (f.size() != 11) throw ParseError("expected 11 fields", line_no);
    try {
      MetricRow r;
      r.variant = f[0];
      r.difficulty = f[1];
      r.split = f[2];
      r.seeds = static_cast<int>(ParseDouble(f[3]));
      r.games_per_seed = static_cast<int>(ParseDouble(f[4]));
      r.steps_mean = ParseDouble(f[5]);
      r.steps_sd = ParseDouble(f[6]);
      r.score_mean = ParseDouble(f[7]);
      r.score_sd = ParseDouble(f[8]);
      r.train_first20 = ParseDouble(f[9]);
      r.train_last20 = ParseDouble(f[10]);
      report.rows.push_back(r);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return report;
}

void SaveRules(const RuleStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << PrintRuleStore(store);
  if (!out) throw Error("write failed for " + path.string());
}

RuleStore LoadRules(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseRuleStore(ss.str());
}

}  // namespace nsrl
