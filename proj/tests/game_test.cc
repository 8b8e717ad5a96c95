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

#include "nsrl/game.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nsrl/error.h"
#include "test_util.h"

namespace nsrl {
namespace {

bool Has(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

GameState Kitchen(bool fridge_open, bool holding) {
  GameState st;
  st.rooms = {Room{"kitchen", {}}};
  st.receptacles = {Receptacle{"fridge", ReceptacleKind::kContainer, 0, fridge_open},
                    Receptacle{"counter", ReceptacleKind::kSupporter, 0, false}};
  GameObject apple;
  apple.lemma = "apple";
  apple.goal = "fridge";
  apple.location.kind = holding ? ObjectLocation::Kind::kInventory : ObjectLocation::Kind::kFloor;
  st.objects = {apple};
  st.max_score = 1;
  return st;
}

const EntitySplit& FixtureSplit() {
  static const EntitySplit kSplit =
      MakeSplit(testing::FixtureWorld().catalog, testing::Fixture(), 1);
  return kSplit;
}

GameStart Start(Difficulty d, SplitKind s, uint64_t seed) {
  const World& w = testing::FixtureWorld();
  return NewGame(w.catalog, w.taxonomy, FixtureSplit(), GameConfig{d, s, seed, 50});
}

TEST(GameTest, AdmissibleRules) {
  auto open_held = AdmissibleActions(Kitchen(true, true));
  EXPECT_TRUE(Has(open_held, "insert apple into fridge"));
  EXPECT_TRUE(Has(open_held, "put apple on counter"));
  auto closed = AdmissibleActions(Kitchen(false, true));
  EXPECT_TRUE(Has(closed, "open fridge"));
  EXPECT_FALSE(Has(closed, "insert apple into fridge"));
  auto empty_hands = AdmissibleActions(Kitchen(true, false));
  EXPECT_TRUE(std::none_of(empty_hands.begin(), empty_hands.end(), [](const std::string& a) {
    return a.starts_with("insert") || a.starts_with("put");
  }));
  EXPECT_TRUE(std::is_sorted(open_held.begin(), open_held.end()));
}

TEST(GameTest, StepRewardsGoalPlacement) {
  auto r = Step(Kitchen(true, true), "insert apple into fridge");
  EXPECT_EQ(r.observation.reward_last, 1.0);
  EXPECT_TRUE(r.observation.done);
  EXPECT_EQ(r.state.score, r.state.max_score);
  EXPECT_EQ(r.state.NormalizedScore(), 1.0);
}

TEST(GameTest, LookOnlyAdvancesClock) {
  GameState st = Kitchen(false, false);
  auto r = Step(st, "look");
  EXPECT_EQ(r.observation.reward_last, 0.0);
  EXPECT_EQ(r.state.steps, 1);
  r.state.steps = 0;
  EXPECT_EQ(Render(r.state, 0).text, Render(st, 0).text);
}

TEST(GameTest, InadmissibleActionNamed) {
  try {
    Step(Kitchen(false, true), "insert apple into fridge");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("insert apple into fridge"), std::string::npos);
  }
}

TEST(GameTest, DeterministicWorlds) {
  auto a = Start(Difficulty::kEasy, SplitKind::kIn, 7);
  auto b = Start(Difficulty::kEasy, SplitKind::kIn, 7);
  EXPECT_EQ(a.observation.text, b.observation.text);
  EXPECT_EQ(a.observation.admissible, b.observation.admissible);
}

TEST(GameTest, DifficultyShapes) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto e = Start(Difficulty::kEasy, SplitKind::kIn, seed).state;
    EXPECT_EQ(e.rooms.size(), 1u);
    EXPECT_GE(e.objects.size(), 1u);
    EXPECT_LE(e.objects.size(), 3u);
    auto m = Start(Difficulty::kMedium, SplitKind::kOut, seed).state;
    EXPECT_GE(m.rooms.size(), 1u);
    EXPECT_LE(m.rooms.size(), 2u);
    EXPECT_GE(m.objects.size(), 4u);
    EXPECT_LE(m.objects.size(), 5u);
    auto h = Start(Difficulty::kHard, SplitKind::kIn, seed).state;
    const bool many_objects = h.objects.size() >= 6 && h.objects.size() <= 7 && h.rooms.size() <= 2;
    const bool many_rooms = h.rooms.size() >= 3 && h.rooms.size() <= 4 && h.objects.size() >= 4 &&
                            h.objects.size() <= 5;
    EXPECT_TRUE(many_objects || many_rooms) << seed;
    EXPECT_EQ(h.max_score, static_cast<int>(h.objects.size()));
    for (const auto& o : h.objects) EXPECT_GE(h.FindReceptacle(o.goal), 0);
  }
}

TEST(GameTest, SplitPoolsRespected) {
  const auto& split = FixtureSplit();
  for (uint64_t seed = 0; seed < 50; ++seed) {
    for (const auto& o : Start(Difficulty::kHard, SplitKind::kOut, seed).state.objects)
      EXPECT_TRUE(Has(split.out, o.lemma)) << o.lemma;
    for (const auto& o : Start(Difficulty::kHard, SplitKind::kIn, seed).state.objects)
      EXPECT_TRUE(Has(split.in, o.lemma)) << o.lemma;
  }
}

TEST(GameTest, SplitPartitionSharesHypernyms) {
  const auto& split = FixtureSplit();
  const Taxonomy& t = testing::Fixture();
  for (const auto& o : split.out) {
    EXPECT_FALSE(Has(split.in, o));
    bool shares = false;
    for (const auto& h : t.HypernymsUpTo(o, 3))
      for (const auto& i : split.in)
        if (t.PathDistance(i, h.lemma).value_or(99) <= 3) shares = true;
    EXPECT_TRUE(shares) << o;
  }
}

// Random walks: every admissible action executes, reward totals match the
// score and replay is bit-exact.
TEST(GameTest, RandomWalkInvariants) {
  std::mt19937_64 rng(9);
  for (uint64_t seed = 0; seed < 60; ++seed) {
    auto start = Start(static_cast<Difficulty>(seed % 3), SplitKind::kIn, seed);
    GameState st = start.state;
    Observation obs = start.observation;
    std::vector<std::string> actions;
    std::vector<std::string> texts = {obs.text};
    double total = 0;
    while (!obs.done) {
      ASSERT_FALSE(obs.admissible.empty());
      const std::string a = obs.admissible[rng() % obs.admissible.size()];
      actions.push_back(a);
      auto r = Step(st, a);
      st = r.state;
      obs = r.observation;
      total += obs.reward_last;
      texts.push_back(obs.text);
    }
    EXPECT_EQ(total, st.score);
    EXPECT_GE(st.NormalizedScore(), 0.0);
    EXPECT_LE(st.NormalizedScore(), 1.0);
    GameState replay = start.state;
    for (size_t i = 0; i < actions.size(); ++i) {
      auto r = Step(replay, actions[i]);
      replay = r.state;
      ASSERT_EQ(r.observation.text, texts[i + 1]);
    }
  }
}

TEST(ParserTest, TypesFromActionTemplates) {
  Observation obs;
  obs.text = "-= kitchen =-\nYou see an open fridge.\n";
  obs.inventory_text = "You are carrying: an apple.";
  obs.admissible = {"insert apple into fridge", "look"};
  FactBase f = ParseObservation(obs);
  EXPECT_TRUE(f.Contains(Atom("apple", {"o1"})));
  EXPECT_TRUE(f.Contains(Atom("fridge", {"c1"})));
  EXPECT_TRUE(f.Contains(Atom("in_inventory", {"o1"})));
}

TEST(ParserTest, AdjectivesAndDuplicates) {
  Observation obs;
  obs.text = "-= kitchen =-\nOn the floor you see a rotten apple and a red apple.\n";
  obs.inventory_text = "You are carrying nothing.";
  obs.admissible = {"look", "take red apple", "take rotten apple"};
  ObservationParser parser;
  auto parsed = parser.Parse(obs);
  const std::string rotten = parsed.ids.at("rotten apple");
  const std::string red = parsed.ids.at("red apple");
  EXPECT_NE(rotten, red);
  EXPECT_TRUE(parsed.facts.Contains(Atom("rotten", {rotten})));
  EXPECT_TRUE(parsed.facts.Contains(Atom("apple", {rotten})));
  EXPECT_TRUE(parsed.facts.Contains(Atom("apple", {red})));
  EXPECT_EQ(parser.ActionAtom("take rotten apple"), Atom("take", {rotten}));
}

TEST(ParserTest, IdsStableWithinEpisodeAndEveryEntitySeen) {
  std::mt19937_64 rng(4);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    auto start = Start(Difficulty::kHard, SplitKind::kIn, seed);
    ObservationParser parser;
    GameState st = start.state;
    Observation obs = start.observation;
    std::map<std::string, std::string> seen;
    for (int k = 0; k < 30 && !obs.done; ++k) {
      auto parsed = parser.Parse(obs);
      for (const auto& [surface, id] : parsed.ids) {
        auto [it, inserted] = seen.emplace(surface, id);
        EXPECT_EQ(it->second, id);
      }
      for (const auto& a : obs.admissible) {
        if (a == "look" || a.starts_with("go ")) continue;
        auto atom = parser.ActionAtom(a);
        ASSERT_TRUE(atom) << a;
        EXPECT_TRUE(IsEntityId(atom->args[0])) << a;
      }
      auto r = Step(st, obs.admissible[rng() % obs.admissible.size()]);
      st = r.state;
      obs = r.observation;
    }
  }
}

TEST(GameTest, ParseEnumsRejectUnknown) {
  EXPECT_EQ(ParseDifficulty("hard"), Difficulty::kHard);
  EXPECT_EQ(ParseSplit("out"), SplitKind::kOut);
  EXPECT_THROW(ParseDifficulty("extreme"), ConfigError);
  EXPECT_THROW(ParseSplit("sideways"), ConfigError);
}

}  // namespace
}  // namespace nsrl
