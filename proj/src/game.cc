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

#include <algorithm>
#include <random>
#include <set>

#include "nsrl/error.h"
#include "nsrl/text_util.h"

namespace nsrl {

std::string ToString(Difficulty d) {
  switch (d) {
    case Difficulty::kEasy: return "easy";
    case Difficulty::kMedium: return "medium";
    case Difficulty::kHard: return "hard";
  }
  return "?";
}

std::string ToString(SplitKind s) { return s == SplitKind::kIn ? "in" : "out"; }

Difficulty ParseDifficulty(std::string_view s) {
  if (s == "easy") return Difficulty::kEasy;
  if (s == "medium") return Difficulty::kMedium;
  if (s == "hard") return Difficulty::kHard;
  throw ConfigError("unknown difficulty '" + std::string(s) + "'");
}

SplitKind ParseSplit(std::string_view s) {
  if (s == "in") return SplitKind::kIn;
  if (s == "out") return SplitKind::kOut;
  throw ConfigError("unknown split '" + std::string(s) + "'");
}

std::string GameObject::Surface() const {
  std::string out;
  for (const auto& f : features) out += f + " ";
  return out + lemma;
}

double GameState::NormalizedScore() const {
  return max_score == 0 ? 0.0 : static_cast<double>(score) / max_score;
}

int GameState::FindReceptacle(std::string_view lemma) const {
  for (size_t i = 0; i < receptacles.size(); ++i)
    if (receptacles[i].lemma == lemma) return static_cast<int>(i);
  return -1;
}

int GameState::FindObject(std::string_view surface) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].Surface() == surface) return static_cast<int>(i);
  return -1;
}

namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::string Opposite(const std::string& d) {
  if (d == "north") return "south";
  if (d == "south") return "north";
  if (d == "east") return "west";
  return "east";
}

}  // namespace

GameState NewGameState(const Catalog& catalog, const Taxonomy& taxonomy,
                       const EntitySplit& split, const GameConfig& config) {
  std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  int n_rooms = 1, n_objects = 1;
  switch (config.difficulty) {
    case Difficulty::kEasy:
      n_objects = Uniform(rng, 1, 3);
      break;
    case Difficulty::kMedium:
      n_rooms = Uniform(rng, 1, 2);
      n_objects = Uniform(rng, 4, 5);
      break;
    case Difficulty::kHard:
      if (Chance(rng, 0.5)) {
        n_rooms = Uniform(rng, 1, 2);
        n_objects = Uniform(rng, 6, 7);
      } else {
        n_rooms = Uniform(rng, 3, 4);
        n_objects = Uniform(rng, 4, 5);
      }
      break;
  }
  const auto& pool = config.split == SplitKind::kIn ? split.in : split.out;
  if (static_cast<int>(pool.size()) < n_objects)
    throw ConfigError("entity pool (" + ToString(config.split) + ") has " + std::to_string(pool.size()) +
                      " objects, game needs " + std::to_string(n_objects));
  if (static_cast<int>(catalog.rooms.size()) < n_rooms)
    throw ConfigError("catalog has too few rooms for " + ToString(config.difficulty));

  GameState st;
  st.max_steps = config.max_steps;

  std::vector<std::string> rooms = catalog.rooms;
  std::shuffle(rooms.begin(), rooms.end(), rng);
  for (int i = 0; i < n_rooms; ++i) st.rooms.push_back({rooms[i], {}});
  const std::vector<std::string> dirs = {"east", "north", "south", "west"};
  for (int i = 0; i + 1 < n_rooms; ++i) {
    std::vector<std::string> free;
    for (const auto& d : dirs)
      if (!st.rooms[i].exits.count(d)) free.push_back(d);
    const std::string d = free[Uniform(rng, 0, static_cast<int>(free.size()) - 1)];
    st.rooms[i].exits[d] = i + 1;
    st.rooms[i + 1].exits[Opposite(d)] = i;
  }

  std::vector<std::string> lemmas = pool;
  std::shuffle(lemmas.begin(), lemmas.end(), rng);
  lemmas.resize(n_objects);
  for (const auto& lemma : lemmas) {
    const CatalogObject* co = catalog.FindObject(lemma);
    if (!co) throw ConfigError("pool object " + lemma + " is not in the catalog");
    GameObject obj;
    obj.lemma = lemma;
    obj.goal = co->goal;
    auto variants = catalog.VariantsFor(lemma, taxonomy);
    if (!variants.empty() && Chance(rng, 0.2)) {
      const auto* v = variants[Uniform(rng, 0, static_cast<int>(variants.size()) - 1)];
      obj.features.push_back(v->adjective);
      obj.goal = v->goal;
    } else if (!co->adjectives.empty() && Chance(rng, 0.3)) {
      obj.features.push_back(co->adjectives[Uniform(rng, 0, static_cast<int>(co->adjectives.size()) - 1)]);
    }
    st.objects.push_back(std::move(obj));
  }

  auto room_index = [&](const std::string& room) {
    for (size_t i = 0; i < st.rooms.size(); ++i)
      if (st.rooms[i].lemma == room) return static_cast<int>(i);
    return -1;
  };
  auto add_receptacle = [&](const CatalogReceptacle& cr, int room) {
    st.receptacles.push_back({cr.lemma, cr.kind, room, false});
  };

  std::set<std::string> goals;
  for (const auto& o : st.objects) goals.insert(o.goal);
  for (const auto& g : goals) {
    const CatalogReceptacle* cr = catalog.FindReceptacle(g);
    int room = room_index(cr->home_room);
    if (room < 0) room = Uniform(rng, 0, n_rooms - 1);
    add_receptacle(*cr, room);
  }
  // One distractor per room, preferring receptacles that live there.
  for (int r = 0; r < n_rooms; ++r) {
    std::vector<const CatalogReceptacle*> home, other;
    for (const auto& cr : catalog.receptacles) {
      if (st.FindReceptacle(cr.lemma) >= 0) continue;
      (cr.home_room == st.rooms[r].lemma ? home : other).push_back(&cr);
    }
    auto& pick_from = home.empty() ? other : home;
    if (pick_from.empty()) continue;
    add_receptacle(*pick_from[Uniform(rng, 0, static_cast<int>(pick_from.size()) - 1)], r);
  }

  for (auto& o : st.objects) {
    const int room = Uniform(rng, 0, n_rooms - 1);
    std::vector<int> spots;
    for (size_t i = 0; i < st.receptacles.size(); ++i) {
      const auto& rc = st.receptacles[i];
      if (rc.room == room && rc.kind == ReceptacleKind::kSupporter && rc.lemma != o.goal)
        spots.push_back(static_cast<int>(i));
    }
    if (!spots.empty() && Chance(rng, 0.5)) {
      o.location = {ObjectLocation::Kind::kReceptacle, room,
                    spots[Uniform(rng, 0, static_cast<int>(spots.size()) - 1)]};
    } else {
      o.location = {ObjectLocation::Kind::kFloor, room, -1};
    }
  }
  st.max_score = static_cast<int>(st.objects.size());
  return st;
}

GameStart NewGame(const Catalog& catalog, const Taxonomy& taxonomy,
                  const EntitySplit& split, const GameConfig& config) {
  GameState st = NewGameState(catalog, taxonomy, split, config);
  Observation obs = Render(st, 0.0);
  return {std::move(st), std::move(obs)};
}

namespace {

bool Visible(const GameState& st, const GameObject& o) {
  switch (o.location.kind) {
    case ObjectLocation::Kind::kFloor:
      return o.location.room == st.agent_room;
    case ObjectLocation::Kind::kReceptacle: {
      const auto& rc = st.receptacles[o.location.receptacle];
      return rc.room == st.agent_room && (rc.kind == ReceptacleKind::kSupporter || rc.open);
    }
    case ObjectLocation::Kind::kInventory:
      return false;
  }
  return false;
}

std::string Article(const std::string& phrase) {
  return std::string("aeiou").find(phrase.front()) != std::string::npos ? "an " : "a ";
}

std::string ListPhrases(const std::vector<std::string>& phrases) {
  std::string out;
  for (size_t i = 0; i < phrases.size(); ++i) {
    if (i > 0) out += (i + 1 == phrases.size()) ? " and " : ", ";
    out += Article(phrases[i]) + phrases[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> AdmissibleActions(const GameState& st) {
  std::vector<std::string> acts;
  if (st.done()) return acts;
  acts.push_back("look");
  for (const auto& [dir, _] : st.rooms[st.agent_room].exits) acts.push_back("go " + dir);
  for (const auto& rc : st.receptacles)
    if (rc.room == st.agent_room && rc.kind == ReceptacleKind::kContainer && !rc.open)
      acts.push_back("open " + rc.lemma);
  for (const auto& o : st.objects) {
    if (o.placed || !Visible(st, o)) continue;
    if (o.location.kind == ObjectLocation::Kind::kFloor) {
      acts.push_back("take " + o.Surface());
    } else {
      acts.push_back("take " + o.Surface() + " from " + st.receptacles[o.location.receptacle].lemma);
    }
  }
  for (const auto& o : st.objects) {
    if (o.location.kind != ObjectLocation::Kind::kInventory) continue;
    for (const auto& rc : st.receptacles) {
      if (rc.room != st.agent_room) continue;
      if (rc.kind == ReceptacleKind::kSupporter) {
        acts.push_back("put " + o.Surface() + " on " + rc.lemma);
      } else if (rc.open) {
        acts.push_back("insert " + o.Surface() + " into " + rc.lemma);
      }
    }
  }
  std::sort(acts.begin(), acts.end());
  return acts;
}

Observation Render(const GameState& st, double reward_last) {
  Observation obs;
  const int here = st.agent_room;
  std::string text = "-= " + st.rooms[here].lemma + " =-\n";

  std::vector<std::string> bare;
  std::string contents;
  for (size_t i = 0; i < st.receptacles.size(); ++i) {
    const auto& rc = st.receptacles[i];
    if (rc.room != here) continue;
    std::vector<std::string> inside;
    const bool see_inside = rc.kind == ReceptacleKind::kSupporter || rc.open;
    if (see_inside) {
      for (const auto& o : st.objects)
        if (o.location.kind == ObjectLocation::Kind::kReceptacle && o.location.receptacle == static_cast<int>(i))
          inside.push_back(o.Surface());
    }
    if (inside.empty()) {
      std::string state;
      if (rc.kind == ReceptacleKind::kContainer) state = rc.open ? "open " : "closed ";
      bare.push_back(state + rc.lemma);
    } else if (rc.kind == ReceptacleKind::kSupporter) {
      contents += "On the " + rc.lemma + " you see " + ListPhrases(inside) + ".\n";
    } else {
      contents += "In the open " + rc.lemma + " you see " + ListPhrases(inside) + ".\n";
    }
  }
  if (!bare.empty()) text += "You see " + ListPhrases(bare) + ".\n";
  text += contents;
  std::vector<std::string> floor;
  for (const auto& o : st.objects)
    if (o.location.kind == ObjectLocation::Kind::kFloor && o.location.room == here) floor.push_back(o.Surface());
  if (!floor.empty()) text += "On the floor you see " + ListPhrases(floor) + ".\n";
  std::vector<std::string> exits;
  for (const auto& [dir, _] : st.rooms[here].exits) exits.push_back(dir);
  if (!exits.empty()) text += "Exits: " + Join(exits, ", ") + ".\n";
  obs.text = std::move(text);

  std::vector<std::string> held;
  for (const auto& o : st.objects)
    if (o.location.kind == ObjectLocation::Kind::kInventory) held.push_back(o.Surface());
  obs.inventory_text = held.empty() ? "You are carrying nothing." : "You are carrying: " + ListPhrases(held) + ".";

  obs.admissible = AdmissibleActions(st);
  obs.done = st.done();
  obs.reward_last = reward_last;
  return obs;
}

StepResult Step(const GameState& state, std::string_view action) {
  const auto admissible = AdmissibleActions(state);
  if (std::find(admissible.begin(), admissible.end(), action) == admissible.end())
    throw Error("inadmissible action '" + std::string(action) + "'");

  GameState st = state;
  double reward = 0.0;
  auto match = MatchTemplate(ActionTemplate::Defaults(), action);
  const std::string verb = match->tmpl->verb;
  auto object = [&]() -> GameObject& { return st.objects[st.FindObject(match->slots.at('O'))]; };

  if (verb == "go") {
    st.agent_room = st.rooms[st.agent_room].exits.at(match->slots.at('D'));
  } else if (verb == "open") {
    st.receptacles[st.FindReceptacle(match->slots.at('S'))].open = true;
  } else if (verb == "take") {
    object().location = {ObjectLocation::Kind::kInventory, -1, -1};
  } else if (verb == "insert" || verb == "put") {
    GameObject& o = object();
    const int rc = st.FindReceptacle(match->slots.at('S'));
    o.location = {ObjectLocation::Kind::kReceptacle, st.receptacles[rc].room, rc};
    if (st.receptacles[rc].lemma == o.goal) {
      o.placed = true;
      ++st.score;
      reward = 1.0;
    }
  }
  ++st.steps;
  Observation obs = Render(st, reward);
  return {std::move(st), std::move(obs)};
}

}  // namespace nsrl
