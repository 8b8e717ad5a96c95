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

#ifndef NSRL_GAME_H_
#define NSRL_GAME_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/catalog.h"
#include "nsrl/logic.h"
#include "nsrl/taxonomy.h"

namespace nsrl {

enum class Difficulty { kEasy, kMedium, kHard };
enum class SplitKind { kIn, kOut };

std::string ToString(Difficulty d);
std::string ToString(SplitKind s);
Difficulty ParseDifficulty(std::string_view s);  // throws ConfigError
SplitKind ParseSplit(std::string_view s);        // throws ConfigError

struct GameConfig {
  Difficulty difficulty = Difficulty::kEasy;
  SplitKind split = SplitKind::kIn;
  uint64_t seed = 0;
  int max_steps = 50;
};

struct Room {
  std::string lemma;
  std::map<std::string, int> exits;  // direction -> room index
};

struct Receptacle {
  std::string lemma;
  ReceptacleKind kind = ReceptacleKind::kSupporter;
  int room = 0;
  bool open = false;  // meaningful for containers only
};

struct ObjectLocation {
  enum class Kind { kFloor, kReceptacle, kInventory };
  Kind kind = Kind::kFloor;
  int room = 0;        // for kFloor
  int receptacle = -1; // for kReceptacle
};

struct GameObject {
  std::string lemma;
  std::vector<std::string> features;
  std::string goal;  // receptacle lemma
  ObjectLocation location;
  bool placed = false;

  // "rotten apple"; unique within a world.
  std::string Surface() const;
};

struct GameState {
  std::vector<Room> rooms;
  std::vector<Receptacle> receptacles;
  std::vector<GameObject> objects;
  int agent_room = 0;
  int steps = 0;
  int score = 0;
  int max_score = 0;
  int max_steps = 50;

  bool done() const { return score == max_score || steps >= max_steps; }
  double NormalizedScore() const;
  int FindReceptacle(std::string_view lemma) const;
  int FindObject(std::string_view surface) const;
};

struct Observation {
  std::string text;
  std::string inventory_text;
  std::vector<std::string> admissible;
  bool done = false;
  double reward_last = 0.0;
};

// Builds a world from `split`'s in or out pool according to `config`.
// Same (catalog, taxonomy, split, config) always yields the same world.
// Throws ConfigError when the pool cannot fill the difficulty.
GameState NewGameState(const Catalog& catalog, const Taxonomy& taxonomy,
                       const EntitySplit& split, const GameConfig& config);

struct GameStart {
  GameState state;
  Observation observation;
};
GameStart NewGame(const Catalog& catalog, const Taxonomy& taxonomy,
                  const EntitySplit& split, const GameConfig& config);

// Every action executable now, sorted. Empty once the game is over.
std::vector<std::string> AdmissibleActions(const GameState& state);

Observation Render(const GameState& state, double reward_last);

struct StepResult {
  GameState state;
  Observation observation;
};
// Throws Error naming the action if it is not admissible.
StepResult Step(const GameState& state, std::string_view action);

// "insert O into S": O is an object slot, S a receptacle, D a direction.
struct ActionTemplate {
  std::string pattern;
  std::string verb;                    // predicate name of the action atom
  std::optional<std::string> slot2;    // slot whose lemma becomes arg 2

  static const std::vector<ActionTemplate>& Defaults();
};

struct TemplateMatch {
  const ActionTemplate* tmpl = nullptr;
  std::map<char, std::string> slots;  // slot letter -> phrase
};
std::optional<TemplateMatch> MatchTemplate(const std::vector<ActionTemplate>& templates,
                                           std::string_view action);

struct ParsedObservation {
  FactBase facts;
  std::map<std::string, std::string> types;  // entity id -> type lemma
  std::map<std::string, std::string> ids;    // surface phrase -> entity id
};

// Inverse of the simulator's text templates. Entity ids stay stable across
// observations parsed by the same instance; call Reset() between episodes.
class ObservationParser {
 public:
  explicit ObservationParser(std::vector<ActionTemplate> templates = ActionTemplate::Defaults());

  ParsedObservation Parse(const Observation& observation);
  // Atom for an action string under the current id assignment, e.g.
  // "insert red apple into fridge" -> insert(o1,fridge).
  std::optional<Atom> ActionAtom(std::string_view action);
  void Reset();

 private:
  std::string IdFor(const std::string& surface, char kind);

  std::vector<ActionTemplate> templates_;
  std::map<std::string, std::string> ids_;
  std::map<char, int> counters_;
};

// One-shot parse with a fresh parser.
FactBase ParseObservation(const Observation& observation,
                          const std::vector<ActionTemplate>& templates = ActionTemplate::Defaults());

// Context predicates the parser emits besides type and adjective facts.
inline constexpr std::string_view kInInventory = "in_inventory";
inline constexpr std::string_view kAtRoom = "at_room";
inline constexpr std::string_view kClosed = "closed";
inline constexpr std::string_view kIsOpen = "is_open";

}  // namespace nsrl

#endif  // NSRL_GAME_H_
