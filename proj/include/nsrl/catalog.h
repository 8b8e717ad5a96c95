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

#ifndef NSRL_CATALOG_H_
#define NSRL_CATALOG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsrl/taxonomy.h"

namespace nsrl {

enum class ReceptacleKind { kContainer, kSupporter };

struct CatalogReceptacle {
  std::string lemma;
  ReceptacleKind kind = ReceptacleKind::kSupporter;
  std::string home_room;
};

struct CatalogObject {
  std::string lemma;
  std::string goal;
  std::vector<std::string> adjectives;  // cosmetic, goal-neutral
};

// An adjective that sends any object below `hypernym` to `goal` instead.
struct CatalogVariant {
  std::string adjective;
  std::string goal;
  std::string hypernym;
};

// Objects with their commonsense locations, plus rooms and receptacles.
struct Catalog {
  std::vector<std::string> rooms;
  std::vector<CatalogReceptacle> receptacles;
  std::vector<CatalogObject> objects;
  std::vector<CatalogVariant> variants;

  // Tab separated `room|receptacle|object|variant` lines; see
  // data/household.catalog. Throws ParseError with the line number.
  static Catalog Parse(std::string_view text);
  static Catalog Load(const std::filesystem::path& path);

  const CatalogObject* FindObject(std::string_view lemma) const;
  const CatalogReceptacle* FindReceptacle(std::string_view lemma) const;
  // Variants applicable to `lemma` under `taxonomy`.
  std::vector<const CatalogVariant*> VariantsFor(std::string_view lemma,
                                                 const Taxonomy& taxonomy) const;
};

// Object lemmas available for training (in) and for out-of-distribution
// testing (out).
struct EntitySplit {
  std::vector<std::string> in;
  std::vector<std::string> out;
  std::vector<std::string> warnings;
};

// Groups objects by (goal receptacle, nearest hypernym) and moves roughly a
// third of each group (at least one lemma) to `out`, chosen by `seed`.
// Single-lemma groups stay in `in` and produce a warning.
EntitySplit MakeSplit(const Catalog& catalog, const Taxonomy& taxonomy, uint64_t seed);

}  // namespace nsrl

#endif  // NSRL_CATALOG_H_
