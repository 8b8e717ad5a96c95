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

#ifndef NSRL_TAXONOMY_H_
#define NSRL_TAXONOMY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsrl {

struct HypernymHit {
  std::string lemma;
  int distance = 0;

  friend bool operator==(const HypernymHit&, const HypernymHit&) = default;
};

// Sense-free IS-A graph: one node per lemma, edges point from a child to
// each of its parents. Immutable once built; a DAG by construction.
class Taxonomy {
 public:
  Taxonomy() = default;

  // Parses `child<TAB>parent` lines. `#` starts a comment line. Throws
  // ParseError on malformed lines and on cycles (the message names the
  // cycle).
  static Taxonomy Parse(std::string_view source);
  static Taxonomy Load(const std::filesystem::path& path);

  // Ancestors reachable within `max_level` edges with their minimal
  // distance, sorted by (distance, lemma). Unknown lemmas yield {}.
  std::vector<HypernymHit> HypernymsUpTo(std::string_view lemma,
                                         int max_level) const;

  // Minimal number of edges from `lemma` up to `ancestor`; 0 if equal,
  // nullopt if `ancestor` is not above `lemma`.
  std::optional<int> PathDistance(std::string_view lemma,
                                  std::string_view ancestor) const;

  bool Contains(std::string_view lemma) const;
  const std::set<std::string, std::less<>>& lemmas() const { return lemmas_; }
  size_t edge_count() const;
  std::vector<std::pair<std::string, std::string>> Edges() const;

  // Canonical text form: sorted edges, one per line.
  std::string Serialize() const;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> parents_;
  std::set<std::string, std::less<>> lemmas_;
};

// Lemma naming rule shared with the rule language: [a-z0-9_]+, starting with
// a letter.
bool IsValidLemma(std::string_view s);

}  // namespace nsrl

#endif  // NSRL_TAXONOMY_H_
