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

#include "nsrl/taxonomy.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "nsrl/error.h"
#include "nsrl/text_util.h"

namespace nsrl {

bool IsValidLemma(std::string_view s) {
  if (s.empty() || s.front() < 'a' || s.front() > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

// Returns the first cycle found as a closed path, or {} if acyclic.
std::vector<std::string> FindCycle(
    const std::map<std::string, std::set<std::string>, std::less<>>& parents) {
  enum class Mark { kNew, kActive, kDone };
  std::map<std::string, Mark, std::less<>> mark;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;

  auto visit = [&](auto&& self, const std::string& node) -> bool {
    mark[node] = Mark::kActive;
    stack.push_back(node);
    if (auto it = parents.find(node); it != parents.end()) {
      for (const auto& p : it->second) {
        Mark m = mark.count(p) ? mark[p] : Mark::kNew;
        if (m == Mark::kActive) {
          auto start = std::find(stack.begin(), stack.end(), p);
          cycle.assign(start, stack.end());
          cycle.push_back(p);
          return true;
        }
        if (m == Mark::kNew && self(self, p)) return true;
      }
    }
    stack.pop_back();
    mark[node] = Mark::kDone;
    return false;
  };

  for (const auto& [child, _] : parents) {
    if (!mark.count(child) && visit(visit, child)) return cycle;
  }
  return {};
}

}  // namespace

Taxonomy Taxonomy::Parse(std::string_view source) {
  Taxonomy t;
  int line_no = 0;
  for (std::string_view raw : SplitLines(source)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw ParseError("expected exactly one tab-separated child/parent pair", line_no);
    }
    std::string child(Trim(line.substr(0, tab)));
    std::string parent(Trim(line.substr(tab + 1)));
    if (!IsValidLemma(child) || !IsValidLemma(parent)) {
      throw ParseError("invalid lemma in '" + std::string(line) + "'", line_no);
    }
    if (child == parent) {
      throw ParseError("cycle: " + child + " -> " + child, line_no);
    }
    t.parents_[child].insert(parent);
    t.lemmas_.insert(child);
    t.lemmas_.insert(parent);
  }
  if (auto cycle = FindCycle(t.parents_); !cycle.empty()) {
    std::string path;
    for (size_t i = 0; i < cycle.size(); ++i) path += (i ? " -> " : "") + cycle[i];
    throw ParseError("cycle: " + path, 0);
  }
  return t;
}

Taxonomy Taxonomy::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open taxonomy file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

std::vector<HypernymHit> Taxonomy::HypernymsUpTo(std::string_view lemma,
                                                 int max_level) const {
  std::vector<HypernymHit> hits;
  if (max_level < 1 || !parents_.count(lemma)) return hits;
  std::map<std::string, int, std::less<>> best;
  std::deque<std::pair<std::string, int>> queue{{std::string(lemma), 0}};
  while (!queue.empty()) {
    auto [node, d] = queue.front();
    queue.pop_front();
    if (d == max_level) continue;
    auto it = parents_.find(node);
    if (it == parents_.end()) continue;
    for (const auto& p : it->second) {
      if (best.count(p)) continue;  // BFS: first visit is minimal
      best[p] = d + 1;
      queue.emplace_back(p, d + 1);
    }
  }
  for (auto& [l, d] : best) hits.push_back({l, d});
  std::sort(hits.begin(), hits.end(), [](const HypernymHit& a, const HypernymHit& b) {
    return std::tie(a.distance, a.lemma) < std::tie(b.distance, b.lemma);
  });
  return hits;
}

std::optional<int> Taxonomy::PathDistance(std::string_view lemma,
                                          std::string_view ancestor) const {
  if (lemma == ancestor) return 0;
  std::set<std::string, std::less<>> seen;
  std::deque<std::pair<std::string, int>> queue{{std::string(lemma), 0}};
  while (!queue.empty()) {
    auto [node, d] = queue.front();
    queue.pop_front();
    auto it = parents_.find(node);
    if (it == parents_.end()) continue;
    for (const auto& p : it->second) {
      if (p == ancestor) return d + 1;
      if (seen.insert(p).second) queue.emplace_back(p, d + 1);
    }
  }
  return std::nullopt;
}

bool Taxonomy::Contains(std::string_view lemma) const {
  return lemmas_.count(lemma) > 0;
}

size_t Taxonomy::edge_count() const {
  size_t n = 0;
  for (const auto& [_, ps] : parents_) n += ps.size();
  return n;
}

std::vector<std::pair<std::string, std::string>> Taxonomy::Edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [c, ps] : parents_)
    for (const auto& p : ps) out.emplace_back(c, p);
  return out;
}

std::string Taxonomy::Serialize() const {
  std::string out;
  for (const auto& [c, p] : Edges()) out += c + "\t" + p + "\n";
  return out;
}

}  // namespace nsrl
