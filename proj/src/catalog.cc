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

#include "nsrl/catalog.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "nsrl/error.h"
#include "nsrl/text_util.h"

namespace nsrl {

Catalog Catalog::Parse(std::string_view text) {
  Catalog c;
  int line_no = 0;
  for (auto raw : SplitLines(text)) {
    ++line_no;
    auto line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cols = Split(line, '\t');
    auto need = [&](size_t lo, size_t hi) {
      if (cols.size() < lo || cols.size() > hi)
        throw ParseError("wrong number of columns for '" + cols[0] + "'", line_no);
      for (size_t i = 1; i < cols.size(); ++i) {
        for (const auto& part : Split(cols[i], ','))
          if (!IsValidLemma(part)) throw ParseError("invalid name '" + part + "'", line_no);
      }
    };
    const std::string& kind = cols[0];
    if (kind == "room") {
      need(2, 2);
      c.rooms.push_back(cols[1]);
    } else if (kind == "receptacle") {
      need(4, 4);
      CatalogReceptacle r{cols[1], ReceptacleKind::kSupporter, cols[3]};
      if (cols[2] == "container") {
        r.kind = ReceptacleKind::kContainer;
      } else if (cols[2] != "supporter") {
        throw ParseError("receptacle kind must be container or supporter", line_no);
      }
      c.receptacles.push_back(std::move(r));
    } else if (kind == "object") {
      need(3, 4);
      CatalogObject o{cols[1], cols[2], {}};
      if (cols.size() == 4) o.adjectives = Split(cols[3], ',');
      c.objects.push_back(std::move(o));
    } else if (kind == "variant") {
      need(4, 4);
      c.variants.push_back({cols[1], cols[2], cols[3]});
    } else {
      throw ParseError("unknown entry kind '" + kind + "'", line_no);
    }
  }
  for (const auto& r : c.receptacles)
    if (std::find(c.rooms.begin(), c.rooms.end(), r.home_room) == c.rooms.end())
      throw ParseError("receptacle " + r.lemma + " has unknown room " + r.home_room, 0);
  for (const auto& o : c.objects)
    if (!c.FindReceptacle(o.goal)) throw ParseError("object " + o.lemma + " has unknown goal " + o.goal, 0);
  for (const auto& v : c.variants)
    if (!c.FindReceptacle(v.goal)) throw ParseError("variant " + v.adjective + " has unknown goal " + v.goal, 0);
  return c;
}

Catalog Catalog::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

const CatalogObject* Catalog::FindObject(std::string_view lemma) const {
  for (const auto& o : objects)
    if (o.lemma == lemma) return &o;
  return nullptr;
}

const CatalogReceptacle* Catalog::FindReceptacle(std::string_view lemma) const {
  for (const auto& r : receptacles)
    if (r.lemma == lemma) return &r;
  return nullptr;
}

std::vector<const CatalogVariant*> Catalog::VariantsFor(std::string_view lemma,
                                                        const Taxonomy& taxonomy) const {
  std::vector<const CatalogVariant*> out;
  for (const auto& v : variants)
    if (taxonomy.PathDistance(lemma, v.hypernym).value_or(0) > 0) out.push_back(&v);
  return out;
}

EntitySplit MakeSplit(const Catalog& catalog, const Taxonomy& taxonomy, uint64_t seed) {
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> groups;
  for (const auto& o : catalog.objects) {
    auto hyps = taxonomy.HypernymsUpTo(o.lemma, 1);
    std::string parent = hyps.empty() ? std::string() : hyps.front().lemma;
    groups[{o.goal, parent}].push_back(o.lemma);
  }
  EntitySplit split;
  std::mt19937_64 rng(seed);
  for (auto& [key, lemmas] : groups) {
    std::sort(lemmas.begin(), lemmas.end());
    if (lemmas.size() < 2 || key.second.empty()) {
      split.in.insert(split.in.end(), lemmas.begin(), lemmas.end());
      split.warnings.push_back("group " + key.first + "/" + (key.second.empty() ? "?" : key.second) +
                               " has no held-out partner; kept in training pool");
      continue;
    }
    std::shuffle(lemmas.begin(), lemmas.end(), rng);
    const size_t n_out = std::max<size_t>(1, lemmas.size() / 3);
    split.out.insert(split.out.end(), lemmas.begin(), lemmas.begin() + n_out);
    split.in.insert(split.in.end(), lemmas.begin() + n_out, lemmas.end());
  }
  std::sort(split.in.begin(), split.in.end());
  std::sort(split.out.begin(), split.out.end());
  return split;
}

}  // namespace nsrl
