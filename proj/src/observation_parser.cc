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

#include <algorithm>

#include "nsrl/game.h"
#include "nsrl/text_util.h"

namespace nsrl {

const std::vector<ActionTemplate>& ActionTemplate::Defaults() {
  static const std::vector<ActionTemplate> kTemplates = {
      {"look", "look", std::nullopt},
      {"go D", "go", std::nullopt},
      {"open S", "open", std::nullopt},
      {"take O from S", "take", "S"},
      {"take O", "take", std::nullopt},
      {"insert O into S", "insert", "S"},
      {"put O on S", "put", "S"},
  };
  return kTemplates;
}

namespace {

bool IsSlot(const std::string& w) { return w == "O" || w == "S" || w == "D"; }

bool MatchWords(const std::vector<std::string>& pat, size_t pi,
                const std::vector<std::string>& words, size_t wi,
                std::map<char, std::string>& slots) {
  if (pi == pat.size()) return wi == words.size();
  if (!IsSlot(pat[pi])) {
    return wi < words.size() && words[wi] == pat[pi] && MatchWords(pat, pi + 1, words, wi + 1, slots);
  }
  for (size_t end = wi + 1; end <= words.size(); ++end) {
    std::vector<std::string> span(words.begin() + wi, words.begin() + end);
    slots[pat[pi][0]] = Join(span, " ");
    if (MatchWords(pat, pi + 1, words, end, slots)) return true;
  }
  slots.erase(pat[pi][0]);
  return false;
}

struct Phrase {
  std::string surface;
  std::string lemma;
  std::vector<std::string> adjectives;
};

Phrase ParsePhrase(std::string_view text) {
  auto words = SplitWords(text);
  if (!words.empty() && (words[0] == "a" || words[0] == "an")) words.erase(words.begin());
  Phrase p;
  if (words.empty()) return p;
  p.lemma = words.back();
  p.adjectives.assign(words.begin(), words.end() - 1);
  p.surface = Join(words, " ");
  return p;
}

std::vector<Phrase> ParseList(std::string_view list) {
  std::vector<Phrase> out;
  std::string s(Trim(list));
  if (!s.empty() && s.back() == '.') s.pop_back();
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(", ", pos);
    size_t conj = s.find(" and ", pos);
    size_t cut = std::min(comma, conj);
    std::string piece = s.substr(pos, cut == std::string::npos ? std::string::npos : cut - pos);
    if (!Trim(piece).empty()) out.push_back(ParsePhrase(piece));
    if (cut == std::string::npos) break;
    pos = cut + (cut == comma ? 2 : 5);
  }
  return out;
}

}  // namespace

std::optional<TemplateMatch> MatchTemplate(const std::vector<ActionTemplate>& templates,
                                           std::string_view action) {
  const auto words = SplitWords(action);
  for (const auto& t : templates) {
    TemplateMatch m;
    m.tmpl = &t;
    if (MatchWords(SplitWords(t.pattern), 0, words, 0, m.slots)) return m;
  }
  return std::nullopt;
}

ObservationParser::ObservationParser(std::vector<ActionTemplate> templates)
    : templates_(std::move(templates)) {}

void ObservationParser::Reset() {
  ids_.clear();
  counters_.clear();
}

std::string ObservationParser::IdFor(const std::string& surface, char kind) {
  auto it = ids_.find(surface);
  if (it != ids_.end()) return it->second;
  std::string id = std::string(1, kind) + std::to_string(++counters_[kind]);
  ids_.emplace(surface, id);
  return id;
}

std::optional<Atom> ObservationParser::ActionAtom(std::string_view action) {
  auto m = MatchTemplate(templates_, action);
  if (!m || m->slots.empty()) return std::nullopt;
  const ActionTemplate& t = *m->tmpl;
  Atom atom;
  atom.predicate = t.verb;
  if (m->slots.count('O')) {
    atom.args.push_back(IdFor(m->slots.at('O'), 'o'));
  } else if (m->slots.count('S')) {
    atom.args.push_back(IdFor(m->slots.at('S'), 'c'));
  } else {
    atom.args.push_back(m->slots.at('D'));
  }
  if (t.slot2) atom.args.push_back(ParsePhrase(m->slots.at((*t.slot2)[0])).lemma);
  return atom;
}

ParsedObservation ObservationParser::Parse(const Observation& obs) {
  ParsedObservation out;
  auto object = [&](const Phrase& p) {
    std::string id = IdFor(p.surface, 'o');
    out.facts.Add(Atom(p.lemma, {id}));
    for (const auto& a : p.adjectives) out.facts.Add(Atom(a, {id}));
    out.types[id] = p.lemma;
    out.ids[p.surface] = id;
    return id;
  };
  auto receptacle = [&](const std::string& lemma) {
    std::string id = IdFor(lemma, 'c');
    out.facts.Add(Atom(lemma, {id}));
    out.types[id] = lemma;
    out.ids[lemma] = id;
    return id;
  };

  // Slot typing from the admissible actions.
  for (const auto& action : obs.admissible) {
    auto m = MatchTemplate(templates_, action);
    if (!m) continue;
    if (m->slots.count('O')) object(ParsePhrase(m->slots.at('O')));
    if (m->slots.count('S')) receptacle(m->slots.at('S'));
  }

  for (auto raw : SplitLines(obs.text)) {
    std::string_view line = Trim(raw);
    if (StartsWith(line, "-= ") && line.size() > 6) {
      std::string room(Trim(line.substr(3, line.size() - 6)));
      std::string id = IdFor(room, 'r');
      out.facts.Add(Atom(room, {id}));
      out.types[id] = room;
      out.ids[room] = id;
    } else if (StartsWith(line, "You see ")) {
      for (const auto& p : ParseList(line.substr(8))) {
        std::string id = receptacle(p.lemma);
        for (const auto& a : p.adjectives) {
          if (a == "closed") out.facts.Add(Atom(std::string(kClosed), {id}));
          if (a == "open") out.facts.Add(Atom(std::string(kIsOpen), {id}));
        }
      }
    } else if (StartsWith(line, "On the ") || StartsWith(line, "In the ")) {
      auto see = line.find(" you see ");
      if (see == std::string_view::npos) continue;
      auto holder = SplitWords(line.substr(7, see - 7));
      if (holder.empty()) continue;
      if (holder.back() != "floor") {
        std::string id = receptacle(holder.back());
        if (holder.front() == "open") out.facts.Add(Atom(std::string(kIsOpen), {id}));
      }
      for (const auto& p : ParseList(line.substr(see + 9)))
        out.facts.Add(Atom(std::string(kAtRoom), {object(p)}));
    }
  }
  std::string_view inv = obs.inventory_text;
  if (StartsWith(inv, "You are carrying: ")) {
    for (const auto& p : ParseList(inv.substr(18)))
      out.facts.Add(Atom(std::string(kInInventory), {object(p)}));
  }
  return out;
}

FactBase ParseObservation(const Observation& observation,
                          const std::vector<ActionTemplate>& templates) {
  ObservationParser parser(templates);
  return parser.Parse(observation).facts;
}

}  // namespace nsrl
