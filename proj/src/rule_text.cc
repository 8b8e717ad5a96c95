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
#include <charconv>

#include "nsrl/error.h"
#include "nsrl/logic.h"
#include "nsrl/taxonomy.h"
#include "nsrl/text_util.h"

namespace nsrl {

namespace {

bool IsTerm(std::string_view t) {
  if (t.empty()) return false;
  return std::all_of(t.begin(), t.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// Splits on commas that are not inside parentheses.
std::vector<std::string_view> SplitTopLevel(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(Trim(s.substr(start)));
  return out;
}

struct Line {
  std::string_view clause;
  std::string_view comment;
};

Line SplitComment(std::string_view raw) {
  auto pct = raw.find('%');
  if (pct == std::string_view::npos) return {Trim(raw), {}};
  return {Trim(raw.substr(0, pct)), Trim(raw.substr(pct + 1))};
}

int ParseInt(std::string_view s, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'", line);
  return v;
}

void ApplyMetadata(std::string_view comment, Rule& rule, int line) {
  bool saw_gen = false;
  for (const auto& word : SplitWords(comment)) {
    std::string_view w = word;
    if (w == "gen") {
      saw_gen = true;
    } else if (StartsWith(w, "id=")) {
      rule.id = std::string(w.substr(3));
    } else if (StartsWith(w, "uses=")) {
      rule.stats.uses = ParseInt(w.substr(5), line);
    } else if (StartsWith(w, "pos=")) {
      rule.stats.positive_uses = ParseInt(w.substr(4), line);
    } else if (StartsWith(w, "d=") && saw_gen) {
      rule.gen_distance = ParseInt(w.substr(2), line);
    }
  }
  rule.generalized = saw_gen;
}

Rule ParseClause(std::string_view clause, int line) {
  if (clause.empty() || clause.back() != '.') throw ParseError("clause must end with '.'", line);
  clause = Trim(clause.substr(0, clause.size() - 1));
  Rule rule;
  auto arrow = clause.find(":-");
  std::string_view head = Trim(clause.substr(0, arrow));
  try {
    rule.head = ParseAtom(head);
    if (arrow != std::string_view::npos) {
      std::string_view body = Trim(clause.substr(arrow + 2));
      if (!body.empty()) {
        for (auto lit : SplitTopLevel(body)) {
          if (StartsWith(lit, "not ")) {
            rule.body_naf.push_back(ParseAtom(Trim(lit.substr(4))));
          } else {
            rule.body_pos.push_back(ParseAtom(lit));
          }
        }
      }
    }
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
  return rule;
}

std::string Metadata(const Rule& r) {
  std::string out = "% id=" + r.id + " uses=" + std::to_string(r.stats.uses) +
                    " pos=" + std::to_string(r.stats.positive_uses);
  if (r.generalized) {
    out += " gen";
    if (r.gen_distance) out += " d=" + std::to_string(*r.gen_distance);
  }
  return out;
}

}  // namespace

Atom ParseAtom(std::string_view text) {
  text = Trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw ParseError("expected pred(args) but got '" + std::string(text) + "'", 0);
  Atom atom;
  atom.predicate = std::string(Trim(text.substr(0, open)));
  if (!IsValidLemma(atom.predicate))
    throw ParseError("invalid predicate name '" + atom.predicate + "'", 0);
  for (auto arg : SplitTopLevel(text.substr(open + 1, text.size() - open - 2))) {
    if (!IsTerm(arg)) throw ParseError("invalid term '" + std::string(arg) + "'", 0);
    atom.args.emplace_back(arg);
  }
  if (atom.args.empty() || atom.args.size() > 2)
    throw ParseError("arity must be 1 or 2 in '" + std::string(text) + "'", 0);
  return atom;
}

Rule ParseRule(std::string_view text) {
  Line l = SplitComment(text);
  Rule r = ParseClause(l.clause, 0);
  ApplyMetadata(l.comment, r, 0);
  return r;
}

FactBase ParseFacts(std::string_view text) {
  FactBase fb;
  int line_no = 0;
  for (auto raw : SplitLines(text)) {
    ++line_no;
    Line l = SplitComment(raw);
    if (l.clause.empty()) continue;
    Rule r = ParseClause(l.clause, line_no);
    if (!r.body_pos.empty() || !r.body_naf.empty() || !r.head.IsGround())
      throw ParseError("expected a ground fact", line_no);
    fb.Add(r.head);
  }
  return fb;
}

std::string PrintRuleStore(const RuleStore& store) {
  std::string out = "% nsrl rules v1\n";
  for (const auto& r : store.rules()) out += r.ToString() + "  " + Metadata(r) + "\n";
  for (const auto& e : store.exceptions()) out += e.ToString() + "  % id=" + e.id + "\n";
  out += "% next_id=" + std::to_string(store.next_id()) + "\n";
  return out;
}

RuleStore ParseRuleStore(std::string_view text) {
  RuleStore store;
  int line_no = 0;
  int max_seen = 0;
  std::vector<size_t> unnamed;
  for (auto raw : SplitLines(text)) {
    ++line_no;
    Line l = SplitComment(raw);
    if (l.clause.empty()) {
      if (StartsWith(l.comment, "next_id=")) store.next_id_ = ParseInt(l.comment.substr(8), line_no);
      continue;
    }
    Rule r = ParseClause(l.clause, line_no);
    ApplyMetadata(l.comment, r, line_no);
    if (StartsWith(r.head.predicate, "ab_")) {
      if (r.id.empty()) r.id = r.head.predicate.substr(3) + "_e" + std::to_string(line_no);
      store.exceptions_.push_back(std::move(r));
    } else {
      if (r.id.empty()) unnamed.push_back(store.rules_.size());
      if (r.id.size() > 1 && r.id[0] == 'r') {
        int n = 0;
        auto [p, ec] = std::from_chars(r.id.data() + 1, r.id.data() + r.id.size(), n);
        if (ec == std::errc() && p == r.id.data() + r.id.size()) max_seen = std::max(max_seen, n);
      }
      store.rules_.push_back(std::move(r));
    }
  }
  store.next_id_ = std::max(store.next_id_, max_seen + 1);
  for (size_t i : unnamed) store.rules_[i].id = "r" + std::to_string(store.next_id_++);
  try {
    store.Validate();
  } catch (const ContractError& e) {
    throw ParseError(e.what(), 0);
  }
  return store;
}

}  // namespace nsrl
