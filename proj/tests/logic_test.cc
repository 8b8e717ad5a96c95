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

#include "nsrl/logic.h"

#include <gtest/gtest.h>

#include <random>

#include "nsrl/error.h"
#include "oracles.h"

namespace nsrl {
namespace {

RuleStore AppleStore() {
  RuleStore s;
  s.AddRule(ParseRule("insert(X,fridge) :- apple(X)."));
  s.AddException("r1", {Atom("rotten", {"X"})});
  return s;
}

TEST(LogicTest, TermKinds) {
  EXPECT_TRUE(IsVariable("X"));
  EXPECT_FALSE(IsVariable("x"));
  EXPECT_TRUE(IsEntityId("o1"));
  EXPECT_TRUE(IsEntityId("c12"));
  EXPECT_FALSE(IsEntityId("fridge"));
  EXPECT_FALSE(IsEntityId("o"));
}

TEST(LogicTest, ParseAndPrintAtom) {
  EXPECT_EQ(ParseAtom("insert(X, fridge)").ToString(), "insert(X,fridge)");
  EXPECT_THROW(ParseAtom("p(a,b,c)"), Error);
  EXPECT_THROW(ParseAtom("p"), Error);
}

TEST(LogicTest, DeriveAbnormals) {
  RuleStore s = AppleStore();
  EXPECT_EQ(DeriveAbnormals(s, FactBase{Atom("rotten", {"o1"})}),
            (std::set<Atom>{Atom("ab_r1", {"o1"})}));
  EXPECT_TRUE(DeriveAbnormals(RuleStore{}, FactBase{Atom("rotten", {"o1"})}).empty());
  EXPECT_TRUE(DeriveAbnormals(s, FactBase{Atom("apple", {"o2"})}).empty());
}

TEST(LogicTest, CheckRuleBody) {
  RuleStore s = AppleStore();
  const Rule& r1 = *s.Find("r1");
  EXPECT_TRUE(CheckRuleBody(r1, FactBase{Atom("apple", {"o2"})}, {}, {{"X", "o2"}}));
  FactBase f{Atom("apple", {"o1"}), Atom("rotten", {"o1"})};
  EXPECT_FALSE(CheckRuleBody(r1, f, DeriveAbnormals(s, f), {{"X", "o1"}}));
  Rule empty;
  empty.head = Atom("done", {"o1"});
  EXPECT_TRUE(CheckRuleBody(empty, FactBase{}, {}, {}));
  EXPECT_THROW(CheckRuleBody(r1, f, {}, {}), ContractError);
}

TEST(LogicTest, GroundQueryRottenApple) {
  RuleStore s = AppleStore();
  FactBase f{Atom("apple", {"o1"}), Atom("rotten", {"o1"}), Atom("apple", {"o2"})};
  auto out = GroundQuery(s, f);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].head, Atom("insert", {"o2", "fridge"}));
  EXPECT_EQ(out[0].rule_id, "r1");
}

TEST(LogicTest, GroundQueryEmptyAndMultiplicity) {
  EXPECT_TRUE(GroundQuery(RuleStore{}, FactBase{Atom("apple", {"o1"})}).empty());
  RuleStore s;
  s.AddRule(ParseRule("insert(X,fridge) :- apple(X)."));
  s.AddRule(ParseRule("insert(X,fridge) :- fruit(X)."));
  auto out = GroundQuery(s, FactBase{Atom("apple", {"o2"}), Atom("fruit", {"o2"})});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].rule_id, "r1");
  EXPECT_EQ(out[1].rule_id, "r2");
}

TEST(LogicTest, StoreRejectsBadRules) {
  RuleStore s;
  EXPECT_THROW(
      {
        s.AddRule(ParseRule("insert(X,Y) :- apple(X)."));
        s.Validate();
      },
      ContractError);
  RuleStore t;
  t.AddRule(ParseRule("take(X) :- apple(X)."));
  EXPECT_EQ(t.AddRule(ParseRule("take(X) :- apple(X).")), "r1");
  EXPECT_EQ(t.rules().size(), 1u);
  EXPECT_THROW(t.AddException("r9", {Atom("rotten", {"X"})}), ContractError);
}

TEST(LogicTest, RuleTextRoundTrip) {
  RuleStore s = AppleStore();
  Rule g = ParseRule("insert(X,fridge) :- edible_fruit(X).");
  g.generalized = true;
  g.gen_distance = 1;
  g.stats = {7, 5};
  s.AddRule(g);
  const std::string text = PrintRuleStore(s);
  EXPECT_EQ(ParseRuleStore(text), s);
  EXPECT_EQ(PrintRuleStore(ParseRuleStore(text)), text);
}

TEST(LogicTest, RuleTextErrorsCarryLine) {
  try {
    ParseRuleStore("% nsrl rules v1\ntake(X) :- apple(X).\ninsert(X,fridge :- apple(X).\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(LogicTest, MatchesBottomUpOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto p = oracle::MakeRandomProgram(rng);
    ASSERT_NO_THROW(p.store.Validate());
    std::vector<std::pair<Atom, std::string>> got;
    for (const auto& d : GroundQuery(p.store, p.facts)) got.push_back({d.head, d.rule_id});
    ASSERT_EQ(got, oracle::Query(p.store, p.facts)) << PrintRuleStore(p.store) << p.facts.ToString();
  }
}

TEST(LogicTest, ExceptionsOnlyShrink) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::MakeRandomProgram(rng, 8, 6, 0);
    if (p.store.rules().empty()) continue;
    auto before = GroundQuery(p.store, p.facts);
    p.store.AddException(p.store.rules()[rng() % p.store.rules().size()].id,
                         {Atom("rotten", {"X"})});
    for (const auto& d : GroundQuery(p.store, p.facts))
      EXPECT_NE(std::find(before.begin(), before.end(), d), before.end());
  }
}

TEST(LogicTest, DeterministicOrder) {
  std::mt19937_64 rng(13);
  auto p = oracle::MakeRandomProgram(rng);
  EXPECT_EQ(GroundQuery(p.store, p.facts), GroundQuery(p.store, p.facts));
}

}  // namespace
}  // namespace nsrl
