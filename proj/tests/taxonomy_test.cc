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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nsrl/error.h"
#include "test_util.h"

namespace nsrl {
namespace {

TEST(TaxonomyTest, SingleEdge) {
  Taxonomy t = Taxonomy::Parse("apple\tedible_fruit\n");
  EXPECT_EQ(t.edge_count(), 1u);
  EXPECT_EQ(t.lemmas().size(), 2u);
}

TEST(TaxonomyTest, EmptyInput) {
  Taxonomy t = Taxonomy::Parse("");
  EXPECT_EQ(t.edge_count(), 0u);
  EXPECT_TRUE(t.lemmas().empty());
}

TEST(TaxonomyTest, DuplicateEdgesCollapse) {
  Taxonomy t = Taxonomy::Parse("# comment\napple\tfruit\napple\tfruit\n");
  EXPECT_EQ(t.edge_count(), 1u);
}

TEST(TaxonomyTest, TwoCycleRejected) {
  try {
    Taxonomy::Parse("a\tb\nb\ta\n");
    FAIL() << "expected cycle error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
  }
}

TEST(TaxonomyTest, MalformedLineNamesLine) {
  try {
    Taxonomy::Parse("apple\tfruit\nno_tab_here\n");
    FAIL() << "expected parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(TaxonomyTest, FixtureWalks) {
  const Taxonomy& t = testing::Fixture();
  EXPECT_EQ(t.HypernymsUpTo("apple", 1), (std::vector<HypernymHit>{{"edible_fruit", 1}}));
  auto shirt = t.HypernymsUpTo("shirt", 2);
  EXPECT_NE(std::find(shirt.begin(), shirt.end(), HypernymHit{"clothing", 1}), shirt.end());
  EXPECT_NE(std::find(shirt.begin(), shirt.end(), HypernymHit{"wearable", 2}), shirt.end());
  EXPECT_TRUE(t.HypernymsUpTo("unobtainium", 3).empty());
  EXPECT_EQ(t.PathDistance("apple", "apple"), 0);
  EXPECT_EQ(t.PathDistance("apple", "edible_fruit"), 1);
  EXPECT_EQ(t.PathDistance("apple", "clothing"), std::nullopt);
}

TEST(TaxonomyTest, RequiredChainsPresent) {
  const Taxonomy& t = testing::Fixture();
  EXPECT_EQ(t.PathDistance("apple", "substance"), 4);
  EXPECT_EQ(t.PathDistance("orange", "edible_fruit"), 1);
  EXPECT_EQ(t.PathDistance("banana", "edible_fruit"), 1);
  EXPECT_EQ(t.PathDistance("shirt", "artifact"), 3);
  EXPECT_EQ(t.PathDistance("pants", "clothing"), 1);
  EXPECT_EQ(t.PathDistance("wardrobe", "artifact"), 2);
  EXPECT_EQ(t.PathDistance("fridge", "artifact"), 2);
  EXPECT_EQ(t.PathDistance("sugar", "food"), 2);
}

TEST(TaxonomyTest, DiamondUsesMinimalDistance) {
  Taxonomy t = Taxonomy::Parse("a\tb\nb\tc\nc\td\na\td\n");
  EXPECT_EQ(t.PathDistance("a", "d"), 1);
  EXPECT_EQ(t.HypernymsUpTo("a", 3),
            (std::vector<HypernymHit>{{"b", 1}, {"d", 1}, {"c", 2}}));
}

TEST(TaxonomyTest, ClosureMonotoneAndDistanceConsistent) {
  const Taxonomy& t = testing::Fixture();
  for (const auto& lemma : t.lemmas()) {
    for (int k = 1; k < 5; ++k) {
      auto small = t.HypernymsUpTo(lemma, k);
      auto big = t.HypernymsUpTo(lemma, k + 1);
      for (const auto& h : small)
        EXPECT_NE(std::find(big.begin(), big.end(), h), big.end()) << lemma << " " << h.lemma;
    }
    for (const auto& h : t.HypernymsUpTo(lemma, 6)) {
      EXPECT_EQ(t.PathDistance(lemma, h.lemma), h.distance);
      auto below = t.HypernymsUpTo(lemma, h.distance - 1);
      EXPECT_TRUE(std::none_of(below.begin(), below.end(),
                               [&](const HypernymHit& x) { return x.lemma == h.lemma; }));
    }
  }
}

TEST(TaxonomyTest, SerializeRoundTrip) {
  const Taxonomy& t = testing::Fixture();
  Taxonomy again = Taxonomy::Parse(t.Serialize());
  EXPECT_EQ(again.Edges(), t.Edges());
  EXPECT_EQ(again.Serialize(), t.Serialize());
}

TEST(TaxonomyTest, RandomDagsRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    const int n = 2 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 4 == 0) text += "n" + std::to_string(i) + "\tn" + std::to_string(j) + "\n";
    Taxonomy t = Taxonomy::Parse(text);
    EXPECT_EQ(Taxonomy::Parse(t.Serialize()).Edges(), t.Edges());
  }
}

}  // namespace
}  // namespace nsrl
