// Copyright 2026 The negscope Authors
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

#include "negscope/rule_resolver.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "negscope/errors.h"
#include "negscope/tokenizer.h"

namespace negscope {
namespace {

using testing::GuidelineCase;

IndexSet Resolve(const GuidelineCase &c) {
  return ResolveScope(c.tokens, c.cues, c.lang);
}

TEST(ParentheticalTest, OutermostRanges) {
  const GuidelineCase c = testing::ParentheticalCitationCase();
  EXPECT_EQ(FindParentheticals(c.tokens),
            (std::vector<IndexRange>{{13, 28}}));
  EXPECT_EQ(FindParentheticals({"(", "vgl.", "Anlage", "K9", ")"}),
            (std::vector<IndexRange>{{0, 5}}));
  EXPECT_EQ(FindParentheticals({"a", "(", "b", "(", "c", ")", ")", "d"}),
            (std::vector<IndexRange>{{1, 7}}));
  EXPECT_EQ(FindParentheticals({"a", ")", "(", "b"}),
            (std::vector<IndexRange>{{2, 4}}));
}

TEST(ClauseWindowTest, StopsAtHardBoundaries) {
  const std::vector<std::string> tokens = {"A", "b", ";", "c", "nicht", "d",
                                           ":", "e"};
  const ClauseWindow window = FindClauseWindow(tokens, {4});
  EXPECT_EQ(window.left, 3);
  EXPECT_EQ(window.right, 5);
}

TEST(ClauseWindowTest, CommasAreSoft) {
  const GuidelineCase c = testing::MaximumScopeCase();
  const ClauseWindow window = FindClauseWindow(c.tokens, c.cues);
  EXPECT_EQ(window.left, 0);
  EXPECT_EQ(window.right, 22);
}

TEST(ResolveTest, SubordinateClausesStayInScope) {
  const GuidelineCase c = testing::MaximumScopeCase();
  EXPECT_EQ(Resolve(c), c.gold_scope);
}

TEST(ResolveTest, InlineCitationIncludedLeadingConjunctionTrimmed) {
  const GuidelineCase c = testing::InlineCitationCase();
  EXPECT_EQ(Resolve(c), c.gold_scope);
}

TEST(ResolveTest, ParenthesizedCitationAndFinalPeriodExcluded) {
  const GuidelineCase c = testing::ParentheticalCitationCase();
  EXPECT_EQ(Resolve(c), c.gold_scope);
}

TEST(ResolveTest, WorksFromRawText) {
  for (const GuidelineCase &c :
       {testing::InlineCitationCase(), testing::ParentheticalCitationCase()}) {
    const std::vector<std::string> tokens = TokenSurfaces(Tokenize(c.text));
    EXPECT_EQ(ResolveScope(tokens, c.cues, c.lang), c.gold_scope) << c.text;
  }
}

TEST(ResolveTest, InitialSubjectIncluded) {
  const GuidelineCase c = testing::InitialSubjectCase();
  EXPECT_EQ(Resolve(c), c.gold_scope);
}

// Known limitation: the contrast phrase is swept into the window.
TEST(ResolveTest, ContrastInterruptedScopeIsNotRecovered) {
  const GuidelineCase c = testing::ContrastInterruptedCase();
  const IndexSet pred = Resolve(c);
  EXPECT_NE(pred, c.gold_scope);
  EXPECT_EQ(pred, testing::Concat(testing::Range(0, 12), testing::Range(14, 18)));
}

TEST(ResolveTest, ConjunctionsOnlyTrimmedBeforeCue) {
  const std::vector<std::string> tokens = {"und", "er", "kam", "nicht", "und",
                                           "ging", "."};
  EXPECT_EQ(ResolveScope(tokens, {3}, Lang::kDe), (IndexSet{1, 2, 4, 5}));
  // Languages have their own lists.
  EXPECT_EQ(ResolveScope({"che", "non", "viene"}, {1}, Lang::kIt),
            (IndexSet{2}));
  EXPECT_EQ(ResolveScope({"che", "non", "viene"}, {1}, Lang::kDe),
            (IndexSet{0, 2}));
}

TEST(ResolveTest, CueOnlySentenceHasEmptyScope) {
  EXPECT_EQ(ResolveScope({"Nein", "."}, {0}, Lang::kDe), IndexSet{});
}

TEST(ResolveTest, InvalidCuesRejected) {
  EXPECT_THROW(ResolveScope({"a"}, {}, Lang::kDe), ArgumentError);
  EXPECT_THROW(ResolveScope({"a"}, {1}, Lang::kDe), ArgumentError);
}

TEST(ResolveTest, CustomConfig) {
  ResolverConfig config;
  config.hard_boundaries = {","};
  const std::vector<std::string> tokens = {"a", ",", "b", "nicht", "c", ".",
                                           "d"};
  EXPECT_EQ(ResolveScope(tokens, {3}, Lang::kDe, config),
            (IndexSet{2, 4, 5, 6}));
}

TEST(ResolveCorpusTest, FillsPredictionsAndKeepsGold) {
  Corpus corpus;
  corpus.AddRecord(testing::RecordFor(testing::ParentheticalCitationCase(), "d", "1"));
  corpus.AddRecord(testing::RecordFor(testing::ContrastInterruptedCase(), "d", "2"));
  const Corpus resolved = ResolveCorpus(corpus);
  ASSERT_EQ(resolved.records().size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(resolved.records()[i].scope_indices,
              corpus.records()[i].scope_indices);
    ASSERT_TRUE(resolved.records()[i].pred_scope_indices.has_value());
  }
  EXPECT_EQ(*resolved.records()[0].pred_scope_indices,
            resolved.records()[0].scope_indices);
  EXPECT_NE(*resolved.records()[1].pred_scope_indices,
            resolved.records()[1].scope_indices);
}

}  // namespace
}  // namespace negscope
