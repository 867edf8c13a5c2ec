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

#include "negscope/starsem_io.h"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "fixtures.h"
#include "negscope/errors.h"

namespace negscope {
namespace {

StarSemResult Parse(const std::string &text, Lang lang = Lang::kEn) {
  std::istringstream in(text);
  return ParseStarSem(in, lang, "sherlock");
}

std::string Row(const std::string &chapter, int sent, int index,
                const std::string &word, const std::string &triples) {
  return chapter + "\t" + std::to_string(sent) + "\t" + std::to_string(index) +
         "\t" + word + "\t" + word + "\tNN\t*" + triples + "\n";
}

TEST(StarSemTest, NoNegationMarkerKeepsSentence) {
  const std::string block = Row("ch1", 0, 0, "Yes", "\t***") +
                            Row("ch1", 0, 1, ".", "\t***") + "\n";
  const StarSemResult result = Parse(block);
  EXPECT_TRUE(result.corpus.records().empty());
  EXPECT_EQ(result.corpus.sentence_count(), 1u);
  EXPECT_TRUE(result.warnings.empty());
}

TEST(StarSemTest, OneNegationByColumnWalk) {
  const std::string block =
      Row("ch1", 3, 0, "He", "\t_\tHe\t_") + Row("ch1", 3, 1, "was", "\t_\twas\t_") +
      Row("ch1", 3, 2, "not", "\tnot\t_\t_") +
      Row("ch1", 3, 3, "there", "\t_\tthere\tthere") +
      Row("ch1", 3, 4, "today", "\t_\t_\t_") + Row("ch1", 3, 5, ".", "\t_\t_\t_");
  const StarSemResult result = Parse(block);
  ASSERT_EQ(result.corpus.records().size(), 1u);
  const NegationRecord &r = result.corpus.records()[0];
  EXPECT_EQ(r.doc_id, "ch1");
  EXPECT_EQ(r.sent_id, "3");
  EXPECT_EQ(r.lang, Lang::kEn);
  EXPECT_EQ(r.source, "sherlock");
  EXPECT_EQ(r.cue_indices, (IndexSet{2}));
  EXPECT_EQ(r.scope_indices, (IndexSet{0, 1, 3}));
}

TEST(StarSemTest, TwoTriplesBecomeTwoRecords) {
  const std::string block =
      Row("c", 1, 0, "Nobody", "\tNobody\t_\t_\t_\t_\t_") +
      Row("c", 1, 1, "came", "\t_\tcame\t_\t_\tcame\t_") +
      Row("c", 1, 2, "and", "\t_\t_\t_\t_\t_\t_") +
      Row("c", 1, 3, "never", "\t_\t_\t_\tnever\t_\t_") +
      Row("c", 1, 4, "left", "\t_\t_\t_\t_\tleft\t_") + "\n";
  const StarSemResult result = Parse(block);
  ASSERT_EQ(result.corpus.records().size(), 2u);
  std::map<IndexSet, IndexSet> by_cue;
  for (const NegationRecord &r : result.corpus.records()) {
    EXPECT_EQ(r.sent_id, "1");
    by_cue[r.cue_indices] = r.scope_indices;
  }
  EXPECT_EQ(by_cue.at({0}), (IndexSet{1}));
  EXPECT_EQ(by_cue.at({3}), (IndexSet{1, 4}));
}

TEST(StarSemTest, RaggedRowsNameTheLine) {
  const std::string block =
      Row("c", 1, 0, "No", "\tNo\t_\t_") + Row("c", 1, 1, "way", "\t_\tway");
  try {
    Parse(block);
    FAIL() << "expected FormatError";
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(StarSemTest, StructuralErrors) {
  // Token numbering must run 0..n-1.
  EXPECT_THROW(Parse(Row("c", 1, 1, "x", "\t***")), FormatError);
  // Sentence number must stay constant inside a block.
  EXPECT_THROW(Parse(Row("c", 1, 0, "x", "\t***") + Row("c", 2, 1, "y", "\t***")),
               FormatError);
  // A negation slot without any cue token.
  EXPECT_THROW(Parse(Row("c", 1, 0, "x", "\t_\tx\t_") + Row("c", 1, 1, "y", "\t_\t_\t_")),
               ValidationError);
  // The same sentence twice.
  const std::string block = Row("c", 1, 0, "x", "\t***") + "\n";
  EXPECT_THROW(Parse(block + block), ValidationError);
}

TEST(StarSemTest, AffixalCuesAreDroppedWithWarning) {
  const std::string block = Row("c", 1, 0, "It", "\t_\tIt\t_\t_\t_\t_") +
                            Row("c", 1, 1, "is", "\t_\tis\t_\t_\t_\t_") +
                            Row("c", 1, 2, "not", "\tnot\t_\t_\t_\t_\t_") +
                            Row("c", 1, 3, "impossible", "\t_\t_\t_\tim\tpossible\t_");
  const StarSemResult result = Parse(block);
  ASSERT_EQ(result.corpus.records().size(), 1u);
  EXPECT_EQ(result.corpus.records()[0].cue_indices, (IndexSet{2}));
  EXPECT_FALSE(result.warnings.empty());
}

TEST(StarSemTest, WriteMergesRecordsOfOneSentence) {
  Corpus corpus;
  NegationRecord a = testing::RecordFor(testing::MaximumScopeCase(), "d", "4");
  NegationRecord b = a;
  b.cue_indices = {13};
  b.scope_indices = {14, 15};
  corpus.AddRecord(a);
  corpus.AddRecord(b);
  std::ostringstream out;
  WriteStarSem(corpus, out);
  const std::string text = out.str();
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 6 + 6);

  const StarSemResult back = Parse(text, Lang::kDe);
  ASSERT_EQ(back.corpus.records().size(), 2u);
  EXPECT_EQ(back.corpus.records()[0].cue_indices, a.cue_indices);
  EXPECT_EQ(back.corpus.records()[0].scope_indices, a.scope_indices);
  EXPECT_EQ(back.corpus.records()[1].cue_indices, b.cue_indices);
  EXPECT_EQ(back.corpus.records()[1].scope_indices, b.scope_indices);
}

TEST(StarSemTest, EmptyCorpusWritesNothing) {
  std::ostringstream out;
  WriteStarSem(Corpus{}, out);
  EXPECT_EQ(out.str(), "");
}

TEST(StarSemTest, UnwritableTokensAreRejected) {
  Corpus corpus;
  NegationRecord record = testing::RecordFor(testing::InlineCitationCase());
  record.tokens[1] = "_";
  corpus.AddRecord(record);
  std::ostringstream out;
  EXPECT_THROW(WriteStarSem(corpus, out), ConsistencyError);
}

TEST(StarSemTest, RoundTripPreservesIndexSets) {
  testing::CorpusGenerator gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus corpus = gen.Make(false, false);
    std::ostringstream out;
    WriteStarSem(corpus, out);
    const StarSemResult back = Parse(out.str());
    EXPECT_EQ(back.corpus.sentence_count(), corpus.sentence_count());
    ASSERT_EQ(back.corpus.records().size(), corpus.records().size());
    for (const NegationRecord &record : corpus.records()) {
      const std::vector<std::size_t> found =
          back.corpus.RecordsOf(record.doc_id, record.sent_id);
      bool matched = false;
      for (std::size_t i : found) {
        const NegationRecord &other = back.corpus.records()[i];
        if (other.cue_indices == record.cue_indices) {
          EXPECT_EQ(other.scope_indices, record.scope_indices);
          EXPECT_EQ(other.tokens, record.tokens);
          matched = true;
        }
      }
      EXPECT_TRUE(matched) << record.Key();
    }
  }
}

}  // namespace
}  // namespace negscope
