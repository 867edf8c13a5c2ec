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

#include "negscope/canonical_io.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.h"
#include "negscope/errors.h"

namespace negscope {
namespace {

Corpus Read(const std::string &text) {
  std::istringstream in(text);
  return ReadCanonical(in);
}

constexpr char kLine[] =
    R"({"doc_id":"d1","sent_id":"s1","lang":"de","source":"court",)"
    R"("tokens":["a","b","c","d","e","nicht","g","h","i"],)"
    R"("cue_indices":[5],"scope_indices":[0,1,2,3,4,6,7,8]})";

TEST(CanonicalIoTest, EmptyStream) {
  const Corpus corpus = Read("");
  EXPECT_TRUE(corpus.records().empty());
  EXPECT_EQ(WriteCanonicalString(corpus), "");
}

TEST(CanonicalIoTest, ReadsOneRecordFieldByField) {
  const Corpus corpus = Read(std::string(kLine) + "\n");
  ASSERT_EQ(corpus.records().size(), 1u);
  const NegationRecord &r = corpus.records()[0];
  EXPECT_EQ(r.doc_id, "d1");
  EXPECT_EQ(r.sent_id, "s1");
  EXPECT_EQ(r.lang, Lang::kDe);
  EXPECT_EQ(r.source, "court");
  EXPECT_EQ(r.tokens.size(), 9u);
  EXPECT_EQ(r.cue_indices, (IndexSet{5}));
  EXPECT_EQ(r.scope_indices, (IndexSet{0, 1, 2, 3, 4, 6, 7, 8}));
  EXPECT_FALSE(r.split.has_value());
  EXPECT_FALSE(r.pred_scope_indices.has_value());
}

TEST(CanonicalIoTest, WritesFieldsInSchemaOrder) {
  EXPECT_EQ(WriteCanonicalString(Read(kLine)), std::string(kLine) + "\n");
  const std::string with_optional =
      R"({"doc_id":"d","sent_id":"1","lang":"fr","source":"s",)"
      R"("tokens":["non","x"],"cue_indices":[0],"scope_indices":[1],)"
      R"("split":"validation","pred_scope_indices":[]})"
      "\n";
  EXPECT_EQ(WriteCanonicalString(Read(with_optional)), with_optional);
}

TEST(CanonicalIoTest, CueScopeOverlapIsValidationError) {
  const std::string line =
      R"({"doc_id":"d","sent_id":"1","lang":"de","source":"s",)"
      R"("tokens":["a","nicht"],"cue_indices":[1],"scope_indices":[0,1]})";
  try {
    Read("\n" + line);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("cue/scope overlap"), std::string::npos);
    EXPECT_EQ(e.line(), 2u);
  }
}

struct BadLine {
  std::string name;
  std::string text;
  std::string field;
};

void PrintTo(const BadLine &bad, std::ostream *os) { *os << bad.name; }

class CanonicalFormatErrorTest : public ::testing::TestWithParam<BadLine> {};

TEST_P(CanonicalFormatErrorTest, NamesLineAndField) {
  try {
    Read(std::string(kLine) + "\n" + GetParam().text + "\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.field(), GetParam().field);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, CanonicalFormatErrorTest,
    ::testing::Values(
        BadLine{"NotJson", "{not json", ""},
        BadLine{"NotObject", R"(["array"])", ""},
        BadLine{"MissingScope", R"({"doc_id":"d","sent_id":"2","lang":"de","source":"s",)"
                R"("tokens":["a"],"cue_indices":[0]})",
                "scope_indices"},
        BadLine{"UnknownLang", R"({"doc_id":"d","sent_id":"2","lang":"xx","source":"s",)"
                R"("tokens":["a"],"cue_indices":[0],"scope_indices":[]})",
                "lang"},
        BadLine{"StringIndex", R"({"doc_id":"d","sent_id":"2","lang":"de","source":"s",)"
                R"("tokens":["a"],"cue_indices":["0"],"scope_indices":[]})",
                "cue_indices"},
        BadLine{"UnknownSplit", R"({"doc_id":"d","sent_id":"2","lang":"de","source":"s",)"
                R"("tokens":["a"],"cue_indices":[0],"scope_indices":[],)"
                R"("split":"dev"})",
                "split"},
        BadLine{"UnknownField", R"({"doc_id":"d","sent_id":"2","lang":"de","source":"s",)"
                R"("tokens":["a"],"cue_indices":[0],"scope_indices":[],)"
                R"("extra":1})",
                "extra"},
        BadLine{"NumericDocId", R"({"doc_id":7,"sent_id":"2","lang":"de","source":"s",)"
                R"("tokens":["a"],"cue_indices":[0],"scope_indices":[]})",
                "doc_id"}),
    [](const ::testing::TestParamInfo<BadLine> &info) { return info.param.name; });

TEST(CanonicalIoTest, RejectsInvalidIndexSets) {
  for (const char *indices : {"[1,0]", "[0,0]", "[5]", "[-1]"}) {
    const std::string line =
        std::string(R"({"doc_id":"d","sent_id":"1","lang":"de","source":"s",)"
                    R"("tokens":["a","b"],"cue_indices":)") +
        indices + R"(,"scope_indices":[]})";
    EXPECT_THROW(Read(line), ValidationError) << indices;
  }
}

TEST(CanonicalIoTest, RejectsDuplicateKeyAndTokenConflict) {
  EXPECT_THROW(Read(std::string(kLine) + "\n" + kLine), ValidationError);
  const std::string other_tokens =
      R"({"doc_id":"d1","sent_id":"s1","lang":"de","source":"court",)"
      R"("tokens":["x","nicht"],"cue_indices":[1],"scope_indices":[0]})";
  EXPECT_THROW(Read(std::string(kLine) + "\n" + other_tokens),
               ConsistencyError);
}

TEST(CanonicalIoTest, NegationFreeSentencesSurvive) {
  const std::string text =
      R"({"doc_id":"d","sent_id":"1","lang":"it","source":"s",)"
      R"("tokens":["ok"],"cue_indices":[],"scope_indices":[]})"
      "\n";
  const Corpus corpus = Read(text);
  EXPECT_TRUE(corpus.records().empty());
  EXPECT_EQ(corpus.sentence_count(), 1u);
  EXPECT_EQ(WriteCanonicalString(corpus), text);
  EXPECT_THROW(Read(text + text), ValidationError);
}

TEST(CanonicalIoTest, RecordOrderDoesNotChangeBytes) {
  testing::CorpusGenerator gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Corpus corpus = gen.Make();
    std::vector<NegationRecord> records = corpus.records();
    std::shuffle(records.begin(), records.end(), gen.rng());
    Corpus permuted;
    for (const Document &document : corpus.documents()) {
      for (const Sentence &sentence : document.sentences) {
        permuted.AddSentence(document.doc_id, sentence);
      }
    }
    for (NegationRecord &record : records) permuted.AddRecord(record);
    EXPECT_EQ(WriteCanonicalString(permuted), WriteCanonicalString(corpus));
  }
}

TEST(CanonicalIoTest, RoundTripOnRandomCorpora) {
  testing::CorpusGenerator gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus corpus = gen.Make();
    const std::string bytes = WriteCanonicalString(corpus);
    const Corpus reread = Read(bytes);
    EXPECT_EQ(reread, corpus);
    EXPECT_EQ(WriteCanonicalString(reread), bytes);
  }
}

TEST(CorpusTest, SubsetAndSplits) {
  testing::CorpusGenerator gen(5);
  Corpus corpus = gen.Make(false);
  const std::string first = corpus.documents().front().doc_id;
  corpus.SetSplit(first, Split::kTest);
  for (const NegationRecord &record : corpus.records()) {
    if (record.doc_id == first) EXPECT_EQ(record.split, Split::kTest);
  }
  const Corpus subset = corpus.Subset({first});
  ASSERT_EQ(subset.documents().size(), 1u);
  EXPECT_EQ(subset.documents()[0].doc_id, first);
  EXPECT_THROW(corpus.SetSplit("missing", Split::kTrain), Error);
}

TEST(CorpusTest, SetPredictionValidates) {
  Corpus corpus;
  corpus.AddRecord(testing::RecordFor(testing::InlineCitationCase()));
  corpus.SetPrediction(0, {1, 2});
  EXPECT_EQ(corpus.records()[0].pred_scope_indices, (IndexSet{1, 2}));
  EXPECT_THROW(corpus.SetPrediction(0, {3}), ValidationError);
  EXPECT_THROW(corpus.SetPrediction(0, {2, 1}), ValidationError);
}

}  // namespace
}  // namespace negscope
