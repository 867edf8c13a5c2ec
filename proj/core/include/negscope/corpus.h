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

#ifndef NEGSCOPE_CORPUS_H_
#define NEGSCOPE_CORPUS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "negscope/record.h"

namespace negscope {

// A sentence as it appears in its document, whether or not it is negated.
struct Sentence {
  std::string sent_id;
  Lang lang = Lang::kDe;
  std::string source;
  std::vector<std::string> tokens;
  std::optional<Split> split;

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;

  friend bool operator==(const Document &, const Document &) = default;
};

// Negation records plus the document structure they came from. Negation-free
// sentences live only in the document structure; they are needed for
// sentence totals. Documents and sentences keep first-insertion order.
//
// Invariants enforced on insertion:
//  - every record is valid (ValidateRecord) and refers to a sentence of
//    `documents()` with identical tokens, language, source and split;
//  - (doc_id, sent_id, cue_indices) is unique.
class Corpus {
 public:
  // Adds a sentence. Re-adding an identical sentence is a no-op; a sentence
  // that conflicts with the stored one throws ConsistencyError.
  void AddSentence(const std::string &doc_id, Sentence sentence,
                   std::size_t line = 0);

  // Validates and adds a record, creating its sentence if needed.
  void AddRecord(NegationRecord record, std::size_t line = 0);

  const std::vector<NegationRecord> &records() const { return records_; }
  const std::vector<Document> &documents() const { return documents_; }

  std::size_t sentence_count() const { return sentence_location_.size(); }

  const Document *FindDocument(const std::string &doc_id) const;
  const Sentence *FindSentence(const std::string &doc_id,
                               const std::string &sent_id) const;

  // Indices into records() for one sentence, ordered by cue indices.
  std::vector<std::size_t> RecordsOf(const std::string &doc_id,
                                     const std::string &sent_id) const;

  // Replaces the predicted scope of records()[index]; validates the result.
  void SetPrediction(std::size_t index, IndexSet pred_scope);

  // Stamps a split on every sentence and record of a document.
  void SetSplit(const std::string &doc_id, Split split);

  // A corpus holding only the listed documents, in the original order.
  Corpus Subset(const std::set<std::string> &doc_ids) const;

  // Equal document structure and equal records irrespective of record order.
  friend bool operator==(const Corpus &a, const Corpus &b);

 private:
  using SentenceKey = std::pair<std::string, std::string>;

  Sentence &MutableSentence(const SentenceKey &key);

  std::vector<NegationRecord> records_;
  std::vector<Document> documents_;
  std::map<std::string, std::size_t> document_index_;
  std::map<SentenceKey, std::pair<std::size_t, std::size_t>>
      sentence_location_;
  std::map<SentenceKey, std::vector<std::size_t>> sentence_records_;
};

// Sentence view of a record.
Sentence SentenceOf(const NegationRecord &record);

}  // namespace negscope

#endif  // NEGSCOPE_CORPUS_H_
