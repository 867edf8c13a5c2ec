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

#include "negscope/corpus.h"

#include <algorithm>

#include "negscope/errors.h"

namespace negscope {

Sentence SentenceOf(const NegationRecord &record) {
  return Sentence{record.sent_id, record.lang, record.source, record.tokens,
                  record.split};
}

void Corpus::AddSentence(const std::string &doc_id, Sentence sentence,
                         std::size_t line) {
  const std::string key_text = doc_id + "/" + sentence.sent_id;
  if (doc_id.empty()) throw ValidationError(key_text, "empty doc_id", line);
  if (sentence.sent_id.empty()) {
    throw ValidationError(key_text, "empty sent_id", line);
  }
  if (sentence.tokens.empty()) {
    throw ValidationError(key_text, "sentence has no tokens", line);
  }
  for (const std::string &token : sentence.tokens) {
    if (token.empty()) throw ValidationError(key_text, "empty token", line);
  }

  SentenceKey key{doc_id, sentence.sent_id};
  auto found = sentence_location_.find(key);
  if (found != sentence_location_.end()) {
    const Sentence &stored =
        documents_[found->second.first].sentences[found->second.second];
    if (!(stored == sentence)) {
      std::string what = "tokens";
      if (stored.tokens == sentence.tokens) {
        what = stored.lang != sentence.lang       ? "lang"
               : stored.source != sentence.source ? "source"
                                                  : "split";
      }
      throw ConsistencyError(key_text,
                             "conflicting " + what + " for the same sentence",
                             line);
    }
    return;
  }

  auto [it, inserted] = document_index_.try_emplace(doc_id, documents_.size());
  if (inserted) documents_.push_back(Document{doc_id, {}});
  Document &document = documents_[it->second];
  sentence_location_.emplace(
      key, std::make_pair(it->second, document.sentences.size()));
  document.sentences.push_back(std::move(sentence));
}

void Corpus::AddRecord(NegationRecord record, std::size_t line) {
  ValidateRecord(record, line);
  AddSentence(record.doc_id, SentenceOf(record), line);
  SentenceKey key{record.doc_id, record.sent_id};
  std::vector<std::size_t> &siblings = sentence_records_[key];
  for (std::size_t index : siblings) {
    if (records_[index].cue_indices == record.cue_indices) {
      throw ValidationError(record.Key(),
                            "duplicate (doc_id, sent_id, cue_indices)", line);
    }
  }
  auto position = std::lower_bound(
      siblings.begin(), siblings.end(), record.cue_indices,
      [this](std::size_t index, const IndexSet &cues) {
        return records_[index].cue_indices < cues;
      });
  siblings.insert(position, records_.size());
  records_.push_back(std::move(record));
}

const Document *Corpus::FindDocument(const std::string &doc_id) const {
  auto it = document_index_.find(doc_id);
  return it == document_index_.end() ? nullptr : &documents_[it->second];
}

const Sentence *Corpus::FindSentence(const std::string &doc_id,
                                     const std::string &sent_id) const {
  auto it = sentence_location_.find(SentenceKey{doc_id, sent_id});
  if (it == sentence_location_.end()) return nullptr;
  return &documents_[it->second.first].sentences[it->second.second];
}

std::vector<std::size_t> Corpus::RecordsOf(const std::string &doc_id,
                                           const std::string &sent_id) const {
  auto it = sentence_records_.find(SentenceKey{doc_id, sent_id});
  if (it == sentence_records_.end()) return {};
  return it->second;
}

void Corpus::SetPrediction(std::size_t index, IndexSet pred_scope) {
  NegationRecord updated = records_.at(index);
  updated.pred_scope_indices = std::move(pred_scope);
  ValidateRecord(updated);
  records_[index] = std::move(updated);
}

Sentence &Corpus::MutableSentence(const SentenceKey &key) {
  const auto &location = sentence_location_.at(key);
  return documents_[location.first].sentences[location.second];
}

void Corpus::SetSplit(const std::string &doc_id, Split split) {
  auto it = document_index_.find(doc_id);
  if (it == document_index_.end()) {
    throw ArgumentError("unknown document '" + doc_id + "'");
  }
  for (Sentence &sentence : documents_[it->second].sentences) {
    sentence.split = split;
    for (std::size_t index : RecordsOf(doc_id, sentence.sent_id)) {
      records_[index].split = split;
    }
  }
}

Corpus Corpus::Subset(const std::set<std::string> &doc_ids) const {
  Corpus out;
  for (const Document &document : documents_) {
    if (!doc_ids.contains(document.doc_id)) continue;
    for (const Sentence &sentence : document.sentences) {
      out.AddSentence(document.doc_id, sentence);
    }
  }
  for (const NegationRecord &record : records_) {
    if (doc_ids.contains(record.doc_id)) out.AddRecord(record);
  }
  return out;
}

bool operator==(const Corpus &a, const Corpus &b) {
  if (a.documents_ != b.documents_) return false;
  if (a.records_.size() != b.records_.size()) return false;
  std::vector<NegationRecord> left = a.records_;
  std::vector<NegationRecord> right = b.records_;
  std::sort(left.begin(), left.end(), RecordKeyLess);
  std::sort(right.begin(), right.end(), RecordKeyLess);
  return left == right;
}

}  // namespace negscope
