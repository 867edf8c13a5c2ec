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

#include "negscope/record.h"

#include <algorithm>
#include <tuple>

#include "negscope/errors.h"

namespace negscope {

std::string_view LangName(Lang lang) {
  switch (lang) {
    case Lang::kDe: return "de";
    case Lang::kFr: return "fr";
    case Lang::kIt: return "it";
    case Lang::kEn: return "en";
  }
  return "?";
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kTest: return "test";
    case Split::kValidation: return "validation";
  }
  return "?";
}

Lang ParseLang(std::string_view name) {
  if (name == "de") return Lang::kDe;
  if (name == "fr") return Lang::kFr;
  if (name == "it") return Lang::kIt;
  if (name == "en") return Lang::kEn;
  throw ArgumentError("unknown language '" + std::string(name) +
                      "' (expected de, fr, it or en)");
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "test") return Split::kTest;
  if (name == "validation") return Split::kValidation;
  throw ArgumentError("unknown split '" + std::string(name) +
                      "' (expected train, test or validation)");
}

bool IsValidIndexSet(const IndexSet &indices, std::size_t size) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || static_cast<std::size_t>(indices[i]) >= size) {
      return false;
    }
    if (i > 0 && indices[i] <= indices[i - 1]) return false;
  }
  return true;
}

std::string IndexSetString(const IndexSet &indices) {
  std::string out = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices[i]);
  }
  return out + "]";
}

std::string NegationRecord::Key() const {
  return doc_id + "/" + sent_id + "/" + IndexSetString(cue_indices);
}

namespace {

bool Intersects(const IndexSet &a, const IndexSet &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

void ValidateRecord(const NegationRecord &record, std::size_t line) {
  auto fail = [&](const std::string &message) {
    throw ValidationError(record.Key(), message, line);
  };
  if (record.doc_id.empty()) fail("empty doc_id");
  if (record.sent_id.empty()) fail("empty sent_id");
  if (record.tokens.empty()) fail("sentence has no tokens");
  for (const std::string &token : record.tokens) {
    if (token.empty()) fail("empty token");
  }
  const std::size_t n = record.tokens.size();
  if (record.cue_indices.empty()) fail("cue_indices is empty");
  if (!IsValidIndexSet(record.cue_indices, n)) {
    fail("cue_indices out of range or not strictly increasing");
  }
  if (!IsValidIndexSet(record.scope_indices, n)) {
    fail("scope_indices out of range or not strictly increasing");
  }
  if (Intersects(record.cue_indices, record.scope_indices)) {
    fail("cue/scope overlap");
  }
  if (record.pred_scope_indices) {
    if (!IsValidIndexSet(*record.pred_scope_indices, n)) {
      fail("pred_scope_indices out of range or not strictly increasing");
    }
    if (Intersects(record.cue_indices, *record.pred_scope_indices)) {
      fail("cue/predicted scope overlap");
    }
  }
}

bool RecordKeyLess(const NegationRecord &a, const NegationRecord &b) {
  return std::tie(a.doc_id, a.sent_id, a.cue_indices) <
         std::tie(b.doc_id, b.sent_id, b.cue_indices);
}

}  // namespace negscope
