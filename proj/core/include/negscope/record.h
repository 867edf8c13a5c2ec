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

#ifndef NEGSCOPE_RECORD_H_
#define NEGSCOPE_RECORD_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negscope {

enum class Lang { kDe, kFr, kIt, kEn };

enum class Split { kTrain, kTest, kValidation };

std::string_view LangName(Lang lang);
std::string_view SplitName(Split split);

// Both throw ArgumentError on unknown names.
Lang ParseLang(std::string_view name);
Split ParseSplit(std::string_view name);

// Strictly increasing, duplicate-free 0-based token indices.
using IndexSet = std::vector<std::int32_t>;

// True if `indices` is strictly increasing and every index is in [0, size).
bool IsValidIndexSet(const IndexSet &indices, std::size_t size);

// Renders an index set as "[1,2,5]".
std::string IndexSetString(const IndexSet &indices);

// One sentence carrying one negation instance. A sentence with several cues
// is represented by several records that differ only in their cue indices.
struct NegationRecord {
  std::string doc_id;
  std::string sent_id;
  Lang lang = Lang::kDe;
  std::string source;
  std::vector<std::string> tokens;
  IndexSet cue_indices;
  IndexSet scope_indices;
  std::optional<Split> split;
  std::optional<IndexSet> pred_scope_indices;

  // "doc_id/sent_id/[cues]", used in diagnostics.
  std::string Key() const;

  friend bool operator==(const NegationRecord &, const NegationRecord &) =
      default;
};

// Checks the per-record invariants: indices in range and strictly increasing,
// cues non-empty, cue and scope (gold and predicted) disjoint, no empty
// tokens. Throws ValidationError.
void ValidateRecord(const NegationRecord &record, std::size_t line = 0);

// Orders records by (doc_id, sent_id, cue_indices).
bool RecordKeyLess(const NegationRecord &a, const NegationRecord &b);

}  // namespace negscope

#endif  // NEGSCOPE_RECORD_H_
