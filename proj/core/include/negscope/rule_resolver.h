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

#ifndef NEGSCOPE_RULE_RESOLVER_H_
#define NEGSCOPE_RULE_RESOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/record.h"

namespace negscope {

// Half-open token range [begin, end).
struct IndexRange {
  std::int32_t begin = 0;
  std::int32_t end = 0;

  bool Contains(std::int32_t index) const {
    return index >= begin && index < end;
  }

  friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

// Clause window around a cue. `left` and `right` are inclusive.
struct ClauseWindow {
  std::int32_t left = 0;
  std::int32_t right = -1;
  std::vector<IndexRange> excluded_spans;
};

struct ResolverConfig {
  // Tokens that close a clause window. Commas are deliberately absent.
  std::set<std::string> hard_boundaries;
  // Case-folded conjunctions trimmed from the start of a window.
  std::map<Lang, std::set<std::string>> conjunctions;

  // Built from the shipped boundary set and stop-lists.
  static const ResolverConfig &Default();
};

// Maximal balanced "(" ... ")" ranges including the parentheses. Nested
// parentheses merge into the outermost range, an unclosed "(" runs to the end
// of the sentence, and a stray ")" is ignored.
std::vector<IndexRange> FindParentheticals(
    const std::vector<std::string> &tokens);

// Window from the token after the nearest hard boundary left of the first cue
// to the token before the nearest hard boundary right of the last cue.
// Boundaries inside parentheticals do not count. Parentheticals overlapping
// the window are clipped to it and reported as excluded spans.
ClauseWindow FindClauseWindow(
    const std::vector<std::string> &tokens, const IndexSet &cue_indices,
    const ResolverConfig &config = ResolverConfig::Default());

// Maximum-scope heuristic:
//  1. take the clause window of the cue;
//  2. drop parenthetical citations;
//  3. drop the cue tokens;
//  4. trim leading punctuation and (before the cue only) conjunctions from
//     the language's stop-list, then trailing punctuation. Internal commas
//     survive because trimming leaves scope tokens on both sides of them.
// The result may have gaps. Throws ArgumentError for empty, unsorted or
// out-of-range cue indices.
IndexSet ResolveScope(const std::vector<std::string> &tokens,
                      const IndexSet &cue_indices, Lang lang,
                      const ResolverConfig &config = ResolverConfig::Default());

// Fills pred_scope_indices of every record, using the record's language or
// `lang` when given. Gold scopes are left untouched.
Corpus ResolveCorpus(const Corpus &corpus, std::optional<Lang> lang = {},
                     const ResolverConfig &config = ResolverConfig::Default());

}  // namespace negscope

#endif  // NEGSCOPE_RULE_RESOLVER_H_
