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

#include <algorithm>

#include "negscope/cue_lexicon.h"
#include "negscope/default_data.h"
#include "negscope/errors.h"
#include "negscope/tokenizer.h"
#include "negscope/unicode.h"

namespace negscope {
namespace {

std::set<std::string> WordSet(std::string_view text) {
  std::vector<std::string> words = LoadWordList(text);
  return {words.begin(), words.end()};
}

ResolverConfig LoadDefaultConfig() {
  ResolverConfig config;
  config.hard_boundaries = WordSet(default_data::k_boundaries);
  config.conjunctions[Lang::kDe] = WordSet(default_data::k_conjunctions_de);
  config.conjunctions[Lang::kFr] = WordSet(default_data::k_conjunctions_fr);
  config.conjunctions[Lang::kIt] = WordSet(default_data::k_conjunctions_it);
  config.conjunctions[Lang::kEn] = WordSet(default_data::k_conjunctions_en);
  return config;
}

void CheckCues(const std::vector<std::string> &tokens,
               const IndexSet &cue_indices) {
  if (cue_indices.empty()) throw ArgumentError("no cue indices");
  if (!IsValidIndexSet(cue_indices, tokens.size())) {
    throw ArgumentError("cue indices " + IndexSetString(cue_indices) +
                        " invalid for a sentence of " +
                        std::to_string(tokens.size()) + " tokens");
  }
}

}  // namespace

const ResolverConfig &ResolverConfig::Default() {
  static const ResolverConfig config = LoadDefaultConfig();
  return config;
}

std::vector<IndexRange> FindParentheticals(
    const std::vector<std::string> &tokens) {
  std::vector<IndexRange> ranges;
  int depth = 0;
  std::int32_t open = 0;
  const auto n = static_cast<std::int32_t>(tokens.size());
  for (std::int32_t i = 0; i < n; ++i) {
    if (tokens[i] == "(") {
      if (depth == 0) open = i;
      ++depth;
    } else if (tokens[i] == ")" && depth > 0) {
      if (--depth == 0) ranges.push_back(IndexRange{open, i + 1});
    }
  }
  if (depth > 0) ranges.push_back(IndexRange{open, n});
  return ranges;
}

ClauseWindow FindClauseWindow(const std::vector<std::string> &tokens,
                              const IndexSet &cue_indices,
                              const ResolverConfig &config) {
  CheckCues(tokens, cue_indices);
  const std::vector<IndexRange> parentheticals = FindParentheticals(tokens);
  auto is_boundary = [&](std::int32_t i) {
    if (!config.hard_boundaries.contains(tokens[i])) return false;
    return std::none_of(parentheticals.begin(), parentheticals.end(),
                        [i](const IndexRange &r) { return r.Contains(i); });
  };

  const auto n = static_cast<std::int32_t>(tokens.size());
  ClauseWindow window;
  window.left = 0;
  for (std::int32_t i = cue_indices.front() - 1; i >= 0; --i) {
    if (is_boundary(i)) {
      window.left = i + 1;
      break;
    }
  }
  window.right = n - 1;
  for (std::int32_t i = cue_indices.back() + 1; i < n; ++i) {
    if (is_boundary(i)) {
      window.right = i - 1;
      break;
    }
  }
  for (const IndexRange &range : parentheticals) {
    const std::int32_t begin = std::max(range.begin, window.left);
    const std::int32_t end = std::min(range.end, window.right + 1);
    if (begin < end) window.excluded_spans.push_back(IndexRange{begin, end});
  }
  return window;
}

IndexSet ResolveScope(const std::vector<std::string> &tokens,
                      const IndexSet &cue_indices, Lang lang,
                      const ResolverConfig &config) {
  const ClauseWindow window = FindClauseWindow(tokens, cue_indices, config);

  std::vector<bool> in_scope(tokens.size(), false);
  for (std::int32_t i = window.left; i <= window.right; ++i) in_scope[i] = true;
  for (const IndexRange &span : window.excluded_spans) {
    for (std::int32_t i = span.begin; i < span.end; ++i) in_scope[i] = false;
  }
  for (std::int32_t cue : cue_indices) in_scope[cue] = false;

  static const std::set<std::string> kNoConjunctions;
  auto found = config.conjunctions.find(lang);
  const std::set<std::string> &conjunctions =
      found == config.conjunctions.end() ? kNoConjunctions : found->second;

  for (std::int32_t i = window.left; i <= window.right; ++i) {
    if (!in_scope[i]) continue;
    const bool trim =
        IsPunctuationToken(tokens[i]) ||
        (i < cue_indices.front() && conjunctions.contains(FoldCase(tokens[i])));
    if (!trim) break;
    in_scope[i] = false;
  }
  for (std::int32_t i = window.right; i >= window.left; --i) {
    if (!in_scope[i]) continue;
    if (!IsPunctuationToken(tokens[i])) break;
    in_scope[i] = false;
  }

  IndexSet scope;
  for (std::int32_t i = window.left; i <= window.right; ++i) {
    if (in_scope[i]) scope.push_back(i);
  }
  return scope;
}

Corpus ResolveCorpus(const Corpus &corpus, std::optional<Lang> lang,
                     const ResolverConfig &config) {
  Corpus out = corpus;
  for (std::size_t i = 0; i < out.records().size(); ++i) {
    const NegationRecord &record = out.records()[i];
    out.SetPrediction(i, ResolveScope(record.tokens, record.cue_indices,
                                      lang.value_or(record.lang), config));
  }
  return out;
}

}  // namespace negscope
