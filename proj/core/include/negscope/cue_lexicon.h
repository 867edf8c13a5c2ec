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

#ifndef NEGSCOPE_CUE_LEXICON_H_
#define NEGSCOPE_CUE_LEXICON_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negscope/record.h"

namespace negscope {

// A negation cue. More than one part makes it discontinuous ("ne ... pas"):
// the parts must occur in order within one clause, anything may sit between
// them.
struct CuePattern {
  std::vector<std::vector<std::string>> parts;
  Lang lang = Lang::kDe;

  std::size_t TokenCount() const;

  // Lexicon-file spelling, e.g. "ne ... pas".
  std::string ToString() const;

  friend bool operator==(const CuePattern &, const CuePattern &) = default;
};

struct CueMatch {
  CuePattern pattern;
  IndexSet indices;
};

// Cue patterns for one language, ordered longest first (by total token
// count; ties keep file order). That order is the matching priority.
class CueLexicon {
 public:
  CueLexicon(Lang lang, std::vector<CuePattern> patterns);

  // The shipped list for `lang`.
  static const CueLexicon &Default(Lang lang);

  Lang lang() const { return lang_; }
  const std::vector<CuePattern> &patterns() const { return patterns_; }

  // Greedy left-to-right, longest-pattern-first matching under Unicode case
  // folding. A token joins at most one match. Later parts of a discontinuous
  // cue are searched to the right of the previous part and never across a
  // hard boundary token (; . ! ?). Matches come back ordered by first index.
  std::vector<CueMatch> Detect(const std::vector<std::string> &tokens) const;

 private:
  std::optional<IndexSet> MatchAt(std::size_t pattern,
                                  const std::vector<std::string> &folded,
                                  const std::vector<bool> &used,
                                  std::size_t start) const;

  Lang lang_;
  std::vector<CuePattern> patterns_;
  std::vector<std::vector<std::vector<std::string>>> folded_;
};

struct LexiconLoad {
  CueLexicon lexicon;
  std::vector<std::string> warnings;
};

// Lexicon file: UTF-8, one pattern per line, tokens separated by single
// spaces, the token "..." between the parts of a discontinuous cue, "#"
// comment lines, blank lines ignored. Duplicates (after case folding) are
// dropped with a warning. Throws FormatError for lines without tokens, empty
// parts, or tokens containing whitespace.
LexiconLoad LoadLexicon(std::istream &in, Lang lang);

// Same syntax, restricted to single-token entries. Entries are case-folded.
// Used for stop-lists and boundary sets.
std::vector<std::string> LoadWordList(std::istream &in);
std::vector<std::string> LoadWordList(std::string_view text);

std::vector<CueMatch> DetectCues(const std::vector<std::string> &tokens,
                                 const CueLexicon &lexicon);

// Identity stamped on records produced from a raw sentence.
struct RecordKey {
  std::string doc_id;
  std::string sent_id;
  Lang lang = Lang::kDe;
  std::string source;
  std::optional<Split> split;
};

// One record per match, each carrying a single negation: cue indices from
// the match, empty scope. No matches yields no records.
std::vector<NegationRecord> ExplodeInstances(
    const std::vector<std::string> &tokens,
    const std::vector<CueMatch> &matches, const RecordKey &key);

}  // namespace negscope

#endif  // NEGSCOPE_CUE_LEXICON_H_
