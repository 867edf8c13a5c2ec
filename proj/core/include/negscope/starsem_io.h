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

#ifndef NEGSCOPE_STARSEM_IO_H_
#define NEGSCOPE_STARSEM_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "negscope/corpus.h"

namespace negscope {

// *SEM 2012 column format as distributed with ConanDoyle-neg:
//
//   chapter  sentence_num  token_num  word  lemma  pos  syntax  [negations]
//
// separated by tabs, one token per row, a blank line after each sentence.
// Without negations column 7 holds "***"; otherwise each negation adds the
// triple (cue, scope, event) with "_" for tokens that do not take part.

struct StarSemResult {
  Corpus corpus;
  std::vector<std::string> warnings;
};

// Each negation triple becomes one record keyed by (chapter, sentence_num).
// Event columns are read and discarded. Cue cells that differ from the word
// (affixal cues such as "im" in "impossible") are dropped with a warning, as
// is the whole negation if no word-level cue remains; scope cells on a
// remaining cue token are dropped with a warning. Negation-free sentences are
// kept in the document structure.
//
// Throws FormatError on ragged or malformed rows and ValidationError when a
// negation slot has no cue at all.
StarSemResult ParseStarSem(std::istream &in, Lang lang,
                           const std::string &source);

// Emits one block per sentence with one triple per record (cue-index order);
// lemma, pos, syntax and event cells are "_". Predicted scopes and splits are
// not representable and are omitted. Throws ConsistencyError if a token
// cannot be written unambiguously (tabs, or "_" as a cue/scope token).
void WriteStarSem(const Corpus &corpus, std::ostream &out);

}  // namespace negscope

#endif  // NEGSCOPE_STARSEM_IO_H_
