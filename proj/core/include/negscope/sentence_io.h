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

#ifndef NEGSCOPE_SENTENCE_IO_H_
#define NEGSCOPE_SENTENCE_IO_H_

#include <iosfwd>
#include <string>

#include "negscope/corpus.h"

namespace negscope {

// Reads pre-split raw sentences, one per line:
//
//   doc_id <TAB> sent_id <TAB> sentence text
//
// Each sentence is tokenized with Tokenize(). The result has document
// structure only and no negation records. Blank lines are skipped.
// Throws FormatError on lines with fewer than three fields or empty text,
// ValidationError on a repeated (doc_id, sent_id).
Corpus ReadSentences(std::istream &in, Lang lang, const std::string &source);

}  // namespace negscope

#endif  // NEGSCOPE_SENTENCE_IO_H_
