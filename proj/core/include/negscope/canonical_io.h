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

#ifndef NEGSCOPE_CANONICAL_IO_H_
#define NEGSCOPE_CANONICAL_IO_H_

#include <iosfwd>
#include <string>

#include "negscope/corpus.h"

namespace negscope {

// Canonical corpus format (.neg.jsonl): UTF-8, one JSON object per line with
// keys in the order
//
//   doc_id, sent_id, lang, source, tokens, cue_indices, scope_indices,
//   split (optional), pred_scope_indices (optional)
//
// A negation-free sentence is written as a line with empty cue_indices and
// scope_indices; it becomes part of the document structure, not a record.

// Parses a canonical stream. Throws FormatError (line + field) on malformed
// lines and ValidationError (line + record key) on invariant violations.
Corpus ReadCanonical(std::istream &in);

// Writes documents in corpus order, sentences in document order and each
// sentence's records in cue-index order. The output depends only on the
// corpus value, not on record insertion order.
void WriteCanonical(const Corpus &corpus, std::ostream &out);

std::string WriteCanonicalString(const Corpus &corpus);

}  // namespace negscope

#endif  // NEGSCOPE_CANONICAL_IO_H_
