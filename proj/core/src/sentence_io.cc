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

#include "negscope/sentence_io.h"

#include <istream>

#include "negscope/errors.h"
#include "negscope/tokenizer.h"
#include "negscope/unicode.h"

namespace negscope {

Corpus ReadSentences(std::istream &in, Lang lang, const std::string &source) {
  Corpus corpus;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    if (!IsValidUtf8(text)) throw FormatError(line, "", "invalid UTF-8");

    const std::size_t first = text.find('\t');
    const std::size_t second =
        first == std::string::npos ? first : text.find('\t', first + 1);
    if (second == std::string::npos) {
      throw FormatError(line, "", "expected doc_id<TAB>sent_id<TAB>text");
    }
    const std::string doc_id = text.substr(0, first);
    const std::string sent_id = text.substr(first + 1, second - first - 1);
    if (doc_id.empty()) throw FormatError(line, "doc_id", "empty");
    if (sent_id.empty()) throw FormatError(line, "sent_id", "empty");

    Sentence sentence;
    sentence.sent_id = sent_id;
    sentence.lang = lang;
    sentence.source = source;
    sentence.tokens = TokenSurfaces(Tokenize(text.substr(second + 1)));
    if (sentence.tokens.empty()) throw FormatError(line, "text", "no tokens");
    if (corpus.FindSentence(doc_id, sent_id) != nullptr) {
      throw ValidationError(doc_id + "/" + sent_id, "duplicate sentence",
                            line);
    }
    corpus.AddSentence(doc_id, std::move(sentence), line);
  }
  return corpus;
}

}  // namespace negscope
