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

#ifndef NEGSCOPE_TOKENIZER_H_
#define NEGSCOPE_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace negscope {

// A token with byte offsets into the NFC-normalized sentence text.
struct Token {
  std::string surface;
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  friend bool operator==(const Token &, const Token &) = default;
};

// Reference tokenizer for pre-split sentences.
//
// The input is NFC-normalized first; offsets refer to NormalizeNfc(text).
// Text is split on Unicode whitespace, then punctuation characters
// . , ; : ! ? ( ) " « » „ “ ” at the start or end of a chunk are detached one
// character at a time. Punctuation inside a chunk is never split, so dates
// (06.02.2017) and citations (i.S.d) stay whole. A trailing period stays
// attached to a letter or digit unless the chunk is the last one of the
// sentence, which keeps abbreviations such as "Abs." and "vgl." intact.
std::vector<Token> Tokenize(std::string_view text);

// Surfaces only.
std::vector<std::string> TokenSurfaces(const std::vector<Token> &tokens);

// True if `token` is a single character from the tokenizer's punctuation set.
bool IsPunctuationToken(std::string_view token);

}  // namespace negscope

#endif  // NEGSCOPE_TOKENIZER_H_
