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

#include "negscope/tokenizer.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "negscope/unicode.h"

namespace negscope {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t start;
  std::size_t end;
};

bool IsDetachable(UChar32 c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '"':
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x201E:  // „
    case 0x201C:  // “
    case 0x201D:  // ”
      return true;
    default:
      return false;
  }
}

std::vector<CodePoint> Decode(const std::string &text) {
  std::vector<CodePoint> out;
  int32_t i = 0;
  const auto length = static_cast<int32_t>(text.size());
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(text.data(), i, length, c);
    out.push_back(CodePoint{c, static_cast<std::size_t>(start),
                            static_cast<std::size_t>(i)});
  }
  return out;
}

Token MakeToken(const std::string &text, std::size_t start, std::size_t end) {
  return Token{text.substr(start, end - start), start, end};
}

// Splits one whitespace-free chunk [begin, end) of code points.
void SplitChunk(const std::string &text, const std::vector<CodePoint> &cps,
                std::size_t begin, std::size_t end, bool final_chunk,
                std::vector<Token> *out) {
  while (begin < end && IsDetachable(cps[begin].value)) {
    out->push_back(MakeToken(text, cps[begin].start, cps[begin].end));
    ++begin;
  }
  std::vector<Token> trailing;
  while (end > begin && IsDetachable(cps[end - 1].value)) {
    const UChar32 c = cps[end - 1].value;
    if (c == '.' && !final_chunk && end - 1 > begin &&
        u_isalnum(cps[end - 2].value)) {
      break;
    }
    trailing.push_back(MakeToken(text, cps[end - 1].start, cps[end - 1].end));
    --end;
  }
  if (begin < end) {
    out->push_back(MakeToken(text, cps[begin].start, cps[end - 1].end));
  }
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

std::vector<Token> Tokenize(std::string_view input) {
  const std::string text = NormalizeNfc(input);
  const std::vector<CodePoint> cps = Decode(text);

  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (u_isUWhiteSpace(cps[i].value)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !u_isUWhiteSpace(cps[j].value)) ++j;
    chunks.emplace_back(i, j);
    i = j;
  }

  std::vector<Token> tokens;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    SplitChunk(text, cps, chunks[c].first, chunks[c].second,
               c + 1 == chunks.size(), &tokens);
  }
  return tokens;
}

std::vector<std::string> TokenSurfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &token : tokens) out.push_back(token.surface);
  return out;
}

bool IsPunctuationToken(std::string_view token) {
  const auto length = static_cast<int32_t>(token.size());
  if (length == 0) return false;
  int32_t i = 0;
  UChar32 c;
  U8_NEXT(token.data(), i, length, c);
  return i == length && IsDetachable(c);
}

}  // namespace negscope
