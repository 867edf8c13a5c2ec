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

#ifndef NEGSCOPE_UNICODE_H_
#define NEGSCOPE_UNICODE_H_

#include <string>
#include <string_view>

namespace negscope {

// Canonical composition (NFC) of UTF-8 text. Invalid sequences are replaced
// with U+FFFD by the converter.
std::string NormalizeNfc(std::string_view text);

// Full Unicode case folding, used for case-insensitive cue matching.
std::string FoldCase(std::string_view text);

// Unicode lowercase mapping (root locale).
std::string ToLower(std::string_view text);

// True if `text` is well-formed UTF-8.
bool IsValidUtf8(std::string_view text);

}  // namespace negscope

#endif  // NEGSCOPE_UNICODE_H_
