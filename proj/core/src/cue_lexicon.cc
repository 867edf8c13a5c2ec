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

#include "negscope/cue_lexicon.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "negscope/default_data.h"
#include "negscope/errors.h"
#include "negscope/unicode.h"

namespace negscope {
namespace {

constexpr std::string_view kPartSeparator = "...";

bool IsCueBoundary(const std::string &token) {
  return token == ";" || token == "." || token == "!" || token == "?";
}

std::vector<std::vector<std::string>> FoldParts(const CuePattern &pattern) {
  std::vector<std::vector<std::string>> out;
  for (const auto &part : pattern.parts) {
    std::vector<std::string> folded;
    for (const std::string &token : part) folded.push_back(FoldCase(token));
    out.push_back(std::move(folded));
  }
  return out;
}

// Parses one non-comment, non-blank line into pattern parts.
std::vector<std::vector<std::string>> ParseLine(const std::string &text,
                                                std::size_t line) {
  std::vector<std::vector<std::string>> parts(1);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t space = text.find(' ', start);
    if (space == std::string::npos) space = text.size();
    const std::string token = text.substr(start, space - start);
    if (token.empty()) {
      throw FormatError(line, "pattern", "tokens must be separated by a single space");
    }
    if (token.find_first_of("\t\v\f") != std::string::npos) {
      throw FormatError(line, "pattern", "whitespace inside token '" + token + "'");
    }
    if (token == kPartSeparator) {
      if (parts.back().empty()) {
        throw FormatError(line, "pattern", "empty part before '...'");
      }
      parts.emplace_back();
    } else {
      parts.back().push_back(token);
    }
    start = space + 1;
  }
  if (parts.back().empty()) {
    throw FormatError(line, "pattern",
                      parts.size() == 1 ? "empty pattern" : "empty part after '...'");
  }
  return parts;
}

// Strips a trailing CR and surrounding spaces/tabs.
std::string Trim(std::string text) {
  if (!text.empty() && text.back() == '\r') text.pop_back();
  const std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const std::size_t last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

CueLexicon LoadDefault(Lang lang) {
  std::string_view text;
  switch (lang) {
    case Lang::kDe: text = default_data::k_lexicon_de; break;
    case Lang::kFr: text = default_data::k_lexicon_fr; break;
    case Lang::kIt: text = default_data::k_lexicon_it; break;
    case Lang::kEn: text = default_data::k_lexicon_en; break;
  }
  std::istringstream in{std::string(text)};
  return LoadLexicon(in, lang).lexicon;
}

}  // namespace

std::size_t CuePattern::TokenCount() const {
  std::size_t count = 0;
  for (const auto &part : parts) count += part.size();
  return count;
}

std::string CuePattern::ToString() const {
  std::string out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p > 0) out += " ... ";
    for (std::size_t t = 0; t < parts[p].size(); ++t) {
      if (t > 0) out += ' ';
      out += parts[p][t];
    }
  }
  return out;
}

CueLexicon::CueLexicon(Lang lang, std::vector<CuePattern> patterns)
    : lang_(lang) {
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const CuePattern &a, const CuePattern &b) {
                     return a.TokenCount() > b.TokenCount();
                   });
  std::set<std::vector<std::vector<std::string>>> seen;
  for (CuePattern &pattern : patterns) {
    auto folded = FoldParts(pattern);
    if (!seen.insert(folded).second) continue;
    pattern.lang = lang;
    patterns_.push_back(std::move(pattern));
    folded_.push_back(std::move(folded));
  }
}

const CueLexicon &CueLexicon::Default(Lang lang) {
  static const CueLexicon de = LoadDefault(Lang::kDe);
  static const CueLexicon fr = LoadDefault(Lang::kFr);
  static const CueLexicon it = LoadDefault(Lang::kIt);
  static const CueLexicon en = LoadDefault(Lang::kEn);
  switch (lang) {
    case Lang::kDe: return de;
    case Lang::kFr: return fr;
    case Lang::kIt: return it;
    case Lang::kEn: return en;
  }
  return de;
}

std::optional<IndexSet> CueLexicon::MatchAt(
    std::size_t pattern, const std::vector<std::string> &folded,
    const std::vector<bool> &used, std::size_t start) const {
  const auto &parts = folded_[pattern];
  auto fits = [&](const std::vector<std::string> &part, std::size_t at) {
    if (at + part.size() > folded.size()) return false;
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (used[at + k] || folded[at + k] != part[k]) return false;
    }
    return true;
  };

  if (!fits(parts[0], start)) return std::nullopt;
  IndexSet indices;
  for (std::size_t k = 0; k < parts[0].size(); ++k) {
    indices.push_back(static_cast<std::int32_t>(start + k));
  }
  std::size_t cursor = start + parts[0].size();
  for (std::size_t p = 1; p < parts.size(); ++p) {
    std::optional<std::size_t> found;
    for (std::size_t at = cursor; at < folded.size(); ++at) {
      if (IsCueBoundary(folded[at])) break;
      if (fits(parts[p], at)) {
        found = at;
        break;
      }
    }
    if (!found) return std::nullopt;
    for (std::size_t k = 0; k < parts[p].size(); ++k) {
      indices.push_back(static_cast<std::int32_t>(*found + k));
    }
    cursor = *found + parts[p].size();
  }
  return indices;
}

std::vector<CueMatch> CueLexicon::Detect(
    const std::vector<std::string> &tokens) const {
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const std::string &token : tokens) folded.push_back(FoldCase(token));

  std::vector<bool> used(tokens.size(), false);
  std::vector<CueMatch> matches;
  for (std::size_t start = 0; start < tokens.size(); ++start) {
    if (used[start]) continue;
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      std::optional<IndexSet> indices = MatchAt(p, folded, used, start);
      if (!indices) continue;
      for (std::int32_t index : *indices) used[index] = true;
      matches.push_back(CueMatch{patterns_[p], std::move(*indices)});
      break;
    }
  }
  return matches;
}

LexiconLoad LoadLexicon(std::istream &in, Lang lang) {
  std::vector<CuePattern> patterns;
  std::vector<std::string> warnings;
  std::set<std::vector<std::vector<std::string>>> seen;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    text = Trim(std::move(text));
    if (text.empty() || text.front() == '#') continue;
    if (!IsValidUtf8(text)) throw FormatError(line, "pattern", "invalid UTF-8");
    CuePattern pattern{ParseLine(text, line), lang};
    if (!seen.insert(FoldParts(pattern)).second) {
      warnings.push_back("line " + std::to_string(line) +
                         ": duplicate pattern '" + pattern.ToString() +
                         "' ignored");
      continue;
    }
    patterns.push_back(std::move(pattern));
  }
  return LexiconLoad{CueLexicon(lang, std::move(patterns)), std::move(warnings)};
}

std::vector<std::string> LoadWordList(std::istream &in) {
  std::vector<std::string> words;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    text = Trim(std::move(text));
    if (text.empty() || text.front() == '#') continue;
    if (!IsValidUtf8(text)) throw FormatError(line, "entry", "invalid UTF-8");
    auto parts = ParseLine(text, line);
    if (parts.size() != 1 || parts[0].size() != 1) {
      throw FormatError(line, "entry", "expected a single token");
    }
    words.push_back(FoldCase(parts[0][0]));
  }
  return words;
}

std::vector<std::string> LoadWordList(std::string_view text) {
  std::istringstream in{std::string(text)};
  return LoadWordList(in);
}

std::vector<CueMatch> DetectCues(const std::vector<std::string> &tokens,
                                 const CueLexicon &lexicon) {
  return lexicon.Detect(tokens);
}

std::vector<NegationRecord> ExplodeInstances(
    const std::vector<std::string> &tokens,
    const std::vector<CueMatch> &matches, const RecordKey &key) {
  std::vector<NegationRecord> records;
  records.reserve(matches.size());
  for (const CueMatch &match : matches) {
    NegationRecord record;
    record.doc_id = key.doc_id;
    record.sent_id = key.sent_id;
    record.lang = key.lang;
    record.source = key.source;
    record.tokens = tokens;
    record.cue_indices = match.indices;
    record.split = key.split;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace negscope
