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

#include "negscope/starsem_io.h"

#include <istream>
#include <ostream>
#include <set>

#include "negscope/errors.h"
#include "negscope/unicode.h"

namespace negscope {
namespace {

constexpr std::size_t kFixedColumns = 7;
constexpr std::string_view kEmpty = "_";
constexpr std::string_view kNoNegation = "***";

struct Row {
  std::size_t line;
  std::vector<std::string> cells;
};

std::vector<std::string> SplitTabs(const std::string &text) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = text.find('\t', start);
    cells.push_back(text.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cells;
}

// Number of negation triples implied by a row, or throws.
std::size_t NegationCount(const Row &row) {
  const std::size_t columns = row.cells.size();
  if (columns == kFixedColumns) return 0;
  if (columns == kFixedColumns + 1 && row.cells.back() == kNoNegation) {
    return 0;
  }
  if (columns > kFixedColumns && (columns - kFixedColumns) % 3 == 0) {
    return (columns - kFixedColumns) / 3;
  }
  throw FormatError(row.line, "columns",
                    "expected 7 + 3k columns or 8 ending in '***', got " +
                        std::to_string(columns));
}

class BlockParser {
 public:
  BlockParser(Lang lang, const std::string &source, StarSemResult *result)
      : lang_(lang), source_(source), result_(result) {}

  void Parse(const std::vector<Row> &rows) {
    const Row &head = rows.front();
    const std::size_t columns = head.cells.size();
    const std::size_t negations = NegationCount(head);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row &row = rows[i];
      if (row.cells.size() != columns) {
        throw FormatError(row.line, "columns",
                          "ragged column count: " +
                              std::to_string(row.cells.size()) + " vs " +
                              std::to_string(columns) + " on line " +
                              std::to_string(head.line));
      }
      NegationCount(row);
      if (row.cells[0] != head.cells[0]) {
        throw FormatError(row.line, "chapter", "changes within a sentence");
      }
      if (row.cells[1] != head.cells[1]) {
        throw FormatError(row.line, "sentence_num",
                          "changes within a sentence");
      }
      if (row.cells[2] != std::to_string(i)) {
        throw FormatError(row.line, "token_num",
                          "expected " + std::to_string(i) + ", got '" +
                              row.cells[2] + "'");
      }
      if (row.cells[3].empty()) throw FormatError(row.line, "word", "empty");
      for (const std::string &cell : row.cells) {
        if (!IsValidUtf8(cell)) {
          throw FormatError(row.line, "columns", "invalid UTF-8");
        }
      }
    }

    const std::string &doc_id = head.cells[0];
    const std::string &sent_id = head.cells[1];
    if (doc_id.empty()) throw FormatError(head.line, "chapter", "empty");
    if (sent_id.empty()) throw FormatError(head.line, "sentence_num", "empty");
    if (!seen_.insert({doc_id, sent_id}).second) {
      throw ValidationError(doc_id + "/" + sent_id, "duplicate sentence block",
                            head.line);
    }

    Sentence sentence;
    sentence.sent_id = sent_id;
    sentence.lang = lang_;
    sentence.source = source_;
    std::vector<std::string> raw_words;
    for (const Row &row : rows) {
      raw_words.push_back(NormalizeNfc(row.cells[3]));
    }
    sentence.tokens = raw_words;
    result_->corpus.AddSentence(doc_id, sentence, head.line);

    for (std::size_t k = 0; k < negations; ++k) {
      ParseNegation(rows, raw_words, doc_id, sentence, k);
    }
  }

 private:
  void ParseNegation(const std::vector<Row> &rows,
                     const std::vector<std::string> &words,
                     const std::string &doc_id, const Sentence &sentence,
                     std::size_t slot) {
    const std::size_t cue_column = kFixedColumns + 3 * slot;
    const std::size_t scope_column = cue_column + 1;
    const std::string where = doc_id + "/" + sentence.sent_id + " negation " +
                              std::to_string(slot);

    IndexSet cues;
    bool any_cue = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string &cell = rows[i].cells[cue_column];
      if (cell == kEmpty) continue;
      any_cue = true;
      if (NormalizeNfc(cell) != words[i]) {
        Warn(where + ": dropped affixal cue '" + cell + "' in '" + words[i] +
             "' (line " + std::to_string(rows[i].line) + ")");
        continue;
      }
      cues.push_back(static_cast<std::int32_t>(i));
    }
    if (!any_cue) {
      throw ValidationError(doc_id + "/" + sentence.sent_id,
                            "negation " + std::to_string(slot) +
                                " has no cue",
                            rows.front().line);
    }
    if (cues.empty()) {
      Warn(where + ": dropped, only affixal cues");
      return;
    }

    const std::set<std::int32_t> cue_set(cues.begin(), cues.end());
    IndexSet scope;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].cells[scope_column] == kEmpty) continue;
      const auto index = static_cast<std::int32_t>(i);
      if (cue_set.contains(index)) {
        Warn(where + ": dropped scope cell on cue token '" + words[i] + "'");
        continue;
      }
      scope.push_back(index);
    }

    NegationRecord record;
    record.doc_id = doc_id;
    record.sent_id = sentence.sent_id;
    record.lang = sentence.lang;
    record.source = sentence.source;
    record.tokens = sentence.tokens;
    record.cue_indices = std::move(cues);
    record.scope_indices = std::move(scope);
    record.split = sentence.split;
    result_->corpus.AddRecord(std::move(record), rows.front().line);
  }

  void Warn(std::string message) {
    result_->warnings.push_back(std::move(message));
  }

  Lang lang_;
  const std::string &source_;
  StarSemResult *result_;
  std::set<std::pair<std::string, std::string>> seen_;
};

void CheckWritable(const std::string &text, const std::string &key,
                   const char *what) {
  if (text.find_first_of("\t\n\r") != std::string::npos) {
    throw ConsistencyError(key, std::string(what) +
                                    " contains a tab or line break");
  }
}

}  // namespace

StarSemResult ParseStarSem(std::istream &in, Lang lang,
                           const std::string &source) {
  StarSemResult result;
  BlockParser parser(lang, source, &result);
  std::vector<Row> block;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) {
      if (!block.empty()) parser.Parse(block);
      block.clear();
      continue;
    }
    block.push_back(Row{line, SplitTabs(text)});
  }
  if (!block.empty()) parser.Parse(block);
  return result;
}

void WriteStarSem(const Corpus &corpus, std::ostream &out) {
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) {
      const std::string key = document.doc_id + "/" + sentence.sent_id;
      CheckWritable(document.doc_id, key, "doc_id");
      CheckWritable(sentence.sent_id, key, "sent_id");
      const std::vector<std::size_t> indices =
          corpus.RecordsOf(document.doc_id, sentence.sent_id);
      std::vector<const NegationRecord *> records;
      for (std::size_t index : indices) {
        const NegationRecord &record = corpus.records()[index];
        if (record.tokens != sentence.tokens) {
          throw ConsistencyError(record.Key(),
                                 "token sequence differs from its sentence");
        }
        records.push_back(&record);
      }

      std::vector<std::set<std::int32_t>> cue_sets, scope_sets;
      for (const NegationRecord *record : records) {
        cue_sets.emplace_back(record->cue_indices.begin(),
                              record->cue_indices.end());
        scope_sets.emplace_back(record->scope_indices.begin(),
                                record->scope_indices.end());
      }

      for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const std::string &word = sentence.tokens[i];
        CheckWritable(word, key, "token");
        out << document.doc_id << '\t' << sentence.sent_id << '\t' << i
            << '\t' << word << "\t_\t_\t_";
        if (records.empty()) {
          out << '\t' << kNoNegation;
        }
        const auto index = static_cast<std::int32_t>(i);
        for (std::size_t r = 0; r < records.size(); ++r) {
          const bool cue = cue_sets[r].contains(index);
          const bool scope = scope_sets[r].contains(index);
          if ((cue || scope) && word == kEmpty) {
            throw ConsistencyError(records[r]->Key(),
                                   "token '_' cannot be marked in *SEM");
          }
          out << '\t' << (cue ? word : std::string(kEmpty)) << '\t'
              << (scope ? word : std::string(kEmpty)) << '\t' << kEmpty;
        }
        out << '\n';
      }
      out << '\n';
    }
  }
}

}  // namespace negscope
