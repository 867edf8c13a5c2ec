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

#include "negscope/canonical_io.h"

#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "negscope/errors.h"

namespace negscope {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::set<std::string> &KnownFields() {
  static const std::set<std::string> fields = {
      "doc_id",        "sent_id", "lang",
      "source",        "tokens",  "cue_indices",
      "scope_indices", "split",   "pred_scope_indices"};
  return fields;
}

class LineParser {
 public:
  LineParser(const json &object, std::size_t line)
      : object_(object), line_(line) {}

  std::string String(const char *field) const {
    const json &value = Required(field);
    if (!value.is_string()) Fail(field, "expected a string");
    return value.get<std::string>();
  }

  std::vector<std::string> Strings(const char *field) const {
    const json &value = Required(field);
    if (!value.is_array()) Fail(field, "expected an array of strings");
    std::vector<std::string> out;
    out.reserve(value.size());
    for (const json &item : value) {
      if (!item.is_string()) Fail(field, "expected an array of strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  IndexSet Indices(const char *field) const {
    return ToIndices(field, Required(field));
  }

  std::optional<IndexSet> OptionalIndices(const char *field) const {
    auto it = object_.find(field);
    if (it == object_.end() || it->is_null()) return std::nullopt;
    return ToIndices(field, *it);
  }

  std::optional<std::string> OptionalString(const char *field) const {
    auto it = object_.find(field);
    if (it == object_.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) Fail(field, "expected a string");
    return it->get<std::string>();
  }

  [[noreturn]] void Fail(const std::string &field,
                         const std::string &message) const {
    throw FormatError(line_, field, message);
  }

 private:
  const json &Required(const char *field) const {
    auto it = object_.find(field);
    if (it == object_.end()) Fail(field, "missing");
    return *it;
  }

  IndexSet ToIndices(const char *field, const json &value) const {
    if (!value.is_array()) Fail(field, "expected an array of integers");
    IndexSet out;
    out.reserve(value.size());
    for (const json &item : value) {
      if (!item.is_number_integer()) {
        Fail(field, "expected an array of integers");
      }
      const auto number = item.get<std::int64_t>();
      if (number < std::numeric_limits<std::int32_t>::min() ||
          number > std::numeric_limits<std::int32_t>::max()) {
        Fail(field, "index out of range");
      }
      out.push_back(static_cast<std::int32_t>(number));
    }
    return out;
  }

  const json &object_;
  std::size_t line_;
};

ordered_json IndicesJson(const IndexSet &indices) {
  ordered_json out = ordered_json::array();
  for (std::int32_t index : indices) out.push_back(index);
  return out;
}

ordered_json LineJson(const std::string &doc_id, const Sentence &sentence,
                      const NegationRecord *record) {
  ordered_json line;
  line["doc_id"] = doc_id;
  line["sent_id"] = sentence.sent_id;
  line["lang"] = std::string(LangName(sentence.lang));
  line["source"] = sentence.source;
  line["tokens"] = sentence.tokens;
  line["cue_indices"] = IndicesJson(record ? record->cue_indices : IndexSet{});
  line["scope_indices"] =
      IndicesJson(record ? record->scope_indices : IndexSet{});
  if (sentence.split) line["split"] = std::string(SplitName(*sentence.split));
  if (record && record->pred_scope_indices) {
    line["pred_scope_indices"] = IndicesJson(*record->pred_scope_indices);
  }
  return line;
}

}  // namespace

Corpus ReadCanonical(std::istream &in) {
  Corpus corpus;
  std::set<std::pair<std::string, std::string>> negation_free;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;

    json object;
    try {
      object = json::parse(text);
    } catch (const json::parse_error &e) {
      throw FormatError(line, "", std::string("invalid JSON: ") + e.what());
    }
    LineParser parser(object, line);
    if (!object.is_object()) parser.Fail("", "expected a JSON object");
    for (const auto &item : object.items()) {
      if (!KnownFields().contains(item.key())) {
        parser.Fail(item.key(), "unknown field");
      }
    }

    NegationRecord record;
    record.doc_id = parser.String("doc_id");
    record.sent_id = parser.String("sent_id");
    const std::string lang = parser.String("lang");
    try {
      record.lang = ParseLang(lang);
    } catch (const ArgumentError &e) {
      parser.Fail("lang", e.what());
    }
    record.source = parser.String("source");
    record.tokens = parser.Strings("tokens");
    record.cue_indices = parser.Indices("cue_indices");
    record.scope_indices = parser.Indices("scope_indices");
    if (auto split = parser.OptionalString("split")) {
      try {
        record.split = ParseSplit(*split);
      } catch (const ArgumentError &e) {
        parser.Fail("split", e.what());
      }
    }
    record.pred_scope_indices = parser.OptionalIndices("pred_scope_indices");

    std::pair<std::string, std::string> key{record.doc_id, record.sent_id};
    if (record.cue_indices.empty()) {
      if (!record.scope_indices.empty() ||
          (record.pred_scope_indices && !record.pred_scope_indices->empty())) {
        throw ValidationError(record.Key(),
                              "scope indices without a negation cue", line);
      }
      if (!corpus.RecordsOf(record.doc_id, record.sent_id).empty() ||
          !negation_free.insert(key).second) {
        throw ValidationError(record.Key(),
                              "duplicate negation-free sentence line", line);
      }
      corpus.AddSentence(record.doc_id, SentenceOf(record), line);
      continue;
    }
    if (negation_free.contains(key)) {
      throw ValidationError(
          record.Key(), "sentence is also marked as negation-free", line);
    }
    corpus.AddRecord(std::move(record), line);
  }
  return corpus;
}

void WriteCanonical(const Corpus &corpus, std::ostream &out) {
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) {
      const std::vector<std::size_t> records =
          corpus.RecordsOf(document.doc_id, sentence.sent_id);
      if (records.empty()) {
        out << LineJson(document.doc_id, sentence, nullptr).dump() << '\n';
        continue;
      }
      for (std::size_t index : records) {
        out << LineJson(document.doc_id, sentence, &corpus.records()[index])
                   .dump()
            << '\n';
      }
    }
  }
}

std::string WriteCanonicalString(const Corpus &corpus) {
  std::ostringstream out;
  WriteCanonical(corpus, out);
  return out.str();
}

}  // namespace negscope
