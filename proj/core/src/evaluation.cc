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

#include "negscope/evaluation.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <tuple>

#include "negscope/errors.h"

namespace negscope {

Fixed2 Fixed2::FromRatio(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) return Fixed2();
  if (numerator < 0 || denominator < 0) {
    throw ArgumentError("Fixed2::FromRatio expects non-negative operands");
  }
  // floor(100 * n / d + 1/2) in integers.
  return FromHundredths((numerator * 200 + denominator) / (2 * denominator));
}

Fixed2 Fixed2::FromDouble(double x) {
  const double scaled = std::nearbyint(x * 100.0 * 1e6) / 1e6;
  return FromHundredths(static_cast<std::int64_t>(std::floor(scaled + 0.5)));
}

std::string Fixed2::ToString() const {
  const std::int64_t magnitude = std::llabs(hundredths_);
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%s%lld.%02lld",
                hundredths_ < 0 ? "-" : "",
                static_cast<long long>(magnitude / 100),
                static_cast<long long>(magnitude % 100));
  return buffer;
}

Confusion ComputeConfusion(const IndexSet &gold, const IndexSet &pred) {
  Confusion out;
  auto g = gold.begin();
  auto p = pred.begin();
  while (g != gold.end() && p != pred.end()) {
    if (*g == *p) {
      ++out.tp;
      ++g;
      ++p;
    } else if (*g < *p) {
      ++out.fn;
      ++g;
    } else {
      ++out.fp;
      ++p;
    }
  }
  out.fn += gold.end() - g;
  out.fp += pred.end() - p;
  return out;
}

Prf ComputePrf(const Confusion &c) {
  Prf out;
  if (c.tp == 0 && c.fp == 0 && c.fn == 0) {
    out.precision = out.recall = out.f1 = 1.0;
    return out;
  }
  out.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) /
                                        static_cast<double>(c.tp + c.fp)
                                  : 0.0;
  out.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) /
                                     static_cast<double>(c.tp + c.fn)
                               : 0.0;
  const double sum = out.precision + out.recall;
  out.f1 = sum > 0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

EvalMode ParseEvalMode(std::string_view name) {
  if (name == "strict") return EvalMode::kStrict;
  if (name == "lenient") return EvalMode::kLenient;
  throw ArgumentError("unknown eval mode '" + std::string(name) +
                      "' (expected strict or lenient)");
}

std::string DatasetKey::Label() const {
  return source + "/" + std::string(LangName(lang));
}

std::vector<JoinedInstance> JoinPredictions(const Corpus &gold,
                                            const Corpus &pred,
                                            EvalMode mode) {
  using Key = std::tuple<std::string, std::string, IndexSet>;
  std::set<Key> gold_keys;
  for (const NegationRecord &record : gold.records()) {
    gold_keys.emplace(record.doc_id, record.sent_id, record.cue_indices);
  }
  std::map<Key, const NegationRecord *> predictions;
  for (const NegationRecord &record : pred.records()) {
    Key key{record.doc_id, record.sent_id, record.cue_indices};
    if (!gold_keys.contains(key)) {
      throw ValidationError(record.Key(), "prediction has no gold instance");
    }
    predictions.emplace(std::move(key), &record);
  }

  std::vector<JoinedInstance> joined;
  joined.reserve(gold.records().size());
  for (const NegationRecord &record : gold.records()) {
    JoinedInstance instance;
    instance.gold = &record;
    auto it = predictions.find(
        Key{record.doc_id, record.sent_id, record.cue_indices});
    if (it != predictions.end() && it->second->tokens != record.tokens) {
      throw ConsistencyError(record.Key(),
                             "prediction tokens differ from gold tokens");
    }
    if (it == predictions.end() || !it->second->pred_scope_indices) {
      if (mode == EvalMode::kStrict) {
        throw ValidationError(record.Key(), "gold instance has no prediction");
      }
      instance.missing = true;
    } else {
      instance.pred = *it->second->pred_scope_indices;
    }
    joined.push_back(std::move(instance));
  }
  return joined;
}

EvalReport EvaluateRun(const Corpus &gold, const Corpus &pred, EvalMode mode) {
  EvalReport report;
  for (const JoinedInstance &instance : JoinPredictions(gold, pred, mode)) {
    const Confusion confusion =
        ComputeConfusion(instance.gold->scope_indices, instance.pred);
    report.confusion += confusion;
    ++report.instance_count;
    if (instance.missing) ++report.missing_predictions;
    DatasetScore &dataset =
        report.per_dataset[DatasetKey{instance.gold->source, instance.gold->lang}];
    dataset.confusion += confusion;
    ++dataset.instance_count;
  }
  report.prf = ComputePrf(report.confusion);
  for (auto &[key, dataset] : report.per_dataset) {
    dataset.prf = ComputePrf(dataset.confusion);
  }
  return report;
}

std::string RunAggregate::ToString() const {
  return Fixed2::FromDouble(mean_f1 * 100.0).ToString() + "±" +
         Fixed2::FromDouble(std_f1 * 100.0).ToString();
}

RunAggregate AggregateRuns(std::span<const double> f1_values) {
  if (f1_values.size() < 2) {
    throw ArgumentError("need at least 2 runs to aggregate, got " +
                        std::to_string(f1_values.size()));
  }
  for (double value : f1_values) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ArgumentError("F1 value outside [0, 1]");
    }
  }
  // Deviations are taken from the first run so identical runs give an exact
  // mean and a zero spread.
  const double origin = f1_values.front();
  double shift = 0.0;
  for (double value : f1_values) shift += value - origin;
  RunAggregate out;
  out.run_count = f1_values.size();
  const auto n = static_cast<double>(out.run_count);
  out.mean_f1 = origin + shift / n;
  double squares = 0.0;
  for (double value : f1_values) {
    const double deviation = (value - origin) - shift / n;
    squares += deviation * deviation;
  }
  out.std_f1 = std::sqrt(squares / (n - 1.0));
  return out;
}

Fixed2 CorpusStats::PctNegated() const {
  return Fixed2::FromRatio(100 * negated_sentences, total_sentences);
}

Fixed2 CorpusStats::MeanTokensPerSentence() const {
  return Fixed2::FromRatio(sentence_tokens, total_sentences);
}

Fixed2 CorpusStats::PctScopeTokens() const {
  return Fixed2::FromRatio(100 * scope_tokens, record_tokens);
}

Fixed2 CorpusStats::PctScopeTokensPerInstance() const {
  if (instance_count == 0) return Fixed2();
  return Fixed2::FromDouble(100.0 * instance_scope_ratio_sum /
                            static_cast<double>(instance_count));
}

namespace {

void AddSentence(const Corpus &corpus, const std::string &doc_id,
                 const Sentence &sentence, CorpusStats *stats) {
  ++stats->total_sentences;
  stats->sentence_tokens += static_cast<std::int64_t>(sentence.tokens.size());
  const std::vector<std::size_t> records =
      corpus.RecordsOf(doc_id, sentence.sent_id);
  if (!records.empty()) ++stats->negated_sentences;
  for (std::size_t index : records) {
    const NegationRecord &record = corpus.records()[index];
    const auto tokens = static_cast<std::int64_t>(record.tokens.size());
    const auto scope = static_cast<std::int64_t>(record.scope_indices.size());
    ++stats->instance_count;
    stats->record_tokens += tokens;
    stats->scope_tokens += scope;
    stats->instance_scope_ratio_sum +=
        static_cast<double>(scope) / static_cast<double>(tokens);
  }
}

}  // namespace

CorpusStats ComputeStats(const Corpus &corpus) {
  CorpusStats stats;
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) {
      AddSentence(corpus, document.doc_id, sentence, &stats);
    }
  }
  return stats;
}

std::vector<std::pair<DatasetKey, CorpusStats>> StatsByDataset(
    const Corpus &corpus) {
  std::map<DatasetKey, CorpusStats> by_key;
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) {
      AddSentence(corpus, document.doc_id, sentence,
                  &by_key[DatasetKey{sentence.source, sentence.lang}]);
    }
  }
  return {by_key.begin(), by_key.end()};
}

double ScopeLengthCounts::actual_ratio() const {
  return tokens == 0 ? 0.0
                     : static_cast<double>(actual_scope_tokens) /
                           static_cast<double>(tokens);
}

double ScopeLengthCounts::predicted_ratio() const {
  return tokens == 0 ? 0.0
                     : static_cast<double>(predicted_scope_tokens) /
                           static_cast<double>(tokens);
}

ScopeLengthReport ComputeScopeLength(const Corpus &gold, const Corpus &pred,
                                     EvalMode mode) {
  ScopeLengthReport report;
  for (const JoinedInstance &instance : JoinPredictions(gold, pred, mode)) {
    const NegationRecord &record = *instance.gold;
    for (ScopeLengthCounts *counts :
         {&report.overall,
          &report.per_dataset[DatasetKey{record.source, record.lang}]}) {
      counts->tokens += static_cast<std::int64_t>(record.tokens.size());
      counts->actual_scope_tokens +=
          static_cast<std::int64_t>(record.scope_indices.size());
      counts->predicted_scope_tokens +=
          static_cast<std::int64_t>(instance.pred.size());
      ++counts->instance_count;
    }
  }
  return report;
}

}  // namespace negscope
