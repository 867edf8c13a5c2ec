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

#ifndef NEGSCOPE_EVALUATION_H_
#define NEGSCOPE_EVALUATION_H_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/record.h"

namespace negscope {

// A non-negative decimal rounded half-up to two places, stored exactly as a
// count of hundredths. All percentages in reports go through this type.
class Fixed2 {
 public:
  constexpr Fixed2() = default;

  static constexpr Fixed2 FromHundredths(std::int64_t hundredths) {
    Fixed2 out;
    out.hundredths_ = hundredths;
    return out;
  }

  // numerator / denominator, exactly rounded. Zero when denominator is 0.
  static Fixed2 FromRatio(std::int64_t numerator, std::int64_t denominator);

  // Rounds x; x * 100 is first snapped to 1e-6 so that values such as
  // 0.125 * 100 round up despite binary representation error.
  static Fixed2 FromDouble(double x);

  std::int64_t hundredths() const { return hundredths_; }
  double value() const { return static_cast<double>(hundredths_) / 100.0; }

  // "36.07"
  std::string ToString() const;

  friend auto operator<=>(const Fixed2 &, const Fixed2 &) = default;

 private:
  std::int64_t hundredths_ = 0;
};

// Token-level confusion counts for scope membership.
struct Confusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  Confusion &operator+=(const Confusion &other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }

  friend bool operator==(const Confusion &, const Confusion &) = default;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// tp = |gold ∩ pred|, fp = |pred \ gold|, fn = |gold \ pred|.
Confusion ComputeConfusion(const IndexSet &gold, const IndexSet &pred);

// P = tp / (tp + fp) and R = tp / (tp + fn). An empty denominator gives 0,
// except that all-zero counts (nothing to find, nothing predicted) give
// P = R = 1. F1 = 2PR / (P + R), or 0 when P + R = 0.
Prf ComputePrf(const Confusion &confusion);

// strict: every gold instance needs a prediction.
// lenient: a missing prediction is scored as an empty scope.
enum class EvalMode { kStrict, kLenient };

EvalMode ParseEvalMode(std::string_view name);

struct DatasetKey {
  std::string source;
  Lang lang = Lang::kDe;

  // "source/lang"
  std::string Label() const;

  friend auto operator<=>(const DatasetKey &, const DatasetKey &) = default;
};

struct DatasetScore {
  Confusion confusion;
  Prf prf;
  std::size_t instance_count = 0;
};

struct EvalReport {
  Confusion confusion;
  Prf prf;
  std::size_t instance_count = 0;
  std::size_t missing_predictions = 0;
  std::map<DatasetKey, DatasetScore> per_dataset;
};

// One gold instance paired with its prediction.
struct JoinedInstance {
  const NegationRecord *gold = nullptr;
  IndexSet pred;
  bool missing = false;
};

// Pairs gold and predicted records on (doc_id, sent_id, cue_indices). The
// prediction is a record's pred_scope_indices. Throws ValidationError for a
// prediction without a gold partner, and in strict mode for a gold instance
// without a prediction; ConsistencyError if the partners' tokens differ.
std::vector<JoinedInstance> JoinPredictions(const Corpus &gold,
                                            const Corpus &pred, EvalMode mode);

// Micro-averaged token-level scores: confusions are summed over all instances
// (and per dataset), then turned into P/R/F1.
EvalReport EvaluateRun(const Corpus &gold, const Corpus &pred,
                       EvalMode mode = EvalMode::kStrict);

// Mean and sample standard deviation (n - 1) of F1 over seeds.
struct RunAggregate {
  double mean_f1 = 0.0;
  double std_f1 = 0.0;
  std::size_t run_count = 0;

  // Percent with two decimals, e.g. "66.98±0.32".
  std::string ToString() const;
};

// Throws ArgumentError for fewer than two values or values outside [0, 1].
RunAggregate AggregateRuns(std::span<const double> f1_values);

struct CorpusStats {
  std::int64_t total_sentences = 0;
  std::int64_t negated_sentences = 0;
  std::int64_t instance_count = 0;
  std::int64_t sentence_tokens = 0;  // over all sentences
  std::int64_t record_tokens = 0;    // over negation instances
  std::int64_t scope_tokens = 0;     // over negation instances
  double instance_scope_ratio_sum = 0.0;

  Fixed2 PctNegated() const;
  Fixed2 MeanTokensPerSentence() const;
  // Pooled: 100 * scope_tokens / record_tokens.
  Fixed2 PctScopeTokens() const;
  // Mean over instances of 100 * |scope| / |tokens|.
  Fixed2 PctScopeTokensPerInstance() const;
};

// Sentence and scope statistics. A sentence is negated if at least one record
// refers to it; a sentence duplicated for several cues counts once for the
// sentence figures and once per instance for the scope figures.
CorpusStats ComputeStats(const Corpus &corpus);
std::vector<std::pair<DatasetKey, CorpusStats>> StatsByDataset(
    const Corpus &corpus);

struct ScopeLengthCounts {
  std::int64_t tokens = 0;
  std::int64_t actual_scope_tokens = 0;
  std::int64_t predicted_scope_tokens = 0;
  std::size_t instance_count = 0;

  // Fractions of instance tokens in the gold / predicted scope.
  double actual_ratio() const;
  double predicted_ratio() const;
};

struct ScopeLengthReport {
  ScopeLengthCounts overall;
  std::map<DatasetKey, ScopeLengthCounts> per_dataset;

  double actual_ratio() const { return overall.actual_ratio(); }
  double predicted_ratio() const { return overall.predicted_ratio(); }
};

ScopeLengthReport ComputeScopeLength(const Corpus &gold, const Corpus &pred,
                                     EvalMode mode = EvalMode::kStrict);

}  // namespace negscope

#endif  // NEGSCOPE_EVALUATION_H_
