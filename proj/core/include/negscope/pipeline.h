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

#ifndef NEGSCOPE_PIPELINE_H_
#define NEGSCOPE_PIPELINE_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/cue_lexicon.h"

namespace negscope {

// Per-document negation score used to pick documents for annotation.
struct DocumentScore {
  std::string doc_id;
  std::int64_t cue_count = 0;    // tokens covered by cue matches
  std::int64_t token_count = 0;  // all tokens of the document
  double density = 0.0;          // cue_count / token_count

  friend bool operator==(const DocumentScore &, const DocumentScore &) =
      default;
};

// Score ordering: density descending, then cue_count descending, then doc_id
// ascending. Densities are compared as exact fractions.
bool ScoreRanksBefore(const DocumentScore &a, const DocumentScore &b);

// Scores every document of `corpus` with `lexicon`, ranked by
// ScoreRanksBefore. Throws ValidationError for a document without tokens.
std::vector<DocumentScore> ScoreDocuments(const Corpus &corpus,
                                          const CueLexicon &lexicon);

// Tab-separated: doc_id, cue_count, token_count, density (6 decimals), with a
// header line.
void WriteScoreReport(const std::vector<DocumentScore> &scores,
                      std::ostream &out);

// The first k doc_ids of a ranked score list. Throws ArgumentError if k
// exceeds the number of documents.
std::vector<std::string> SelectTop(const std::vector<DocumentScore> &scores,
                                   std::size_t k);

// Percentages for train, test, validation. Must sum to 100.
using SplitRatios = std::array<int, 3>;
inline constexpr SplitRatios kDefaultRatios = {70, 20, 10};

// Throws ArgumentError unless all ratios are non-negative and sum to 100.
void ValidateRatios(const SplitRatios &ratios);

using SplitAssignment = std::map<std::string, Split>;

// Portable 64-bit linear congruential generator (Knuth's MMIX constants),
// so split assignments are reproducible across platforms and
// implementations:
//   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// Next() returns the high 32 bits of the new state.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}

  std::uint32_t Next();

  // Uniform-ish integer in [0, bound) as Next() % bound.
  std::uint32_t Below(std::uint32_t bound) { return Next() % bound; }

 private:
  std::uint64_t state_;
};

// Assigns whole documents to train/test/validation.
//
// Documents are sorted by doc_id, shuffled by Fisher-Yates driven by
// SplitRng(seed), and cut into three contiguous runs. Sentence targets per
// split come from the largest-remainder method on the total sentence count;
// each cut is placed at the document boundary whose cumulative sentence count
// is closest to the cumulative target (ties go to the earlier boundary).
// Every split with a non-zero ratio receives at least one document.
//
// Throws ArgumentError for invalid ratios or fewer than 3 documents.
SplitAssignment AssignSplits(const Corpus &corpus,
                             const SplitRatios &ratios = kDefaultRatios,
                             std::uint64_t seed = 0);

}  // namespace negscope

#endif  // NEGSCOPE_PIPELINE_H_
