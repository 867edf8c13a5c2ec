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

#include "negscope/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "negscope/errors.h"

namespace negscope {

bool ScoreRanksBefore(const DocumentScore &a, const DocumentScore &b) {
  // a.cue / a.tok vs b.cue / b.tok without rounding.
  const std::int64_t left = a.cue_count * b.token_count;
  const std::int64_t right = b.cue_count * a.token_count;
  if (left != right) return left > right;
  if (a.cue_count != b.cue_count) return a.cue_count > b.cue_count;
  return a.doc_id < b.doc_id;
}

std::vector<DocumentScore> ScoreDocuments(const Corpus &corpus,
                                          const CueLexicon &lexicon) {
  std::vector<DocumentScore> scores;
  scores.reserve(corpus.documents().size());
  for (const Document &document : corpus.documents()) {
    DocumentScore score;
    score.doc_id = document.doc_id;
    for (const Sentence &sentence : document.sentences) {
      score.token_count += static_cast<std::int64_t>(sentence.tokens.size());
      for (const CueMatch &match : lexicon.Detect(sentence.tokens)) {
        score.cue_count += static_cast<std::int64_t>(match.indices.size());
      }
    }
    if (score.token_count == 0) {
      throw ValidationError(document.doc_id, "document has no tokens");
    }
    score.density = static_cast<double>(score.cue_count) /
                    static_cast<double>(score.token_count);
    scores.push_back(std::move(score));
  }
  std::sort(scores.begin(), scores.end(), ScoreRanksBefore);
  return scores;
}

void WriteScoreReport(const std::vector<DocumentScore> &scores,
                      std::ostream &out) {
  out << "doc_id\tcue_count\ttoken_count\tdensity\n";
  char density[32];
  for (const DocumentScore &score : scores) {
    std::snprintf(density, sizeof(density), "%.6f", score.density);
    out << score.doc_id << '\t' << score.cue_count << '\t'
        << score.token_count << '\t' << density << '\n';
  }
}

std::vector<std::string> SelectTop(const std::vector<DocumentScore> &scores,
                                   std::size_t k) {
  if (k > scores.size()) {
    throw ArgumentError("cannot select " + std::to_string(k) +
                        " documents out of " + std::to_string(scores.size()));
  }
  std::vector<std::string> selected;
  selected.reserve(k);
  for (std::size_t i = 0; i < k; ++i) selected.push_back(scores[i].doc_id);
  return selected;
}

void ValidateRatios(const SplitRatios &ratios) {
  for (int ratio : ratios) {
    if (ratio < 0) throw ArgumentError("ratios must be non-negative");
  }
  if (ratios[0] + ratios[1] + ratios[2] != 100) {
    throw ArgumentError("ratios must sum to 100");
  }
}

std::uint32_t SplitRng::Next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return static_cast<std::uint32_t>(state_ >> 32);
}

namespace {

// Largest-remainder apportionment of `total` by percentages. Remainder ties
// go to the earlier split.
std::array<std::int64_t, 3> SentenceTargets(std::int64_t total,
                                            const SplitRatios &ratios) {
  std::array<std::int64_t, 3> targets{};
  std::array<std::int64_t, 3> remainders{};
  std::int64_t assigned = 0;
  for (int s = 0; s < 3; ++s) {
    targets[s] = total * ratios[s] / 100;
    remainders[s] = total * ratios[s] % 100;
    assigned += targets[s];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return remainders[a] > remainders[b];
  });
  for (int i = 0; assigned < total; ++i, ++assigned) ++targets[order[i]];
  return targets;
}

// Position p in [low, high] minimizing |prefix[p] - target|.
std::size_t ClosestCut(const std::vector<std::int64_t> &prefix,
                       std::int64_t target, std::size_t low,
                       std::size_t high) {
  std::size_t best = low;
  for (std::size_t p = low; p <= high; ++p) {
    if (std::llabs(prefix[p] - target) < std::llabs(prefix[best] - target)) {
      best = p;
    }
  }
  return best;
}

}  // namespace

SplitAssignment AssignSplits(const Corpus &corpus, const SplitRatios &ratios,
                             std::uint64_t seed) {
  ValidateRatios(ratios);
  const std::size_t n = corpus.documents().size();
  if (n < 3) {
    throw ArgumentError("need at least 3 documents to split, got " +
                        std::to_string(n));
  }

  std::vector<const Document *> documents;
  for (const Document &document : corpus.documents()) {
    documents.push_back(&document);
  }
  std::sort(documents.begin(), documents.end(),
            [](const Document *a, const Document *b) {
              return a->doc_id < b->doc_id;
            });
  SplitRng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = rng.Below(static_cast<std::uint32_t>(i + 1));
    std::swap(documents[i], documents[j]);
  }

  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] =
        prefix[i] + static_cast<std::int64_t>(documents[i]->sentences.size());
  }
  const auto targets = SentenceTargets(prefix[n], ratios);
  const std::size_t need_train = ratios[0] > 0 ? 1 : 0;
  const std::size_t need_test = ratios[1] > 0 ? 1 : 0;
  const std::size_t need_validation = ratios[2] > 0 ? 1 : 0;

  const std::size_t first_cut = ClosestCut(
      prefix, targets[0], need_train, n - need_test - need_validation);
  const std::size_t second_cut =
      ClosestCut(prefix, targets[0] + targets[1], first_cut + need_test,
                 n - need_validation);

  SplitAssignment assignment;
  for (std::size_t i = 0; i < n; ++i) {
    const Split split = i < first_cut    ? Split::kTrain
                        : i < second_cut ? Split::kTest
                                         : Split::kValidation;
    assignment.emplace(documents[i]->doc_id, split);
  }
  return assignment;
}

}  // namespace negscope
