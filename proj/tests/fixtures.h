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

// Shared fixtures: annotated guideline sentences and random corpora.

#ifndef NEGSCOPE_TESTS_FIXTURES_H_
#define NEGSCOPE_TESTS_FIXTURES_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/record.h"

namespace negscope::testing {

// A sentence with one gold-annotated negation. Indices refer to `tokens`.
struct GuidelineCase {
  std::string text;
  std::vector<std::string> tokens;
  IndexSet cues;
  IndexSet gold_scope;
  Lang lang = Lang::kDe;
};

inline IndexSet Range(std::int32_t first, std::int32_t last) {
  IndexSet out(static_cast<std::size_t>(last - first + 1));
  std::iota(out.begin(), out.end(), first);
  return out;
}

inline IndexSet Concat(const IndexSet &a, const IndexSet &b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  for (std::int32_t i : a) out.push_back(i);
  for (std::int32_t i : b) out.push_back(i);
  return out;
}

// Subordinate clause after a comma stays inside the scope, and so does a
// second cue that is not the one being resolved.
inline GuidelineCase MaximumScopeCase() {
  return {"Vorliegend ginge es nicht darum, dass ein Arbeitgeber über Fristen "
          "oder Pflichten nicht aufgeklärt habe, somit eine blosse Untätigkeit "
          "des Arbeitgebers",
          {"Vorliegend", "ginge", "es", "nicht", "darum", ",", "dass", "ein",
           "Arbeitgeber", "über", "Fristen", "oder", "Pflichten", "nicht",
           "aufgeklärt", "habe", ",", "somit", "eine", "blosse", "Untätigkeit",
           "des", "Arbeitgebers"},
          {3},
          Concat(Range(0, 2), Range(4, 22))};
}

// Inline citation belongs to the scope; the leading "Da" does not.
inline GuidelineCase InlineCitationCase() {
  return {"Da der Kläger kein ähnlicher leitender Angestellter i.S.d 14 Abs. "
          "2Satz 2 KSchG ist",
          {"Da", "der", "Kläger", "kein", "ähnlicher", "leitender",
           "Angestellter", "i.S.d", "14", "Abs.", "2Satz", "2", "KSchG", "ist"},
          {3},
          Concat(Range(1, 2), Range(4, 13))};
}

// Parenthesized citation and the final period stay outside the scope.
inline GuidelineCase ParentheticalCitationCase() {
  return {"Seit dem 06.02.2017 ist der Kläger im Handelsregister nicht mehr als "
          "Geschäftsführer eingetragen (vgl. Auszug aus dem Handelsregister in "
          "Anlage K9, Bl 75 ff. d.A).",
          {"Seit", "dem", "06.02.2017", "ist", "der", "Kläger", "im",
           "Handelsregister", "nicht", "mehr", "als", "Geschäftsführer",
           "eingetragen", "(", "vgl.", "Auszug", "aus", "dem",
           "Handelsregister", "in", "Anlage", "K9", ",", "Bl", "75", "ff.",
           "d.A", ")", "."},
          {8, 9},
          Concat(Range(0, 7), Range(10, 12))};
}

// Discontinuous French cue with an anonymized initial as the subject. The
// elided article is split by hand to mirror the annotation.
inline GuidelineCase InitialSubjectCase() {
  return {"E._ ne disposait d' aucune autonomie budgétaire;",
          {"E._", "ne", "disposait", "d'", "aucune", "autonomie", "budgétaire",
           ";"},
          {1, 4},
          {0, 2, 3, 5, 6},
          Lang::kFr};
}

// Gold scope skips the contrasting phrase before the cue; a clause-window
// heuristic cannot reproduce that gap.
inline GuidelineCase ContrastInterruptedCase() {
  return {"Eine ordentliche Kündigung ist während der vereinbarten Laufzeit "
          "beiderseits nur zum Vertragsende und nicht zu einem früheren "
          "Zeitpunkt zulässig.",
          {"Eine", "ordentliche", "Kündigung", "ist", "während", "der",
           "vereinbarten", "Laufzeit", "beiderseits", "nur", "zum",
           "Vertragsende", "und", "nicht", "zu", "einem", "früheren",
           "Zeitpunkt", "zulässig", "."},
          {13},
          Concat(Range(0, 8), Range(14, 18))};
}

inline NegationRecord RecordFor(const GuidelineCase &c,
                                const std::string &doc_id = "d",
                                const std::string &sent_id = "1") {
  NegationRecord record;
  record.doc_id = doc_id;
  record.sent_id = sent_id;
  record.lang = c.lang;
  record.source = "guideline";
  record.tokens = c.tokens;
  record.cue_indices = c.cues;
  record.scope_indices = c.gold_scope;
  return record;
}

// `total` sentences of which the first `negated` carry one record each.
inline Corpus SentenceCountCorpus(int total, int negated,
                                  const std::string &source = "court",
                                  Lang lang = Lang::kFr) {
  Corpus corpus;
  for (int i = 0; i < total; ++i) {
    const std::string doc_id = "doc" + std::to_string(i / 20);
    const std::string sent_id = std::to_string(i % 20);
    if (i < negated) {
      corpus.AddRecord(NegationRecord{doc_id, sent_id, lang, source,
                                      {"Il", "ne", "vient", "pas", "."},
                                      {1, 3}, {0, 2}, std::nullopt,
                                      std::nullopt});
    } else {
      corpus.AddSentence(doc_id, Sentence{sent_id, lang, source,
                                          {"Il", "vient", "."},
                                          std::nullopt});
    }
  }
  return corpus;
}

// Random valid corpora for property tests.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64 &rng() { return rng_; }

  std::vector<std::string> Tokens(int min_len, int max_len) {
    static const std::vector<std::string> kVocab = {
        "der", "Kläger", "ist", "nicht", "mehr", "E._", "ne", "pas",
        "d'aucune", "Abs.", "14", "KSchG", ",", "(", ")", ";", "très",
        "perché", "«", "»", "K9", "zulässig", "und", "Ä\"x"};
    std::vector<std::string> tokens(static_cast<std::size_t>(
        Uniform(min_len, max_len)));
    for (std::string &t : tokens) {
      t = kVocab[static_cast<std::size_t>(
          Uniform(0, static_cast<int>(kVocab.size()) - 1))];
    }
    return tokens;
  }

  IndexSet Subset(std::size_t n, const IndexSet &excluded, double p) {
    IndexSet out;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(n); ++i) {
      if (std::find(excluded.begin(), excluded.end(), i) != excluded.end()) {
        continue;
      }
      if (Coin(p)) out.push_back(i);
    }
    return out;
  }

  // Documents with 1-4 sentences; each sentence gets 0-3 records with
  // pairwise-disjoint cue sets. Splits are set per document when enabled.
  Corpus Make(bool with_splits = true, bool with_predictions = true) {
    Corpus corpus;
    const int doc_count = Uniform(1, 4);
    const Lang langs[] = {Lang::kDe, Lang::kFr, Lang::kIt, Lang::kEn};
    for (int d = 0; d < doc_count; ++d) {
      const std::string doc_id = "doc" + std::to_string(Uniform(0, 99)) +
                                 "_" + std::to_string(d);
      std::optional<Split> split;
      if (with_splits && Coin()) split = static_cast<Split>(Uniform(0, 2));
      const Lang lang = langs[Uniform(0, 3)];
      const std::string source = Coin() ? "court" : "sherlock";
      const int sentence_count = Uniform(1, 4);
      for (int s = 0; s < sentence_count; ++s) {
        const std::vector<std::string> tokens = Tokens(1, 12);
        const std::string sent_id = std::to_string(s);
        IndexSet order(tokens.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_);
        const int record_count = Uniform(0, 3);
        std::size_t used = 0;
        int made = 0;
        for (int r = 0; r < record_count && used < order.size(); ++r) {
          const std::size_t cue_len = std::min<std::size_t>(
              static_cast<std::size_t>(Uniform(1, 2)), order.size() - used);
          IndexSet cues(order.begin() + static_cast<std::ptrdiff_t>(used),
                        order.begin() +
                            static_cast<std::ptrdiff_t>(used + cue_len));
          used += cue_len;
          std::sort(cues.begin(), cues.end());
          NegationRecord record;
          record.doc_id = doc_id;
          record.sent_id = sent_id;
          record.lang = lang;
          record.source = source;
          record.tokens = tokens;
          record.cue_indices = cues;
          record.scope_indices = Subset(tokens.size(), cues, 0.5);
          record.split = split;
          if (with_predictions && Coin()) {
            record.pred_scope_indices = Subset(tokens.size(), cues, 0.5);
          }
          corpus.AddRecord(std::move(record));
          ++made;
        }
        if (made == 0) {
          corpus.AddSentence(doc_id, Sentence{sent_id, lang, source, tokens,
                                              split});
        }
      }
    }
    return corpus;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace negscope::testing

#endif  // NEGSCOPE_TESTS_FIXTURES_H_
