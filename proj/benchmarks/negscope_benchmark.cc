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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "negscope/corpus.h"
#include "negscope/cue_lexicon.h"
#include "negscope/evaluation.h"
#include "negscope/pipeline.h"
#include "negscope/rule_resolver.h"
#include "negscope/tokenizer.h"

namespace negscope {
namespace {

const char kSentence[] =
    "Seit dem 06.02.2017 ist der Kläger im Handelsregister nicht mehr als "
    "Geschäftsführer eingetragen (vgl. Auszug aus dem Handelsregister in "
    "Anlage K9, Bl 75 ff. d.A), und er hat keine Vollmacht.";

std::vector<std::string> RandomTokens(std::mt19937 &rng, std::size_t n) {
  static const std::vector<std::string> kVocab = {
      "der", "Kläger", "ist", "nicht", "mehr", "kein", ",", "(", ")", "und",
      "Anlage", "K9", "nie", "Vertrag", "zulässig", ";"};
  std::vector<std::string> tokens(n);
  for (std::string &t : tokens) t = kVocab[rng() % kVocab.size()];
  return tokens;
}

void BM_Tokenize(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(Tokenize(kSentence));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(sizeof(kSentence) - 1));
}
BENCHMARK(BM_Tokenize);

void BM_DetectCues(benchmark::State &state) {
  std::mt19937 rng(1);
  const auto tokens = RandomTokens(rng, static_cast<std::size_t>(state.range(0)));
  const CueLexicon &lexicon = CueLexicon::Default(Lang::kDe);
  for (auto _ : state) benchmark::DoNotOptimize(lexicon.Detect(tokens));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DetectCues)->Arg(16)->Arg(64)->Arg(256);

void BM_ResolveScope(benchmark::State &state) {
  const std::vector<std::string> tokens = TokenSurfaces(Tokenize(kSentence));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ResolveScope(tokens, {8, 9}, Lang::kDe));
  }
}
BENCHMARK(BM_ResolveScope);

void BM_EvaluateRun(benchmark::State &state) {
  std::mt19937 rng(2);
  Corpus gold;
  Corpus pred;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    NegationRecord record;
    record.doc_id = "d" + std::to_string(i / 50);
    record.sent_id = std::to_string(i % 50);
    record.source = "bench";
    record.tokens = RandomTokens(rng, 30);
    record.cue_indices = {static_cast<std::int32_t>(rng() % 30)};
    for (std::int32_t t = 0; t < 30; ++t) {
      if (t != record.cue_indices[0] && rng() % 2) record.scope_indices.push_back(t);
    }
    gold.AddRecord(record);
    IndexSet predicted;
    for (std::int32_t t = 0; t < 30; ++t) {
      if (t != record.cue_indices[0] && rng() % 2) predicted.push_back(t);
    }
    record.pred_scope_indices = predicted;
    pred.AddRecord(record);
  }
  for (auto _ : state) benchmark::DoNotOptimize(EvaluateRun(gold, pred));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateRun)->Arg(100)->Arg(1000);

void BM_AssignSplits(benchmark::State &state) {
  Corpus corpus;
  for (std::int64_t d = 0; d < state.range(0); ++d) {
    for (int s = 0; s < 5; ++s) {
      corpus.AddSentence("doc" + std::to_string(d),
                         Sentence{std::to_string(s), Lang::kDe, "bench",
                                  {"a", "."}, std::nullopt});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(AssignSplits(corpus));
}
BENCHMARK(BM_AssignSplits)->Arg(100)->Arg(1000);

}  // namespace
}  // namespace negscope

BENCHMARK_MAIN();
