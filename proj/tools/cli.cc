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

#include "cli.h"

#include <glob.h>
#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "negscope/canonical_io.h"
#include "negscope/corpus.h"
#include "negscope/cue_lexicon.h"
#include "negscope/errors.h"
#include "negscope/evaluation.h"
#include "negscope/pipeline.h"
#include "negscope/report.h"
#include "negscope/rule_resolver.h"
#include "negscope/sentence_io.h"
#include "negscope/starsem_io.h"

namespace negscope::cli {
namespace {

namespace fs = std::filesystem;

// Problems with the invocation itself: exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-data problems tagged with the file they came from: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvocationConfig {
  std::string input;
  std::string output;
  std::string lexicon;
  std::string lang;
  std::string source;
  std::string from;
  std::string to;
  std::string ratios = "70,20,10";
  std::uint64_t seed = 0;
  std::size_t top = 0;
  std::string docs;
  std::string mode = "strict";
  std::string format = "table";
  std::string scope_ratio = "pooled";
  std::string gold;
  std::string pred;
  std::string runs;
  std::string boundaries;
  std::string conjunctions;
  bool drop_unnegated = false;
};

bool EndsWith(const std::string &text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsCanonicalPath(const std::string &path) { return EndsWith(path, ".jsonl"); }

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// Runs a parser over `path`, re-throwing data errors with the file name.
template <typename Fn>
auto ParseFile(const std::string &path, Fn &&parse) {
  std::ifstream in = OpenInput(path);
  try {
    return parse(in);
  } catch (const FormatError &e) {
    throw InputError(path + ": " + e.what());
  } catch (const ValidationError &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string DefaultSource(const std::string &path) {
  std::string stem = fs::path(path).filename().string();
  for (std::string_view suffix : {".neg.jsonl", ".jsonl", ".tsv", ".txt"}) {
    if (EndsWith(stem, suffix)) return stem.substr(0, stem.size() - suffix.size());
  }
  return fs::path(path).stem().string();
}

std::optional<Lang> OptionalLang(const InvocationConfig &config) {
  if (config.lang.empty()) return std::nullopt;
  try {
    return ParseLang(config.lang);
  } catch (const ArgumentError &e) {
    throw UsageError(e.what());
  }
}

// Canonical files carry their own language; raw sentence files need --lang.
Corpus LoadCorpus(const InvocationConfig &config, const std::string &path) {
  if (IsCanonicalPath(path)) {
    return ParseFile(path, [](std::istream &in) { return ReadCanonical(in); });
  }
  const std::optional<Lang> lang = OptionalLang(config);
  if (!lang) {
    throw UsageError("--lang is required for raw sentence input '" + path + "'");
  }
  const std::string source =
      config.source.empty() ? DefaultSource(path) : config.source;
  return ParseFile(path, [&](std::istream &in) {
    return ReadSentences(in, *lang, source);
  });
}

Lang CorpusLang(const InvocationConfig &config, const Corpus &corpus) {
  if (std::optional<Lang> lang = OptionalLang(config)) return *lang;
  std::set<Lang> langs;
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) langs.insert(sentence.lang);
  }
  if (langs.size() != 1) {
    throw UsageError("cannot infer the language; pass --lang");
  }
  return *langs.begin();
}

CueLexicon LoadLexiconFor(const InvocationConfig &config, Lang lang,
                          std::ostream &err) {
  if (config.lexicon.empty()) return CueLexicon::Default(lang);
  LexiconLoad load = ParseFile(config.lexicon, [lang](std::istream &in) {
    return LoadLexicon(in, lang);
  });
  for (const std::string &warning : load.warnings) {
    err << config.lexicon << ": warning: " << warning << '\n';
  }
  return std::move(load.lexicon);
}

// Writes through a temporary file renamed on success, or to `out`.
void Emit(const InvocationConfig &config, const std::string &content,
          std::ostream &out) {
  if (config.output.empty()) {
    out << content;
    return;
  }
  const fs::path target(config.output);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + temp.string() + "'");
    file << content;
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw UsageError("failed writing '" + temp.string() + "'");
    }
  }
  std::error_code error;
  fs::rename(temp, target, error);
  if (error) {
    fs::remove(temp, error);
    throw UsageError("cannot move output into place at '" + config.output + "'");
  }
}

void CheckOutputPath(const InvocationConfig &config) {
  if (config.output.empty()) return;
  fs::path parent = fs::path(config.output).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw UsageError("output directory '" + parent.string() + "' does not exist");
  }
}

SplitRatios ParseRatios(const std::string &text) {
  SplitRatios ratios{};
  std::istringstream in(text);
  std::string part;
  std::size_t count = 0;
  while (std::getline(in, part, ',')) {
    if (count == 3) break;
    try {
      std::size_t used = 0;
      ratios[count] = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception &) {
      throw UsageError("--ratios expects three comma-separated integers");
    }
    ++count;
  }
  if (count != 3 || in.rdbuf()->in_avail() > 0 || !in.eof()) {
    throw UsageError("--ratios expects three comma-separated integers");
  }
  return ratios;
}

std::vector<std::string> ExpandGlob(const std::string &pattern) {
  glob_t matches{};
  const int status = ::glob(pattern.c_str(), 0, nullptr, &matches);
  std::vector<std::string> paths;
  if (status == 0) {
    for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
      paths.emplace_back(matches.gl_pathv[i]);
    }
  }
  ::globfree(&matches);
  if (paths.empty()) throw UsageError("--runs '" + pattern + "' matches no files");
  std::sort(paths.begin(), paths.end());
  return paths;
}

// Subcommands -------------------------------------------------------------

void RunConvert(const InvocationConfig &config, std::ostream &out,
                std::ostream &err) {
  Corpus corpus;
  if (config.from == "starsem") {
    const std::optional<Lang> lang = OptionalLang(config);
    if (!lang) throw UsageError("--lang is required with --from starsem");
    const std::string source =
        config.source.empty() ? DefaultSource(config.input) : config.source;
    StarSemResult result = ParseFile(config.input, [&](std::istream &in) {
      return ParseStarSem(in, *lang, source);
    });
    for (const std::string &warning : result.warnings) {
      err << config.input << ": warning: " << warning << '\n';
    }
    corpus = std::move(result.corpus);
  } else {
    corpus = ParseFile(config.input,
                       [](std::istream &in) { return ReadCanonical(in); });
  }

  std::ostringstream content;
  if (config.to == "starsem") {
    try {
      WriteStarSem(corpus, content);
    } catch (const ValidationError &e) {
      throw InputError(config.input + ": " + e.what());
    }
  } else {
    WriteCanonical(corpus, content);
  }
  Emit(config, content.str(), out);
}

void RunStats(const InvocationConfig &config, std::ostream &out) {
  const Corpus corpus = LoadCorpus(config, config.input);
  std::ostringstream content;
  WriteStatsReport(corpus, ParseScopeRatioMode(config.scope_ratio),
                   ParseReportFormat(config.format), content);
  Emit(config, content.str(), out);
}

std::vector<DocumentScore> Scores(const InvocationConfig &config,
                                  const Corpus &corpus, std::ostream &err) {
  const CueLexicon lexicon =
      LoadLexiconFor(config, CorpusLang(config, corpus), err);
  try {
    return ScoreDocuments(corpus, lexicon);
  } catch (const ValidationError &e) {
    throw InputError(config.input + ": " + e.what());
  }
}

void RunScore(const InvocationConfig &config, std::ostream &out,
              std::ostream &err) {
  const Corpus corpus = LoadCorpus(config, config.input);
  std::ostringstream content;
  WriteScoreReport(Scores(config, corpus, err), content);
  Emit(config, content.str(), out);
}

void RunSelect(const InvocationConfig &config, std::ostream &out,
               std::ostream &err) {
  const Corpus corpus = LoadCorpus(config, config.input);
  std::ostringstream content;
  for (const std::string &doc_id :
       SelectTop(Scores(config, corpus, err), config.top)) {
    content << doc_id << '\n';
  }
  Emit(config, content.str(), out);
}

void RunSplit(const InvocationConfig &config, std::ostream &out,
              std::ostream &err) {
  const SplitRatios ratios = ParseRatios(config.ratios);
  ValidateRatios(ratios);
  Corpus corpus = LoadCorpus(config, config.input);
  if (!config.docs.empty()) {
    std::ifstream in = OpenInput(config.docs);
    std::set<std::string> wanted;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (corpus.FindDocument(line) == nullptr) {
        throw InputError(config.docs + ": unknown document '" + line + "'");
      }
      wanted.insert(line);
    }
    corpus = corpus.Subset(wanted);
  }

  const SplitAssignment assignment = AssignSplits(corpus, ratios, config.seed);
  std::map<Split, std::pair<std::size_t, std::size_t>> totals;
  for (const auto &[doc_id, split] : assignment) {
    corpus.SetSplit(doc_id, split);
    totals[split].first += 1;
    totals[split].second += corpus.FindDocument(doc_id)->sentences.size();
  }
  for (const auto &[split, counts] : totals) {
    err << SplitName(split) << ": " << counts.first << " documents, "
        << counts.second << " sentences\n";
  }
  Emit(config, WriteCanonicalString(corpus), out);
}

void RunDetectCues(const InvocationConfig &config, std::ostream &out,
                   std::ostream &err) {
  const Corpus corpus = LoadCorpus(config, config.input);
  const CueLexicon lexicon =
      LoadLexiconFor(config, CorpusLang(config, corpus), err);
  std::ostringstream content;
  content << "doc_id\tsent_id\tcue_indices\tcue\n";
  for (const Document &document : corpus.documents()) {
    for (const Sentence &sentence : document.sentences) {
      for (const CueMatch &match : lexicon.Detect(sentence.tokens)) {
        std::string indices;
        std::string surface;
        for (std::size_t i = 0; i < match.indices.size(); ++i) {
          if (i > 0) {
            indices += ',';
            surface += match.indices[i] == match.indices[i - 1] + 1 ? " " : " ... ";
          }
          indices += std::to_string(match.indices[i]);
          surface += sentence.tokens[match.indices[i]];
        }
        content << document.doc_id << '\t' << sentence.sent_id << '\t'
                << indices << '\t' << surface << '\n';
      }
    }
  }
  Emit(config, content.str(), out);
}

void RunDuplicate(const InvocationConfig &config, std::ostream &out,
                  std::ostream &err) {
  const Corpus input = LoadCorpus(config, config.input);
  const CueLexicon lexicon =
      LoadLexiconFor(config, CorpusLang(config, input), err);
  Corpus output;
  for (const Document &document : input.documents()) {
    for (const Sentence &sentence : document.sentences) {
      const std::vector<CueMatch> matches = lexicon.Detect(sentence.tokens);
      if (matches.empty()) {
        if (!config.drop_unnegated) output.AddSentence(document.doc_id, sentence);
        continue;
      }
      RecordKey key{document.doc_id, sentence.sent_id, sentence.lang,
                    sentence.source, sentence.split};
      for (NegationRecord &record :
           ExplodeInstances(sentence.tokens, matches, key)) {
        output.AddRecord(std::move(record));
      }
    }
  }
  Emit(config, WriteCanonicalString(output), out);
}

void RunResolve(const InvocationConfig &config, std::ostream &out) {
  const std::optional<Lang> lang = OptionalLang(config);
  ResolverConfig resolver = ResolverConfig::Default();
  if (!config.boundaries.empty()) {
    std::vector<std::string> words = ParseFile(
        config.boundaries, [](std::istream &in) { return LoadWordList(in); });
    resolver.hard_boundaries = {words.begin(), words.end()};
  }
  if (!config.conjunctions.empty()) {
    if (!lang) throw UsageError("--conjunctions requires --lang");
    std::vector<std::string> words = ParseFile(
        config.conjunctions, [](std::istream &in) { return LoadWordList(in); });
    resolver.conjunctions[*lang] = {words.begin(), words.end()};
  }
  if (!IsCanonicalPath(config.input)) {
    throw UsageError("resolve expects a .neg.jsonl corpus");
  }
  const Corpus corpus = LoadCorpus(config, config.input);
  Emit(config, WriteCanonicalString(ResolveCorpus(corpus, lang, resolver)), out);
}

Corpus LoadCanonical(const std::string &path) {
  return ParseFile(path, [](std::istream &in) { return ReadCanonical(in); });
}

template <typename Fn>
auto WithJoinErrors(const std::string &pred_path, Fn &&fn) {
  try {
    return fn();
  } catch (const ValidationError &e) {
    throw InputError(pred_path + ": " + e.what());
  }
}

void RunEval(const InvocationConfig &config, std::ostream &out) {
  const EvalMode mode = ParseEvalMode(config.mode);
  const ReportFormat format = ParseReportFormat(config.format);
  if (config.pred.empty() == config.runs.empty()) {
    throw UsageError("eval needs exactly one of --pred or --runs");
  }
  const Corpus gold = LoadCanonical(config.gold);
  std::ostringstream content;
  if (!config.pred.empty()) {
    const Corpus pred = LoadCanonical(config.pred);
    const EvalReport report = WithJoinErrors(
        config.pred, [&] { return EvaluateRun(gold, pred, mode); });
    WriteEvalReport(report, format, content);
  } else {
    std::vector<std::pair<std::string, EvalReport>> runs;
    std::vector<double> f1;
    for (const std::string &path : ExpandGlob(config.runs)) {
      const Corpus pred = LoadCanonical(path);
      runs.emplace_back(path, WithJoinErrors(path, [&] {
                          return EvaluateRun(gold, pred, mode);
                        }));
      f1.push_back(runs.back().second.prf.f1);
    }
    WriteRunsReport(runs, AggregateRuns(f1), format, content);
  }
  Emit(config, content.str(), out);
}

void RunScopeLength(const InvocationConfig &config, std::ostream &out) {
  const EvalMode mode = ParseEvalMode(config.mode);
  const ReportFormat format = ParseReportFormat(config.format);
  const Corpus gold = LoadCanonical(config.gold);
  const Corpus pred = LoadCanonical(config.pred);
  const ScopeLengthReport report = WithJoinErrors(
      config.pred, [&] { return ComputeScopeLength(gold, pred, mode); });
  std::ostringstream content;
  WriteScopeLengthReport(report, format, content);
  Emit(config, content.str(), out);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  InvocationConfig config;
  CLI::App app{"negscope: negation-scope corpus toolkit", "negscope"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const auto existing = CLI::ExistingFile;
  auto add_input = [&](CLI::App *sub, const std::string &help) {
    sub->add_option("--input", config.input, help)->required()->check(existing);
  };
  auto add_output = [&](CLI::App *sub) {
    sub->add_option("--output", config.output,
                    "Output path (default: standard output)");
  };
  auto add_lang = [&](CLI::App *sub) {
    sub->add_option("--lang", config.lang, "Language: de, fr, it or en")
        ->check(CLI::IsMember({"de", "fr", "it", "en"}));
  };
  auto add_source = [&](CLI::App *sub) {
    sub->add_option("--source", config.source,
                    "Corpus name for raw input (default: file name)");
  };
  auto add_lexicon = [&](CLI::App *sub) {
    sub->add_option("--lexicon", config.lexicon,
                    "Cue lexicon file (default: shipped list for --lang)")
        ->check(existing);
  };
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", config.format, "Report format")
        ->check(CLI::IsMember({"tsv", "table"}))
        ->capture_default_str();
  };
  auto add_mode = [&](CLI::App *sub) {
    sub->add_option("--mode", config.mode,
                    "strict: every gold instance needs a prediction; "
                    "lenient: missing predictions score as empty")
        ->check(CLI::IsMember({"strict", "lenient"}))
        ->capture_default_str();
  };

  CLI::App *convert =
      app.add_subcommand("convert", "Convert between *SEM and .neg.jsonl");
  convert->add_option("--from", config.from, "Input format")
      ->required()
      ->check(CLI::IsMember({"starsem", "jsonl"}));
  convert->add_option("--to", config.to, "Output format")
      ->required()
      ->check(CLI::IsMember({"starsem", "jsonl"}));
  add_input(convert, "Input file");
  add_output(convert);
  add_lang(convert);
  add_source(convert);

  CLI::App *stats = app.add_subcommand("stats", "Sentence and scope statistics");
  add_input(stats, ".neg.jsonl corpus or raw sentence TSV");
  add_output(stats);
  add_lang(stats);
  add_source(stats);
  add_format(stats);
  stats->add_option("--scope-ratio", config.scope_ratio,
                    "pooled (default) or per-instance scope percentage")
      ->check(CLI::IsMember({"pooled", "per-instance"}));

  CLI::App *score = app.add_subcommand("score", "Per-document negation scores");
  add_input(score, ".neg.jsonl corpus or raw sentence TSV");
  add_output(score);
  add_lang(score);
  add_source(score);
  add_lexicon(score);

  CLI::App *select =
      app.add_subcommand("select", "Top-scoring documents, one id per line");
  add_input(select, ".neg.jsonl corpus or raw sentence TSV");
  add_output(select);
  add_lang(select);
  add_source(select);
  add_lexicon(select);
  select->add_option("--top", config.top, "Number of documents")->required();

  CLI::App *split = app.add_subcommand(
      "split", "Assign train/test/validation splits by document");
  add_input(split, ".neg.jsonl corpus or raw sentence TSV");
  add_output(split);
  add_lang(split);
  add_source(split);
  split->add_option("--ratios", config.ratios, "train,test,validation percent")
      ->capture_default_str();
  split->add_option("--seed", config.seed, "Shuffle seed")->capture_default_str();
  split->add_option("--docs", config.docs,
                    "Only split these documents (one id per line)")
      ->check(existing);

  CLI::App *detect = app.add_subcommand("detect-cues", "List cue matches");
  add_input(detect, ".neg.jsonl corpus or raw sentence TSV");
  add_output(detect);
  add_lang(detect);
  add_source(detect);
  add_lexicon(detect);

  CLI::App *duplicate = app.add_subcommand(
      "duplicate", "One record per detected cue, with empty scopes");
  add_input(duplicate, ".neg.jsonl corpus or raw sentence TSV");
  add_output(duplicate);
  add_lang(duplicate);
  add_source(duplicate);
  add_lexicon(duplicate);
  duplicate->add_flag("--drop-unnegated", config.drop_unnegated,
                      "Omit sentences without cues");

  CLI::App *resolve =
      app.add_subcommand("resolve", "Fill predicted scopes with the rule baseline");
  add_input(resolve, ".neg.jsonl corpus");
  add_output(resolve);
  add_lang(resolve);
  resolve->add_option("--boundaries", config.boundaries, "Hard boundary list")
      ->check(existing);
  resolve->add_option("--conjunctions", config.conjunctions,
                      "Conjunction stop-list for --lang")
      ->check(existing);

  CLI::App *eval = app.add_subcommand("eval", "Token-level precision, recall, F1");
  eval->add_option("--gold", config.gold, "Gold .neg.jsonl")
      ->required()
      ->check(existing);
  CLI::Option *pred = eval->add_option("--pred", config.pred,
                                       "Prediction .neg.jsonl")
                          ->check(existing);
  CLI::Option *runs = eval->add_option(
      "--runs", config.runs, "Glob of prediction files (one per seed)");
  pred->excludes(runs);
  runs->excludes(pred);
  add_mode(eval);
  add_format(eval);
  add_output(eval);

  CLI::App *scope_length = app.add_subcommand(
      "scope-length", "Gold vs predicted share of scope tokens");
  scope_length->add_option("--gold", config.gold, "Gold .neg.jsonl")
      ->required()
      ->check(existing);
  scope_length->add_option("--pred", config.pred, "Prediction .neg.jsonl")
      ->required()
      ->check(existing);
  add_mode(scope_length);
  add_format(scope_length);
  add_output(scope_length);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CheckOutputPath(config);
    if (*convert) RunConvert(config, out, err);
    else if (*stats) RunStats(config, out);
    else if (*score) RunScore(config, out, err);
    else if (*select) RunSelect(config, out, err);
    else if (*split) RunSplit(config, out, err);
    else if (*detect) RunDetectCues(config, out, err);
    else if (*duplicate) RunDuplicate(config, out, err);
    else if (*resolve) RunResolve(config, out);
    else if (*eval) RunEval(config, out);
    else if (*scope_length) RunScopeLength(config, out);
  } catch (const UsageError &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error &e) {
    err << "negscope: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception &e) {
    err << "negscope: unexpected error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace negscope::cli
