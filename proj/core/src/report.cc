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

#include "negscope/report.h"

#include <algorithm>
#include <ostream>

#include "negscope/errors.h"

namespace negscope {
namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) {
    rows_.push_back(std::move(header));
  }

  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void Write(ReportFormat format, std::ostream &out) const {
    if (format == ReportFormat::kTsv) {
      for (const auto &row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c > 0) out << '\t';
          out << row[c];
        }
        out << '\n';
      }
      return;
    }
    std::vector<std::size_t> widths(rows_.front().size(), 0);
    for (const auto &row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], DisplayWidth(row[c]));
      }
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto &row = rows_[r];
      for (std::size_t c = 0; c < row.size(); ++c) {
        const std::string padding(widths[c] - DisplayWidth(row[c]), ' ');
        if (c > 0) out << "  ";
        // First column left-aligned, numbers right-aligned.
        if (c == 0) {
          out << row[c] << (row.size() > 1 ? padding : "");
        } else {
          out << padding << row[c];
        }
      }
      out << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : widths) total += w;
        out << std::string(total + 2 * (widths.size() - 1), '-') << '\n';
      }
    }
  }

 private:
  // Code points, which is good enough for the labels and numbers we print.
  static std::size_t DisplayWidth(const std::string &text) {
    return static_cast<std::size_t>(std::count_if(
        text.begin(), text.end(),
        [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
  }

  std::vector<std::vector<std::string>> rows_;
};

std::string Percent(double fraction) {
  return Fixed2::FromDouble(fraction * 100.0).ToString();
}

std::vector<std::string> ScoreRow(const std::string &label,
                                  std::size_t instances, const Confusion &c,
                                  const Prf &prf) {
  return {label,
          std::to_string(instances),
          std::to_string(c.tp),
          std::to_string(c.fp),
          std::to_string(c.fn),
          Percent(prf.precision),
          Percent(prf.recall),
          Percent(prf.f1)};
}

void AddStatsRow(const std::string &label, const CorpusStats &stats,
                 ScopeRatioMode scope_mode, Table *table) {
  const Fixed2 scope = scope_mode == ScopeRatioMode::kPooled
                           ? stats.PctScopeTokens()
                           : stats.PctScopeTokensPerInstance();
  table->Add({label, std::to_string(stats.total_sentences),
              std::to_string(stats.negated_sentences),
              stats.PctNegated().ToString(),
              stats.MeanTokensPerSentence().ToString(),
              std::to_string(stats.instance_count), scope.ToString()});
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "table") return ReportFormat::kTable;
  throw ArgumentError("unknown format '" + std::string(name) +
                      "' (expected tsv or table)");
}

ScopeRatioMode ParseScopeRatioMode(std::string_view name) {
  if (name == "pooled") return ScopeRatioMode::kPooled;
  if (name == "per-instance") return ScopeRatioMode::kPerInstance;
  throw ArgumentError("unknown scope ratio '" + std::string(name) +
                      "' (expected pooled or per-instance)");
}

void WriteEvalReport(const EvalReport &report, ReportFormat format,
                     std::ostream &out) {
  Table table({"dataset", "instances", "tp", "fp", "fn", "precision",
               "recall", "f1"});
  for (const auto &[key, dataset] : report.per_dataset) {
    table.Add(ScoreRow(key.Label(), dataset.instance_count, dataset.confusion,
                       dataset.prf));
  }
  table.Add(ScoreRow("all", report.instance_count, report.confusion,
                     report.prf));
  table.Write(format, out);
  if (report.missing_predictions > 0 && format == ReportFormat::kTable) {
    out << report.missing_predictions
        << " gold instance(s) without prediction scored as empty\n";
  }
}

void WriteRunsReport(
    const std::vector<std::pair<std::string, EvalReport>> &runs,
    const RunAggregate &aggregate, ReportFormat format, std::ostream &out) {
  Table table({"run", "instances", "precision", "recall", "f1"});
  for (const auto &[name, report] : runs) {
    table.Add({name, std::to_string(report.instance_count),
               Percent(report.prf.precision), Percent(report.prf.recall),
               Percent(report.prf.f1)});
  }
  if (format == ReportFormat::kTsv) {
    table.Add({"mean", "", "", "", Percent(aggregate.mean_f1)});
    table.Add({"std", "", "", "", Percent(aggregate.std_f1)});
    table.Write(format, out);
    return;
  }
  table.Write(format, out);
  out << "f1 " << aggregate.ToString() << " over " << aggregate.run_count
      << " runs\n";
}

void WriteStatsReport(const Corpus &corpus, ScopeRatioMode scope_mode,
                      ReportFormat format, std::ostream &out) {
  Table table({"dataset", "sentences", "negated", "pct_negated",
               "mean_tokens", "instances", "pct_scope_tokens"});
  for (const auto &[key, stats] : StatsByDataset(corpus)) {
    AddStatsRow(key.Label(), stats, scope_mode, &table);
  }
  AddStatsRow("all", ComputeStats(corpus), scope_mode, &table);
  table.Write(format, out);
}

void WriteScopeLengthReport(const ScopeLengthReport &report,
                            ReportFormat format, std::ostream &out) {
  Table table({"dataset", "instances", "actual_pct", "predicted_pct"});
  auto add = [&table](const std::string &label, const ScopeLengthCounts &c) {
    table.Add({label, std::to_string(c.instance_count),
               Percent(c.actual_ratio()), Percent(c.predicted_ratio())});
  };
  for (const auto &[key, counts] : report.per_dataset) add(key.Label(), counts);
  add("all", report.overall);
  table.Write(format, out);
}

}  // namespace negscope
