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

#ifndef NEGSCOPE_REPORT_H_
#define NEGSCOPE_REPORT_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negscope/evaluation.h"

namespace negscope {

// tsv: tab-separated with a header row. table: space-aligned columns for
// reading in a terminal. Percentages use two decimals in both.
enum class ReportFormat { kTsv, kTable };

ReportFormat ParseReportFormat(std::string_view name);

enum class ScopeRatioMode { kPooled, kPerInstance };

ScopeRatioMode ParseScopeRatioMode(std::string_view name);

// Per-dataset rows followed by an "all" row.
void WriteEvalReport(const EvalReport &report, ReportFormat format,
                     std::ostream &out);

// One row per prediction file, then mean and standard deviation of F1.
void WriteRunsReport(
    const std::vector<std::pair<std::string, EvalReport>> &runs,
    const RunAggregate &aggregate, ReportFormat format, std::ostream &out);

void WriteStatsReport(const Corpus &corpus, ScopeRatioMode scope_mode,
                      ReportFormat format, std::ostream &out);

void WriteScopeLengthReport(const ScopeLengthReport &report,
                            ReportFormat format, std::ostream &out);

}  // namespace negscope

#endif  // NEGSCOPE_REPORT_H_
