// Copyright 2026 The DesignProbe Authors
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

#ifndef DESIGNPROBE_TRACES_TRACE_STATS_H_
#define DESIGNPROBE_TRACES_TRACE_STATS_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/promptgen/prompt_instance.h"
#include "json.hpp"

namespace designprobe::traces {

struct TraceStats {
  std::string prompt_id;
  std::string model_name;
  std::size_t trace_token_count = 0;
  std::size_t entities_total = 0;
  std::size_t entities_mentioned = 0;
  double coverage = 0.0;
};

void to_json(nlohmann::json& j, const TraceStats& s);
void from_json(const nlohmann::json& j, TraceStats& s);

// Token count under the prompt tokenizer.
std::size_t TraceLength(std::string_view trace);

// Fills the entity fields. A name counts when it appears in the trace as a
// whole word, case-sensitive. Throws Error(kEmptyEntityList).
TraceStats EntityCoverage(std::string_view trace,
                          const std::vector<std::string>& entities);

// Length and coverage of one trace against the entities its prompt showed.
TraceStats AnalyzeTrace(const promptgen::PromptInstance& prompt,
                        std::string_view trace, const std::string& model_name);

struct TraceReportRow {
  std::string design_concept;
  std::string task;
  std::string distortion;
  std::string model_name;
  double mean_trace_tokens = 0.0;
  double mean_coverage = 0.0;
  std::size_t n = 0;
};

// Means per (concept, task, distortion, model), in key order. Throws
// Error(kDanglingId) for stats whose prompt is unknown.
std::vector<TraceReportRow> TraceReport(
    const std::vector<TraceStats>& stats,
    const std::map<std::string, const promptgen::PromptInstance*>& prompts);

std::string TraceReportCsv(const std::vector<TraceReportRow>& rows);

}  // namespace designprobe::traces

#endif  // DESIGNPROBE_TRACES_TRACE_STATS_H_
