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

#include "designprobe/traces/trace_stats.h"

#include <set>
#include <sstream>
#include <tuple>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"
#include "designprobe/sampling/tokens.h"

namespace designprobe::traces {

void to_json(nlohmann::json& j, const TraceStats& s) {
  j = nlohmann::json{{"prompt_id", s.prompt_id},
                     {"model", s.model_name},
                     {"trace_token_count", s.trace_token_count},
                     {"entities_total", s.entities_total},
                     {"entities_mentioned", s.entities_mentioned},
                     {"coverage", s.coverage}};
}

void from_json(const nlohmann::json& j, TraceStats& s) {
  s.prompt_id = j.at("prompt_id").get<std::string>();
  s.model_name = j.at("model").get<std::string>();
  s.trace_token_count = j.at("trace_token_count").get<std::size_t>();
  s.entities_total = j.at("entities_total").get<std::size_t>();
  s.entities_mentioned = j.at("entities_mentioned").get<std::size_t>();
  s.coverage = j.at("coverage").get<double>();
}

std::size_t TraceLength(std::string_view trace) {
  return sampling::CountTokens(trace);
}

TraceStats EntityCoverage(std::string_view trace,
                          const std::vector<std::string>& entities) {
  if (entities.empty()) {
    throw Error(ErrorCode::kEmptyEntityList, "no entities to look for");
  }
  TraceStats s;
  s.entities_total = entities.size();
  for (const std::string& e : entities) {
    if (ContainsWord(trace, e)) ++s.entities_mentioned;
  }
  s.coverage = static_cast<double>(s.entities_mentioned) / s.entities_total;
  return s;
}

TraceStats AnalyzeTrace(const promptgen::PromptInstance& prompt,
                        std::string_view trace, const std::string& model_name) {
  TraceStats s = EntityCoverage(trace, prompt.provenance.entities);
  s.prompt_id = prompt.id;
  s.model_name = model_name;
  s.trace_token_count = TraceLength(trace);
  return s;
}

std::vector<TraceReportRow> TraceReport(
    const std::vector<TraceStats>& stats,
    const std::map<std::string, const promptgen::PromptInstance*>& prompts) {
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  struct Sum {
    double tokens = 0;
    double coverage = 0;
    std::size_t n = 0;
  };
  std::map<Key, Sum> groups;
  for (const TraceStats& s : stats) {
    auto it = prompts.find(s.prompt_id);
    if (it == prompts.end()) {
      throw Error(ErrorCode::kDanglingId,
                  "trace for unknown prompt " + s.prompt_id);
    }
    const promptgen::PromptInstance& p = *it->second;
    Sum& sum = groups[{std::string(promptgen::ConceptName(p.design_concept)),
                       std::string(promptgen::TaskKindName(p.task)),
                       p.DistortionKey(), s.model_name}];
    sum.tokens += s.trace_token_count;
    sum.coverage += s.coverage;
    ++sum.n;
  }
  std::vector<TraceReportRow> out;
  for (const auto& [key, sum] : groups) {
    TraceReportRow row;
    std::tie(row.design_concept, row.task, row.distortion, row.model_name) =
        key;
    row.n = sum.n;
    row.mean_trace_tokens = sum.tokens / sum.n;
    row.mean_coverage = sum.coverage / sum.n;
    out.push_back(std::move(row));
  }
  return out;
}

std::string TraceReportCsv(const std::vector<TraceReportRow>& rows) {
  std::ostringstream out;
  out << "concept,task,distortion,model,mean_trace_tokens,mean_coverage,n\n";
  for (const TraceReportRow& r : rows) {
    out << r.design_concept << ',' << r.task << ',' << r.distortion << ','
        << r.model_name << ',' << FormatNumber(r.mean_trace_tokens) << ','
        << FormatNumber(r.mean_coverage) << ',' << r.n << '\n';
  }
  return out.str();
}

}  // namespace designprobe::traces
