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

#ifndef DESIGNPROBE_PARALLEL_KERNELS_H_
#define DESIGNPROBE_PARALLEL_KERNELS_H_

// Data-parallel kernels. Each kernel has a serial reference twin with the
// same contract; tests check they agree and bench/ compares their speed.
// Results are always returned in input order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "designprobe/corpus/model.h"
#include "designprobe/evaluation/scoring.h"
#include "designprobe/promptgen/prompt_instance.h"
#include "designprobe/traces/trace_stats.h"

namespace designprobe::parallel {

struct SourceFile {
  std::string path;
  std::string text;
};

struct ParseOutcome {
  std::optional<corpus::CompilationUnit> unit;
  std::string diagnostic;
};

std::vector<ParseOutcome> ParseUnitsSerial(const std::vector<SourceFile>& files);
std::vector<ParseOutcome> ParseUnitsParallel(
    const std::vector<SourceFile>& files);

std::vector<std::size_t> CountTokensSerial(const std::vector<std::string>& texts);
std::vector<std::size_t> CountTokensParallel(
    const std::vector<std::string>& texts);

// One scoring job: a prompt and the parsed answer, or nullopt when the
// response was malformed.
struct ScoreJob {
  const promptgen::PromptInstance* prompt = nullptr;
  std::optional<llmclient::ParsedAnswer> answer;
  std::string model_name;
};

std::vector<evaluation::ScoreRecord> ScorePromptsSerial(
    const std::vector<ScoreJob>& jobs);
std::vector<evaluation::ScoreRecord> ScorePromptsParallel(
    const std::vector<ScoreJob>& jobs);

struct TraceJob {
  const promptgen::PromptInstance* prompt = nullptr;
  std::string trace;
  std::string model_name;
};

std::vector<traces::TraceStats> TraceStatsSerial(
    const std::vector<TraceJob>& jobs);
std::vector<traces::TraceStats> TraceStatsParallel(
    const std::vector<TraceJob>& jobs);

}  // namespace designprobe::parallel

#endif  // DESIGNPROBE_PARALLEL_KERNELS_H_
