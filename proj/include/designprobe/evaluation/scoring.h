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

#ifndef DESIGNPROBE_EVALUATION_SCORING_H_
#define DESIGNPROBE_EVALUATION_SCORING_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "designprobe/evaluation/metrics.h"
#include "designprobe/llmclient/answers.h"
#include "designprobe/promptgen/prompt_instance.h"

namespace designprobe::evaluation {

// Scores one answer. nullopt stands for a malformed response and scores 0.
// Throws Error(kVariantMismatch) when the answer shape does not fit the task.
ScoreRecord ScorePrompt(const promptgen::PromptInstance& prompt,
                        const std::optional<llmclient::ParsedAnswer>& answer,
                        const std::string& model_name);

struct StratumReport {
  std::string design_concept;
  std::string task;
  std::string transform_kind;
  std::string distortion;
  std::string model_name;
  std::string metric;
  double mean = 0.0;
  // Population standard deviation.
  double std = 0.0;
  std::size_t n = 0;
};

// Groups by (concept, task, transform_kind, distortion, model, metric) in
// lexicographic key order. Throws Error(kDanglingScore) for a score whose
// prompt is unknown.
std::vector<StratumReport> Aggregate(
    const std::vector<ScoreRecord>& scores,
    const std::map<std::string, const promptgen::PromptInstance*>& prompts);

std::string ReportCsv(const std::vector<StratumReport>& rows);

}  // namespace designprobe::evaluation

#endif  // DESIGNPROBE_EVALUATION_SCORING_H_
