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

#ifndef DESIGNPROBE_PIPELINE_STAGES_H_
#define DESIGNPROBE_PIPELINE_STAGES_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/corpus/project.h"
#include "designprobe/llmclient/answers.h"
#include "designprobe/pipeline/config.h"
#include "designprobe/promptgen/prompt_instance.h"
#include "designprobe/transforms/mutation_record.h"

namespace designprobe::pipeline {

enum class Stage {
  kIngest,
  kAnalyze,
  kMutate,
  kGenPrompts,
  kSample,
  kInfer,
  kEvaluate,
  kTraceStats,
};

inline constexpr Stage kAllStages[] = {
    Stage::kIngest, Stage::kAnalyze, Stage::kMutate,   Stage::kGenPrompts,
    Stage::kSample, Stage::kInfer,   Stage::kEvaluate, Stage::kTraceStats};

std::string_view StageName(Stage s);
// Throws Error(kConfigInvalid) for unknown names.
Stage ParseStage(std::string_view name);

struct StageResult {
  Stage stage = Stage::kIngest;
  // False when the manifest showed the stage was already up to date.
  bool ran = false;
  // Relative to the run directory.
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
  std::string summary;
};

// Runs one stage in config.out. Throws Error(kMissingInputs) when an
// earlier stage's outputs are absent, Error(kConfigInvalid) for a bad
// config.
StageResult RunStage(Stage stage, const PipelineConfig& config);

// Every stage in order.
std::vector<StageResult> RunAll(const PipelineConfig& config);

// Loaders for run-directory artifacts, shared with tests.
std::vector<corpus::SourceProject> LoadCorpus(const PipelineConfig& config);
std::vector<promptgen::PromptInstance> ReadPrompts(
    const std::filesystem::path& path);
std::vector<transforms::MutationRecord> ReadMutations(
    const std::filesystem::path& out_dir);

}  // namespace designprobe::pipeline

#endif  // DESIGNPROBE_PIPELINE_STAGES_H_
