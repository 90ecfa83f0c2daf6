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

#ifndef DESIGNPROBE_PIPELINE_CONFIG_H_
#define DESIGNPROBE_PIPELINE_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/llmclient/backend.h"

namespace designprobe::pipeline {

// Run configuration. Every key of the config file maps to one field here and
// has the default shown.
struct PipelineConfig {
  // corpus = path[,path...]
  std::vector<std::filesystem::path> corpus;
  // master_seed = 42
  std::uint64_t master_seed = 42;
  // n_per_source = 2
  int n_per_source = 2;
  // coupling_ratios = 0.1,0.2,...,0.9
  std::vector<double> coupling_ratios = {0.1, 0.2, 0.3, 0.4, 0.5,
                                         0.6, 0.7, 0.8, 0.9};
  // cohesion_levels = 1,...,9
  std::vector<int> cohesion_levels = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  // cohesion_instances_per_level = 40
  std::size_t cohesion_instances_per_level = 40;
  // per_cell = 100
  std::size_t per_cell = 100;
  // verification_positives = 2, verification_negatives = 2
  std::size_t verification_positives = 2;
  std::size_t verification_negatives = 2;
  // template_dir = <bundled templates>
  std::filesystem::path template_dir;
  // out = out
  std::filesystem::path out = "out";
  // mock = (empty: use the models below) | oracle | random | silent
  std::string mock;
  // emit_graph = false
  bool emit_graph = false;
  // model.<name>.endpoint, .api_key_env, .max_tokens, .timeout_s,
  // .max_in_flight, .rate_limit_per_minute
  std::vector<llmclient::ModelSpec> models;
};

// Parses `key = value` lines; '#' starts a comment. Unknown keys and bad
// values throw Error(kConfigInvalid).
PipelineConfig ParseConfig(std::string_view text);
PipelineConfig LoadConfig(const std::filesystem::path& path);

// Throws Error(kConfigInvalid) when a value is out of range.
void ValidateConfig(const PipelineConfig& config);

// Canonical text of every setting that affects artifacts. `out` is excluded.
std::string CanonicalConfig(const PipelineConfig& config);
std::string ConfigHash(const PipelineConfig& config);

}  // namespace designprobe::pipeline

#endif  // DESIGNPROBE_PIPELINE_CONFIG_H_
