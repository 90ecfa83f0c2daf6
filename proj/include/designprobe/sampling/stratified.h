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

#ifndef DESIGNPROBE_SAMPLING_STRATIFIED_H_
#define DESIGNPROBE_SAMPLING_STRATIFIED_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "designprobe/promptgen/prompt_instance.h"
#include "json.hpp"

namespace designprobe::sampling {

struct Quartiles {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
};

// Linear-interpolation percentiles at 25/50/75 over the sorted counts.
// Throws Error(kEmptyPopulation).
Quartiles ComputeQuartiles(std::vector<std::size_t> counts);

// 1: c < Q1, 2: Q1 <= c <= Q2, 3: Q2 < c <= Q3, 4: c > Q3.
int BinOf(std::size_t count, const Quartiles& q);

struct CellFill {
  std::size_t available = 0;
  std::size_t drawn = 0;
};

// The task x distortion x length-bin grid of one concept.
struct SamplingGrid {
  promptgen::Concept design_concept = promptgen::Concept::kCoupling;
  Quartiles quartiles;
  std::size_t per_cell = 100;
  std::map<std::string, CellFill> cells;
};

struct SampledPrompt {
  const promptgen::PromptInstance* prompt = nullptr;
  int bin = 0;
  std::string cell_key;
};

struct SampleResult {
  // Ordered by concept, task, distortion, bin, id.
  std::vector<SampledPrompt> prompts;
  std::vector<SamplingGrid> grids;
  // One line per under-full cell.
  std::vector<std::string> warnings;
};

// "<concept>|<task>|<distortion>|<bin>".
std::string CellKey(const promptgen::PromptInstance& p, int bin);

// Quartiles and grid are computed per concept. Each cell draws
// min(per_cell, size) prompts without replacement using a seed derived from
// `seed` and the cell key. Throws Error(kEmptyPopulation).
SampleResult StratifiedSample(
    const std::vector<promptgen::PromptInstance>& pool, std::size_t per_cell,
    std::uint64_t seed);

nlohmann::json SamplingReport(const SampleResult& result);

}  // namespace designprobe::sampling

#endif  // DESIGNPROBE_SAMPLING_STRATIFIED_H_
