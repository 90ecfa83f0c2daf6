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

#ifndef DESIGNPROBE_PROMPTGEN_PROMPT_INSTANCE_H_
#define DESIGNPROBE_PROMPTGEN_PROMPT_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/transforms/mutation_record.h"
#include "json.hpp"

namespace designprobe::promptgen {

enum class Concept { kCoupling, kCohesion };
enum class TaskKind { kVerification, kGuidedGeneration, kOpenEndedGeneration };

inline constexpr TaskKind kAllTasks[] = {TaskKind::kVerification,
                                         TaskKind::kGuidedGeneration,
                                         TaskKind::kOpenEndedGeneration};

std::string_view ConceptName(Concept c);
std::string_view TaskKindName(TaskKind t);
// Throw Error(kConfigInvalid) for unknown names.
Concept ParseConcept(std::string_view name);
TaskKind ParseTaskKind(std::string_view name);

// One verification statement: "are `a` and `b` related?"
struct Assertion {
  std::string a;
  std::string b;
  bool expected = false;
};

// Expected answer of a prompt, in simple names. Which members are used
// depends on the concept and task.
struct PromptTruth {
  // Verification, in presentation order.
  std::vector<Assertion> assertions;
  // Guided generation.
  std::string seed;
  std::set<std::string> names;
  // Coupling open-ended generation.
  std::set<transforms::ClassPair> pairs;
  // Cohesion open-ended generation.
  std::vector<std::set<std::string>> blocks;
};

struct Provenance {
  std::string project_id;
  std::string record_id;
  // Qualified names of the distractor classes.
  std::vector<std::string> distractors;
  // Simple names of every class (coupling) or method (cohesion) shown.
  std::vector<std::string> entities;
};

struct PromptInstance {
  std::string id;
  Concept design_concept = Concept::kCoupling;
  TaskKind task = TaskKind::kVerification;
  std::string transform_kind;
  // Ratio in (0, 1) for coupling; level 1..9 for cohesion.
  double distortion_requested = 0.0;
  double distortion_achieved = 0.0;
  std::string prompt;
  PromptTruth truth;
  std::size_t token_count = 0;
  std::uint64_t shuffle_seed = 0;
  Provenance provenance;

  // Grid key of the distortion axis: "0.3" or "3".
  std::string DistortionKey() const;
};

void to_json(nlohmann::json& j, const PromptInstance& p);
void from_json(const nlohmann::json& j, PromptInstance& p);

// Serializes the truth in the shape matching the prompt's concept and task.
nlohmann::json TruthToJson(const PromptInstance& p);
PromptTruth TruthFromJson(const nlohmann::json& j, Concept c, TaskKind t);

}  // namespace designprobe::promptgen

#endif  // DESIGNPROBE_PROMPTGEN_PROMPT_INSTANCE_H_
