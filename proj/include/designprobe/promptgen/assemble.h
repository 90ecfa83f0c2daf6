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

#ifndef DESIGNPROBE_PROMPTGEN_ASSEMBLE_H_
#define DESIGNPROBE_PROMPTGEN_ASSEMBLE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "designprobe/common/rng.h"
#include "designprobe/corpus/model.h"
#include "designprobe/promptgen/prompt_instance.h"
#include "designprobe/promptgen/templates.h"
#include "designprobe/transforms/mutation_record.h"

namespace designprobe::promptgen {

// A rendered class as it will appear in a prompt.
struct ClassText {
  std::string qualified_name;
  std::string simple_name;
  std::string text;
};

// Assertions per verification prompt. Fewer are used when the prompt cannot
// supply them; the two counts never differ by more than one.
struct VerificationConfig {
  std::size_t positives = 2;
  std::size_t negatives = 2;
};

// Wraps class texts in a single ```java block.
std::string CodeBlock(const std::vector<std::string>& texts);

// `c` rendered with its methods moved between their own slots according to
// a random permutation. Everything else stays in place.
std::string ShuffleMethods(const corpus::CompilationUnit& unit,
                           const corpus::ClassModel& c, Rng& rng);

// Coupling prompt over the skeletonized `core` classes (consumer and chosen
// implementors) and the distractors, shown in random order.
// Throws Error(kMissingGroundTruthEntity).
PromptInstance AssembleCouplingPrompt(const transforms::MutationRecord& rec,
                                      const std::vector<ClassText>& core,
                                      const std::vector<ClassText>& distractors,
                                      TaskKind task, double requested_ratio,
                                      const PromptTemplate& tmpl, Rng& rng,
                                      const VerificationConfig& vcfg = {});

// Cohesion prompt over the synthesized class with shuffled method order.
// Throws Error(kMissingGroundTruthEntity) or Error(kClassTooSmall).
PromptInstance AssembleCohesionPrompt(const transforms::MutationRecord& rec,
                                      TaskKind task,
                                      const PromptTemplate& tmpl, Rng& rng,
                                      const VerificationConfig& vcfg = {});

}  // namespace designprobe::promptgen

#endif  // DESIGNPROBE_PROMPTGEN_ASSEMBLE_H_
