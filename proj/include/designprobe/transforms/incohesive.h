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

#ifndef DESIGNPROBE_TRANSFORMS_INCOHESIVE_H_
#define DESIGNPROBE_TRANSFORMS_INCOHESIVE_H_

#include <string>
#include <vector>

#include "designprobe/common/rng.h"
#include "designprobe/corpus/model.h"
#include "designprobe/transforms/mutation_record.h"

namespace designprobe::transforms {

struct CohesionInjectionConfig {
  // Number of source classes, 1..9.
  int distortion_level = 1;
  // Methods taken from each source, 1..5.
  int n_per_source = 2;
};

// A cohesive-pool class together with what synthesis needs to know about
// it from its own project.
struct CohesionCandidate {
  std::string project_id;
  const corpus::CompilationUnit* unit = nullptr;
  const corpus::ClassModel* cls = nullptr;
  // Ancestors as resolved in the class's project.
  std::vector<std::string> ancestors;
};

// "GeneratedClass" followed by 8 lowercase hex digits.
std::string RandomClassName(Rng& rng);

// Clones `target` under a random name and injects, for every source, N
// random methods plus the fields they access. The ground truth is a method
// partition with the target's block first.
//
// Throws Error(kPreconditionViolation) for a shared ancestor, a cross-group
// reference or a result that is not split as expected,
// Error(kNameCollision) when two groups define the same member name, and
// Error(kInsufficientMethods) when a source has fewer than N methods.
MutationRecord SynthesizeIncohesive(
    const CohesionCandidate& target,
    const std::vector<CohesionCandidate>& sources,
    const CohesionInjectionConfig& cfg, Rng& rng);

}  // namespace designprobe::transforms

#endif  // DESIGNPROBE_TRANSFORMS_INCOHESIVE_H_
