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

#ifndef DESIGNPROBE_TESTS_SYNTHETIC_POOL_H_
#define DESIGNPROBE_TESTS_SYNTHETIC_POOL_H_

#include <cstddef>
#include <string>
#include <vector>

#include "designprobe/promptgen/prompt_instance.h"

namespace designprobe::testing {

// A pool with `per_cell` prompts in every (task, distortion, length bin)
// cell of both concepts. Token counts are 1000 * bin + (i % 10), so the
// interpolated quartiles fall strictly between adjacent bins.
inline std::vector<promptgen::PromptInstance> SyntheticPool(
    std::size_t per_cell) {
  using promptgen::Concept;
  std::vector<promptgen::PromptInstance> pool;
  for (Concept c : {Concept::kCoupling, Concept::kCohesion}) {
    for (promptgen::TaskKind t : promptgen::kAllTasks) {
      for (int level = 1; level <= 9; ++level) {
        for (int bin = 1; bin <= 4; ++bin) {
          for (std::size_t i = 0; i < per_cell; ++i) {
            promptgen::PromptInstance p;
            p.design_concept = c;
            p.task = t;
            p.transform_kind = c == Concept::kCoupling ? "DID" : "cohesion";
            p.distortion_requested =
                c == Concept::kCoupling ? level / 10.0 : level;
            p.distortion_achieved = p.distortion_requested;
            p.token_count = 1000 * bin + i % 10;
            p.id = std::string(promptgen::ConceptName(c)) + "-" +
                   std::string(promptgen::TaskKindName(t)) + "-" +
                   std::to_string(level) + "-" + std::to_string(bin) + "-" +
                   std::to_string(i);
            p.prompt = p.id;
            pool.push_back(std::move(p));
          }
        }
      }
    }
  }
  return pool;
}

}  // namespace designprobe::testing

#endif  // DESIGNPROBE_TESTS_SYNTHETIC_POOL_H_
