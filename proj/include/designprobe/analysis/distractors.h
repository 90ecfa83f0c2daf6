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

#ifndef DESIGNPROBE_ANALYSIS_DISTRACTORS_H_
#define DESIGNPROBE_ANALYSIS_DISTRACTORS_H_

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "designprobe/analysis/dependency_graph.h"
#include "designprobe/common/rng.h"

namespace designprobe::analysis {

using ClassFilter = std::function<bool(const std::string&)>;

// Picks `want` classes, each from a different weakly connected component
// that contains none of `mutated`. Only classes accepted by `eligible` (all
// when empty) are considered, and no two picks share a simple name with
// each other or with `reserved_simple_names`.
// Throws InsufficientDisjointClasses carrying how many could be supplied.
std::vector<std::string> SelectDistractors(
    const DependencyGraph& graph, const std::set<std::string>& mutated,
    std::size_t want, Rng& rng, const ClassFilter& eligible = {},
    const std::set<std::string>& reserved_simple_names = {});

}  // namespace designprobe::analysis

#endif  // DESIGNPROBE_ANALYSIS_DISTRACTORS_H_
