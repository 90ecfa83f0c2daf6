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

#include "designprobe/analysis/distractors.h"

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::analysis {

std::vector<std::string> SelectDistractors(
    const DependencyGraph& graph, const std::set<std::string>& mutated,
    std::size_t want, Rng& rng, const ClassFilter& eligible,
    const std::set<std::string>& reserved_simple_names) {
  if (want == 0) return {};
  for (const std::string& m : mutated) {
    if (!graph.HasNode(m)) throw Error(ErrorCode::kUnknownNode, m);
  }
  std::vector<std::vector<std::string>> candidates;
  for (const DependencyCluster& cluster : graph.Clusters()) {
    bool touches_mutated = false;
    for (const std::string& m : mutated) {
      if (cluster.members.count(m) > 0) {
        touches_mutated = true;
        break;
      }
    }
    if (touches_mutated) continue;
    std::vector<std::string> members;
    for (const std::string& name : cluster.members) {
      if (!eligible || eligible(name)) members.push_back(name);
    }
    if (!members.empty()) candidates.push_back(std::move(members));
  }
  rng.Shuffle(candidates);
  std::set<std::string> taken = reserved_simple_names;
  std::vector<std::string> picked;
  for (std::vector<std::string>& members : candidates) {
    if (picked.size() == want) break;
    rng.Shuffle(members);
    for (const std::string& name : members) {
      if (taken.insert(SimpleName(name)).second) {
        picked.push_back(name);
        break;
      }
    }
  }
  if (picked.size() < want) {
    throw InsufficientDisjointClasses(want, picked.size());
  }
  return picked;
}

}  // namespace designprobe::analysis
