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

#ifndef DESIGNPROBE_ANALYSIS_COHESION_H_
#define DESIGNPROBE_ANALYSIS_COHESION_H_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "designprobe/corpus/project.h"

namespace designprobe::analysis {

// Undirected graph over a class's analyzed methods (non-constructor, with a
// body). Overloads share a node. Two methods are linked when they access a
// common field or one invokes the other.
struct MethodGraph {
  // Sorted method names; node i is methods[i].
  std::vector<std::string> methods;
  // Pairs (i, j) with i < j, sorted, no duplicates.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

MethodGraph BuildMethodGraph(const corpus::ClassModel& c);

struct CohesionReport {
  std::string class_name;
  double yalcom = 0.0;
  // Connected components, ordered by their smallest method name.
  std::vector<std::set<std::string>> components;
};

// (k - 1) / (n - 1) for n > 1 nodes and k components; 0 when n == 1.
// Throws Error(kNoAnalyzedMethods) for an empty graph.
CohesionReport YalcomOfGraph(const MethodGraph& graph);

// Throws Error(kNoAnalyzedMethods).
CohesionReport ComputeYalcom(const corpus::ClassModel& c);

// Top-level concrete non-test classes with yalcom 0 and more than two
// analyzed methods.
std::vector<const corpus::ClassModel*> CohesivePool(
    const corpus::SourceProject& project);

}  // namespace designprobe::analysis

#endif  // DESIGNPROBE_ANALYSIS_COHESION_H_
