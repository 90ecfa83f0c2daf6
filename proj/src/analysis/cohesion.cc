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

#include "designprobe/analysis/cohesion.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "designprobe/common/error.h"

namespace designprobe::analysis {

MethodGraph BuildMethodGraph(const corpus::ClassModel& c) {
  std::map<std::string, std::set<std::string>> fields_of;
  std::map<std::string, std::set<std::string>> calls_of;
  for (const corpus::MethodModel& m : c.methods) {
    if (!m.body_span) continue;
    fields_of[m.name].insert(m.accessed_fields.begin(),
                             m.accessed_fields.end());
    calls_of[m.name].insert(m.invoked_methods.begin(), m.invoked_methods.end());
  }
  MethodGraph g;
  for (const auto& [name, unused] : fields_of) g.methods.push_back(name);
  const std::size_t n = g.methods.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& a = g.methods[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string& b = g.methods[j];
      bool linked = calls_of[a].count(b) > 0 || calls_of[b].count(a) > 0;
      if (!linked) {
        for (const std::string& f : fields_of[a]) {
          if (fields_of[b].count(f) > 0) {
            linked = true;
            break;
          }
        }
      }
      if (linked) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

CohesionReport YalcomOfGraph(const MethodGraph& graph) {
  const std::size_t n = graph.methods.size();
  if (n == 0) throw Error(ErrorCode::kNoAnalyzedMethods, "empty method graph");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (const auto& [a, b] : graph.edges) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::size_t> slot_of_root;
  CohesionReport report;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] =
        slot_of_root.emplace(find(i), report.components.size());
    if (inserted) report.components.emplace_back();
    report.components[it->second].insert(graph.methods[i]);
  }
  const std::size_t k = report.components.size();
  report.yalcom = n == 1 ? 0.0
                         : static_cast<double>(k - 1) /
                               static_cast<double>(n - 1);
  return report;
}

CohesionReport ComputeYalcom(const corpus::ClassModel& c) {
  MethodGraph g = BuildMethodGraph(c);
  if (g.methods.empty()) {
    throw Error(ErrorCode::kNoAnalyzedMethods, c.qualified_name);
  }
  CohesionReport report = YalcomOfGraph(g);
  report.class_name = c.qualified_name;
  return report;
}

std::vector<const corpus::ClassModel*> CohesivePool(
    const corpus::SourceProject& project) {
  std::vector<const corpus::ClassModel*> pool;
  for (const corpus::ClassModel* c : project.Classes()) {
    if (!c->IsTopLevel() || c->is_test ||
        c->kind != corpus::ClassKind::kConcreteClass) {
      continue;
    }
    MethodGraph g = BuildMethodGraph(*c);
    if (g.methods.size() <= 2) continue;
    if (YalcomOfGraph(g).yalcom == 0.0) pool.push_back(c);
  }
  return pool;
}

}  // namespace designprobe::analysis
