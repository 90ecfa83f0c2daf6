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

#ifndef DESIGNPROBE_ANALYSIS_DEPENDENCY_GRAPH_H_
#define DESIGNPROBE_ANALYSIS_DEPENDENCY_GRAPH_H_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/corpus/project.h"

namespace designprobe::analysis {

enum class EdgeKind {
  kFieldType,
  kParameterType,
  kReturnType,
  kInstantiation,
  kStaticCall,
  kInheritance,
  // Any other mention inside code: local variable types, casts, generic
  // arguments, class literals.
  kTypeReference,
};

std::string_view EdgeKindName(EdgeKind kind);

struct Edge {
  std::string from;
  std::string to;
  EdgeKind kind;

  auto operator<=>(const Edge&) const = default;
};

struct DependencyCluster {
  std::size_t id = 0;
  std::set<std::string> members;
};

// Directed class-level depends-on graph over project-local classes.
class DependencyGraph {
 public:
  void AddNode(const std::string& name);
  // Self-loops are dropped. Both endpoints must already be nodes.
  void AddEdge(const std::string& from, const std::string& to, EdgeKind kind);

  const std::set<std::string, std::less<>>& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool HasNode(std::string_view name) const;

  // True iff z is reachable from x by a non-empty directed path. With no
  // self-loops, TransitivelyDepends(x, x) is false unless x lies on a cycle
  // through another class. Throws Error(kUnknownNode).
  bool TransitivelyDepends(std::string_view x, std::string_view z) const;

  // Weakly connected components, ordered by their smallest member; ids are
  // positions in that order.
  std::vector<DependencyCluster> Clusters() const;

  // Sorted "from<TAB>to<TAB>kind" lines.
  std::string ToEdgeList() const;

 private:
  std::set<std::string, std::less<>> nodes_;
  std::set<Edge> edges_;
  std::map<std::string, std::set<std::string>, std::less<>> successors_;
};

// One node per project class (nested classes included), and an edge for
// each use of another project class: field, parameter and return types,
// `new` expressions, static member access, extends/implements, and other
// type mentions in code.
DependencyGraph BuildDependencyGraph(const corpus::SourceProject& project);

}  // namespace designprobe::analysis

#endif  // DESIGNPROBE_ANALYSIS_DEPENDENCY_GRAPH_H_
